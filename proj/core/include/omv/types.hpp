// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "omv/errors.hpp"

namespace omv {

enum class TypeKind : uint8_t { Bool, World, Indiv, Fun };

/// Simple types of the classical higher-order core.
///
/// Types are interned: structurally equal types are the same object, so
/// equality is pointer comparison and TypeRef values can be shared freely
/// across threads once created.
class Type {
 public:
  TypeKind kind() const { return kind_; }
  bool is_fun() const { return kind_ == TypeKind::Fun; }
  const Type* domain() const { return dom_; }
  const Type* codomain() const { return cod_; }

  static const Type* boolean();
  static const Type* world();
  static const Type* indiv();
  static const Type* fun(const Type* dom, const Type* cod);

  /// World -> Bool; the type of world-lifted propositions.
  static const Type* lifted();
  /// Indiv -> (World -> Bool); intensional properties.
  static const Type* property();
  /// (Indiv -> (World -> Bool)) -> (World -> Bool); property collections,
  /// and also the type of the positivity predicate.
  static const Type* property_collection();
  /// World -> World -> Bool; accessibility relations.
  static const Type* accessibility();

  std::string str() const;

 private:
  Type(TypeKind k, const Type* d, const Type* c) : kind_(k), dom_(d), cod_(c) {}
  TypeKind kind_;
  const Type* dom_;
  const Type* cod_;
  friend class TypeStore;
};

using TypeRef = const Type*;

/// Denotation-space sizes at a fixed finite frame: |Bool| = 2, |World| = w,
/// |Indiv| = d, |Fun(a,b)| = |b|^|a|. Sizes that do not fit in 63 bits are
/// reported as absent.
class SizeContext {
 public:
  SizeContext(int worlds, int indiv);

  int worlds() const { return worlds_; }
  int indiv() const { return indiv_; }

  std::optional<uint64_t> size(TypeRef t) const;

  /// Size of the denotation space, throwing BoundOverflow if it is absent
  /// or exceeds `ceiling`.
  uint64_t size_checked(TypeRef t, uint64_t ceiling) const;

 private:
  int worlds_;
  int indiv_;
};

}  // namespace omv
