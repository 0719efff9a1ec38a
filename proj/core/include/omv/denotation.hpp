// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "omv/types.hpp"

namespace omv {

/// A concrete element of a finite denotation space: a truth value, a world
/// or individual index, or a full function table.
///
/// Canonical order. Every type's denotations are totally ordered:
///   Bool   false, true                     (indices 0, 1)
///   World  w0 .. w{n-1}                    (index = world number)
///   Indiv  x0 .. x{n-1}
///   Fun    tables ordered lexicographically by their entries along the
///          domain's canonical order; entry 0 is the most significant.
/// The index of a table is therefore
///   fold over entries: index = index * |codomain| + entry_index.
/// All evaluators, enumerators and search spaces use this one order.
class Denotation {
 public:
  static Denotation boolean(bool v);
  static Denotation world(uint32_t idx);
  static Denotation individual(uint32_t idx);
  static Denotation table(TypeRef fun_type, std::vector<Denotation> entries);

  TypeRef type() const { return type_; }
  bool as_bool() const { return std::get<bool>(v_); }
  uint32_t as_index() const { return std::get<uint32_t>(v_); }
  const std::vector<Denotation>& entries() const {
    return std::get<std::vector<Denotation>>(v_);
  }

  bool operator==(const Denotation& o) const { return type_ == o.type_ && v_ == o.v_; }
  bool operator!=(const Denotation& o) const { return !(*this == o); }

 private:
  Denotation(TypeRef t, std::variant<bool, uint32_t, std::vector<Denotation>> v)
      : type_(t), v_(std::move(v)) {}
  TypeRef type_;
  std::variant<bool, uint32_t, std::vector<Denotation>> v_;
};

/// Position of `d` in its type's canonical order.
uint64_t canonical_index(const Denotation& d, const SizeContext& sizes);

/// The denotation of `t` at canonical position `index`.
Denotation denotation_at(TypeRef t, uint64_t index, const SizeContext& sizes);

/// Stream over all denotations of a type at fixed frame sizes, in canonical
/// order. Restartable from any offset, so workers can each re-create their
/// own chunk. Construction throws BoundOverflow if the space exceeds
/// `ceiling`.
class DenotationStream {
 public:
  DenotationStream(TypeRef t, const SizeContext& sizes, uint64_t ceiling);

  uint64_t count() const { return count_; }
  bool done() const { return next_ >= count_; }
  void seek(uint64_t offset) { next_ = offset; }
  Denotation next();

 private:
  TypeRef type_;
  SizeContext sizes_;
  uint64_t count_;
  uint64_t next_ = 0;
};

/// Convenience: the whole stream, materialized.
std::vector<Denotation> enumerate_denotations(TypeRef t, const SizeContext& sizes,
                                              uint64_t ceiling);

}  // namespace omv
