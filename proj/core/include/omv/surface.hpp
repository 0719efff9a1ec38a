// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "omv/types.hpp"

namespace omv {

/// Quantifier semantics for individuals. Possibilist quantifiers range over
/// the whole domain at every world; the actualist mode restricts first-order
/// quantifiers to the individuals existing at the world of evaluation and
/// keeps every higher-order quantifier possibilist.
enum class QuantMode : uint8_t { Possibilist, ActualistFirstOrder };

/// Relational frame conditions. Imposed on models during search, never as
/// axiom schemata: K none, KT reflexive, KB symmetric, S5 equivalence.
enum class FrameClass : uint8_t { K, KT, KB, S5 };

std::string to_string(QuantMode m);
std::string to_string(FrameClass f);
std::optional<QuantMode> quant_mode_from(const std::string& s);
std::optional<FrameClass> frame_class_from(const std::string& s);

/// Sorts a surface binder may quantify over (or abstract, for lambda).
enum class SortTag : uint8_t { Indiv, Proposition, Property, PropertyCollection };

std::string to_string(SortTag s);

/// Kernel type of each surface sort: Indiv, World>Bool, Indiv>(World>Bool),
/// and properties-to-lifted-bool respectively.
TypeRef sort_type(SortTag s);

enum class SurfaceKind : uint8_t {
  Var, ConstRef, App, Lam,
  Not, And, Or, Implies, Iff,
  Box, Dia,
  Forall, Exists,
  Eq, Neq,
  Top, Bot,
};

struct SurfaceFormula;
using SurfaceRef = std::shared_ptr<const SurfaceFormula>;

/// Higher-order modal AST as written in theory files. Propositions are
/// world-lifted; every binder carries an explicit sort.
struct SurfaceFormula {
  SurfaceKind kind;
  std::string name;        // Var / ConstRef / binder name
  SortTag sort = SortTag::Indiv;  // binder sort
  SurfaceRef a, b;
  int line = 0, col = 0;   // position in source text, when parsed

  static SurfaceRef var(std::string n, int line = 0, int col = 0);
  static SurfaceRef const_ref(std::string n, int line = 0, int col = 0);
  static SurfaceRef app(SurfaceRef f, SurfaceRef x);
  static SurfaceRef lam(std::string v, SortTag s, SurfaceRef body);
  static SurfaceRef unary(SurfaceKind k, SurfaceRef x);
  static SurfaceRef binary(SurfaceKind k, SurfaceRef l, SurfaceRef r);
  static SurfaceRef quant(SurfaceKind k, std::string v, SortTag s, SurfaceRef body);
  static SurfaceRef leaf(SurfaceKind k);

  /// Structural equality modulo source positions.
  static bool equal(const SurfaceRef& x, const SurfaceRef& y);
  /// Equality modulo bound-variable names (used for axiom-pattern detection).
  static bool alpha_equal(const SurfaceRef& x, const SurfaceRef& y);
};

/// Declared names visible to a formula: constants (with their kernel types)
/// and definitions (with the type their expansion has).
struct SurfaceContext {
  std::map<std::string, TypeRef> consts;
  std::map<std::string, TypeRef> defs;

  std::optional<TypeRef> lookup(const std::string& n) const {
    if (auto it = consts.find(n); it != consts.end()) return it->second;
    if (auto it = defs.find(n); it != defs.end()) return it->second;
    return std::nullopt;
  }
};

/// Infers the (kernel-embedded) type of a surface expression and checks the
/// surface discipline: connectives and modal operators act on lifted
/// propositions, equality compares individuals, applications match.
/// Throws SourceError with the node's position on violations.
TypeRef surface_typecheck(const SurfaceRef& e, const SurfaceContext& ctx);

}  // namespace omv
