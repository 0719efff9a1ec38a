// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <optional>

#include "omv/term.hpp"
#include "omv/theory.hpp"

namespace omv {

// Distinguished constants introduced by the embedding. Theories may not
// declare these names themselves.
inline constexpr const char* kAccessibilityName = "R";
inline constexpr const char* kExistenceName = "E";

/// Definitions already embedded, for splicing into later formulas.
struct EmbedEnv {
  SurfaceContext decls;
  std::map<std::string, TermRef> def_terms;
};

/// Compiles a surface formula into a core term of type World>Bool.
///
/// Box s becomes \w. all v. R w v -> s v and Dia dually; lifted connectives
/// compile pointwise; possibilist quantifiers quantify the plain bound type;
/// in actualist mode an individual quantifier is guarded by the existence
/// map: \w. all x. E x w -> body w (and dually for ex). Bound variables are
/// renamed apart during compilation.
TermRef embed(const SurfaceRef& formula, QuantMode mode, const EmbedEnv& env);

/// Closes a lifted term into a Bool term asserting truth at all worlds:
/// all w. t w. Throws EmbedError if `t` is not world-lifted.
TermRef validity_closure(const TermRef& lifted, const TypeContext& context);

/// Accessibility decoding: whether u reaches v under the relation with
/// canonical index `r_index` on `worlds` worlds.
inline bool rel_at(uint64_t r_index, int u, int v, int worlds) {
  int bit = (worlds - 1 - u) * worlds + (worlds - 1 - v);
  return (r_index >> bit) & 1;
}

/// Existence decoding: whether individual x exists at world w under the
/// existence map with canonical index `e_index`.
inline bool exists_at(uint64_t e_index, int x, int w, int worlds, int indiv) {
  int bit = (indiv - 1 - x) * worlds + (worlds - 1 - w);
  return (e_index >> bit) & 1;
}

/// Relational conditions of a frame class, checked on a decoded relation.
bool frame_satisfied(uint64_t r_index, FrameClass f, int worlds);

/// A theory compiled through the embedding: one lifted term and one closed
/// validity term per axiom and conjecture, plus the kernel types of the
/// declared constants (R and E come on top of these).
struct EmbeddedTheory {
  std::string name;
  FrameClass frame = FrameClass::K;
  QuantMode quant = QuantMode::Possibilist;
  std::vector<std::pair<std::string, TypeRef>> constants;

  struct Check {
    std::string name;
    TermRef lifted;
    TermRef validity;
  };
  std::vector<Check> axioms;
  std::vector<Check> conjectures;

  /// Embedded definition bodies, in declaration order (e.g. the God-like
  /// property as a closed lambda term); handy for inspecting models.
  std::vector<std::pair<std::string, TermRef>> defs;

  /// Constants c for which some axiom is (up to bound-variable renaming)
  /// the schema  all ph. c (\x. ~(ph x)) <-> ~(c ph)  - "either a property
  /// or its negation, but not both". The search generates candidates for
  /// such constants by choosing one member per complement pair.
  std::vector<std::string> pair_axiom_constants;

  bool has_pair_axiom(const std::string& c) const {
    for (const auto& n : pair_axiom_constants)
      if (n == c) return true;
    return false;
  }

  const Check* find_conjecture(const std::string& n) const {
    for (const auto& c : conjectures)
      if (c.name == n) return &c;
    return nullptr;
  }

  /// Declared constants plus R and E, as a kernel typing context.
  TypeContext kernel_context() const;
};

/// Embeds every definition, axiom and conjecture of a theory. `logic` and
/// `quant` override the theory's own header when given. Every resulting
/// term is type-checked; failures indicate a malformed theory and raise.
EmbeddedTheory embed_theory(const Theory& theory,
                            std::optional<FrameClass> logic = std::nullopt,
                            std::optional<QuantMode> quant = std::nullopt);

}  // namespace omv
