// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <functional>

#include "omv/model.hpp"

namespace omv {

/// Exhaustive bounded model search, layered (w,d) lexicographically from
/// (1,1) up to (max_worlds, max_indiv). Within a layer, candidates are
/// enumerated in canonical order: accessibility relation, then existence
/// map, then each declared constant's candidate space. Frame conditions
/// filter R; axioms are evaluated as early as their constants are bound;
/// the first model is therefore the canonically least one.
///
/// All layers are planned before any search starts, so an infeasible bound
/// (candidate or quantifier space above the ceiling) raises BoundOverflow
/// up front.

/// Least model of the theory's axioms, or UnsatisfiableUpTo. When a layer
/// contains models, the first is returned and the layer is scanned to the
/// end to count ties (Verdict::models_at_minimal).
Verdict find_model(const EmbeddedTheory& th, const Bounds& bounds,
                   const SearchOptions& opts = {});

/// Bounded entailment: searches for a model of the axioms where the named
/// conjecture is not valid. CounterexampleFound carries the canonically
/// least countermodel; otherwise NoCounterexampleUpTo. A refutation check
/// is the same search, read the other way around.
Verdict check_entailment(const EmbeddedTheory& th, const std::string& conjecture,
                         const Bounds& bounds, const SearchOptions& opts = {});

/// Streams every model of the theory within bounds, in canonical order
/// (sequential; the sink returns false to stop). Restart by filtering on
/// the models already seen, or by narrowing bounds.
void enumerate_models(const EmbeddedTheory& th, const Bounds& bounds,
                      const std::function<bool(const KripkeModel&)>& sink,
                      const SearchOptions& opts = {});

}  // namespace omv
