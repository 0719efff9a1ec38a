// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <map>

#include "omv/denotation.hpp"
#include "omv/term.hpp"

namespace omv {

using Valuation = std::map<std::string, Denotation>;

constexpr uint64_t kDefaultCeiling = uint64_t{1} << 24;

/// Direct denotational evaluation over finite domains.
///
/// Total and deterministic for well-typed terms whose free variables are
/// covered by `assignment` and whose constants are covered by `constants`.
/// Quantifiers enumerate every denotation of the bound type; lambdas build
/// their full table. This is the plain reference path; the search uses the
/// compiled evaluator and re-checks its verdicts against this one.
Denotation eval(const TermRef& term, const Valuation& constants,
                const Valuation& assignment, const SizeContext& sizes,
                uint64_t ceiling = kDefaultCeiling);

}  // namespace omv
