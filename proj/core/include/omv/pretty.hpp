// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <string>

#include "omv/theory.hpp"

namespace omv {

/// Surface spelling of an embedded type (i, wo, a>b).
std::string print_type(TypeRef t);

/// Minimal-parenthesis rendering; parsing the result yields the same AST.
std::string print_formula(const SurfaceRef& f);

/// Whole theory file, in the layout parse_theory accepts.
std::string print_theory(const Theory& t);

}  // namespace omv
