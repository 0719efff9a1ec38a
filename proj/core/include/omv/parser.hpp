// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <string>

#include "omv/theory.hpp"

namespace omv {

/// Parses a theory file.
///
/// Concrete syntax (comments run from '#' to end of line):
///
///   theory NAME
///   logic K|KT|KB|S5
///   quant possibilist|actualist
///   const NAME : TYPE
///   def NAME PARAM* : FORMULA
///   axiom NAME : FORMULA
///   conjecture NAME : FORMULA
///
/// Types: `i` individuals, `wo` lifted propositions, `a>b` functions
/// (right-associative), `coll` shorthand for (i>wo)>wo. Formulas:
///
///   ~s | s & s | s \| s | s -> s | s <-> s | box s | dia s
///   | all v[:ty]. s | ex v[:ty]. s | \v. s | t = t | t != t
///   | top | bot | f a
///
/// with precedence ~ > & > \| > -> > <-> and quantifier bodies extending
/// right. Unannotated binders default by name: x,y,z,u,v... are individuals
/// and ph,ps... are properties; anything else must be annotated. `R` and
/// `E` are reserved.
///
/// Throws SourceError (with line/column and the acceptable tokens) on
/// malformed input; duplicate names and forward/self-referential
/// definitions are also reported as SourceError.
Theory parse_theory(const std::string& text);

/// Parses a single formula against a declaration context and checks its
/// sorts. Throws SourceError.
SurfaceRef parse_formula(const std::string& text, const SurfaceContext& context);

}  // namespace omv
