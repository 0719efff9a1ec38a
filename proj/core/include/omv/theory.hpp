// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <string>
#include <vector>

#include "omv/surface.hpp"

namespace omv {

struct ConstDecl {
  std::string name;
  TypeRef type;
};

struct DefDecl {
  std::string name;
  std::vector<std::pair<std::string, SortTag>> params;
  SurfaceRef body;

  TypeRef type() const {
    TypeRef t = Type::lifted();
    for (auto it = params.rbegin(); it != params.rend(); ++it)
      t = Type::fun(sort_type(it->second), t);
    return t;
  }
};

struct NamedFormula {
  std::string name;
  SurfaceRef formula;
};

/// A named collection of logic tag, quantifier mode, constant declarations,
/// definitions, axioms and conjectures. Definitions are non-recursive and
/// may only use earlier definitions; names are unique per namespace
/// (constants and definitions share one namespace, axioms and conjectures
/// each have their own).
struct Theory {
  std::string name;
  FrameClass logic = FrameClass::K;
  QuantMode quant = QuantMode::Possibilist;
  std::vector<ConstDecl> consts;
  std::vector<DefDecl> defs;
  std::vector<NamedFormula> axioms;
  std::vector<NamedFormula> conjectures;

  SurfaceContext context() const;

  const NamedFormula* find_axiom(const std::string& n) const;
  const NamedFormula* find_conjecture(const std::string& n) const;

  /// A copy of this theory whose axiom list is exactly `premises`, looked
  /// up among the axioms first and the conjectures second (so derived
  /// statements can serve as premises of a dependency check).
  Theory with_premises(const std::vector<std::string>& premises) const;
};

}  // namespace omv
