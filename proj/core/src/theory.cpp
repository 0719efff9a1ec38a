// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/theory.hpp"

#include "omv/errors.hpp"

namespace omv {

SurfaceContext Theory::context() const {
  SurfaceContext ctx;
  for (const auto& c : consts) ctx.consts[c.name] = c.type;
  for (const auto& d : defs) ctx.defs[d.name] = d.type();
  return ctx;
}

const NamedFormula* Theory::find_axiom(const std::string& n) const {
  for (const auto& a : axioms)
    if (a.name == n) return &a;
  return nullptr;
}

const NamedFormula* Theory::find_conjecture(const std::string& n) const {
  for (const auto& c : conjectures)
    if (c.name == n) return &c;
  return nullptr;
}

Theory Theory::with_premises(const std::vector<std::string>& premises) const {
  Theory t = *this;
  t.axioms.clear();
  for (const auto& p : premises) {
    if (const NamedFormula* ax = find_axiom(p)) {
      t.axioms.push_back(*ax);
    } else if (const NamedFormula* cj = find_conjecture(p)) {
      t.axioms.push_back(*cj);
    } else {
      throw ModelError("theory '" + name + "' has no axiom or conjecture named '" + p + "'");
    }
  }
  return t;
}

}  // namespace omv
