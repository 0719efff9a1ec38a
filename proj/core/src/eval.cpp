// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/eval.hpp"

#include <utility>
#include <vector>

namespace omv {

namespace {

struct Scope {
  const Valuation* constants;
  const Valuation* assignment;
  std::vector<std::pair<std::string, Denotation>> bound;  // innermost last
  const SizeContext* sizes;
  uint64_t ceiling;

  const Denotation& lookup(const std::string& name) const {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->first == name) return it->second;
    if (auto it = assignment->find(name); it != assignment->end()) return it->second;
    if (auto it = constants->find(name); it != constants->end()) return it->second;
    throw UnboundName(name);
  }
};

Denotation run(const TermRef& t, Scope& sc) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Const:
      return sc.lookup(t->name());
    case TermKind::True: return Denotation::boolean(true);
    case TermKind::False: return Denotation::boolean(false);
    case TermKind::Not: return Denotation::boolean(!run(t->child_a(), sc).as_bool());
    case TermKind::And:
      return Denotation::boolean(run(t->child_a(), sc).as_bool() &&
                                 run(t->child_b(), sc).as_bool());
    case TermKind::Or:
      return Denotation::boolean(run(t->child_a(), sc).as_bool() ||
                                 run(t->child_b(), sc).as_bool());
    case TermKind::Implies:
      return Denotation::boolean(!run(t->child_a(), sc).as_bool() ||
                                 run(t->child_b(), sc).as_bool());
    case TermKind::Iff:
      return Denotation::boolean(run(t->child_a(), sc).as_bool() ==
                                 run(t->child_b(), sc).as_bool());
    case TermKind::Eq:
      return Denotation::boolean(run(t->child_a(), sc) == run(t->child_b(), sc));
    case TermKind::App: {
      Denotation fn = run(t->child_a(), sc);
      Denotation arg = run(t->child_b(), sc);
      uint64_t k = canonical_index(arg, *sc.sizes);
      return fn.entries().at(size_t(k));
    }
    case TermKind::Lam: {
      DenotationStream dom(t->var_type(), *sc.sizes, sc.ceiling);
      std::vector<Denotation> entries;
      entries.reserve(size_t(dom.count()));
      sc.bound.emplace_back(t->name(), Denotation::boolean(false));
      while (!dom.done()) {
        sc.bound.back().second = dom.next();
        entries.push_back(run(t->child_a(), sc));
      }
      sc.bound.pop_back();
      // Every type has at least one inhabitant, so entries is nonempty.
      TypeRef fun_t = Type::fun(t->var_type(), entries.front().type());
      return Denotation::table(fun_t, std::move(entries));
    }
    case TermKind::Forall:
    case TermKind::Exists: {
      bool is_all = t->kind() == TermKind::Forall;
      DenotationStream dom(t->var_type(), *sc.sizes, sc.ceiling);
      sc.bound.emplace_back(t->name(), Denotation::boolean(false));
      bool result = is_all;
      while (!dom.done()) {
        sc.bound.back().second = dom.next();
        bool v = run(t->child_a(), sc).as_bool();
        if (is_all && !v) { result = false; break; }
        if (!is_all && v) { result = true; break; }
      }
      sc.bound.pop_back();
      return Denotation::boolean(result);
    }
  }
  throw TypeError("unreachable term kind in eval");
}

}  // namespace

Denotation eval(const TermRef& term, const Valuation& constants,
                const Valuation& assignment, const SizeContext& sizes,
                uint64_t ceiling) {
  Scope sc{&constants, &assignment, {}, &sizes, ceiling};
  return run(term, sc);
}

}  // namespace omv
