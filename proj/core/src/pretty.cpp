// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/pretty.hpp"

#include <optional>
#include <sstream>

namespace omv {

namespace {

// Matches the parser's default-sort rule so annotations are only printed
// when the name alone would not recover the sort.
std::optional<SortTag> default_sort(const std::string& name) {
  if (name.rfind("ph", 0) == 0 || name.rfind("ps", 0) == 0) return SortTag::Property;
  switch (name[0]) {
    case 'x': case 'y': case 'z': case 'u': case 'v': return SortTag::Indiv;
    default: return std::nullopt;
  }
}

std::string binder_text(const std::string& name, SortTag sort) {
  auto d = default_sort(name);
  if (d && *d == sort) return name;
  return name + ":" + to_string(sort);
}

// Precedence levels, loosest first. Quantifiers and lambdas live at level 0
// and must be parenthesized anywhere tighter.
enum Level : int {
  kQuant = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5, kCmp = 6,
  kApp = 7, kAtom = 8,
};

int level_of(const SurfaceRef& f) {
  switch (f->kind) {
    case SurfaceKind::Forall:
    case SurfaceKind::Exists:
    case SurfaceKind::Lam: return kQuant;
    case SurfaceKind::Iff: return kIff;
    case SurfaceKind::Implies: return kImp;
    case SurfaceKind::Or: return kOr;
    case SurfaceKind::And: return kAnd;
    case SurfaceKind::Not:
    case SurfaceKind::Box:
    case SurfaceKind::Dia: return kUnary;
    case SurfaceKind::Eq:
    case SurfaceKind::Neq: return kCmp;
    case SurfaceKind::App: return kApp;
    default: return kAtom;
  }
}

void print(std::ostream& os, const SurfaceRef& f, int min_level) {
  bool parens = level_of(f) < min_level;
  if (parens) os << "(";
  switch (f->kind) {
    case SurfaceKind::Var:
    case SurfaceKind::ConstRef: os << f->name; break;
    case SurfaceKind::Top: os << "top"; break;
    case SurfaceKind::Bot: os << "bot"; break;
    case SurfaceKind::Forall:
    case SurfaceKind::Exists:
      os << (f->kind == SurfaceKind::Forall ? "all " : "ex ")
         << binder_text(f->name, f->sort) << ". ";
      print(os, f->a, kQuant);
      break;
    case SurfaceKind::Lam:
      os << "\\" << binder_text(f->name, f->sort) << ". ";
      print(os, f->a, kQuant);
      break;
    case SurfaceKind::Iff:
      print(os, f->a, kIff); os << " <-> "; print(os, f->b, kImp);
      break;
    case SurfaceKind::Implies:
      print(os, f->a, kOr); os << " -> "; print(os, f->b, kImp);
      break;
    case SurfaceKind::Or:
      print(os, f->a, kOr); os << " | "; print(os, f->b, kAnd);
      break;
    case SurfaceKind::And:
      print(os, f->a, kAnd); os << " & "; print(os, f->b, kUnary);
      break;
    case SurfaceKind::Not:
    case SurfaceKind::Box:
    case SurfaceKind::Dia: {
      os << (f->kind == SurfaceKind::Not ? "~" :
             f->kind == SurfaceKind::Box ? "box " : "dia ");
      // Comparisons parse fine under a prefix operator, but ~x = y reads
      // badly; always parenthesize them.
      bool wrap = f->a->kind == SurfaceKind::Eq || f->a->kind == SurfaceKind::Neq;
      print(os, f->a, wrap ? kApp : kUnary);
      break;
    }
    case SurfaceKind::Eq:
    case SurfaceKind::Neq:
      print(os, f->a, kApp);
      os << (f->kind == SurfaceKind::Eq ? " = " : " != ");
      print(os, f->b, kApp);
      break;
    case SurfaceKind::App:
      print(os, f->a, kApp); os << " "; print(os, f->b, kAtom);
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::string print_type(TypeRef t) {
  switch (t->kind()) {
    case TypeKind::Indiv: return "i";
    case TypeKind::Bool: return "bool";
    case TypeKind::World: return "world";
    case TypeKind::Fun: {
      if (t == Type::lifted()) return "wo";
      std::string d = print_type(t->domain());
      if (t->domain()->is_fun() && t->domain() != Type::lifted()) d = "(" + d + ")";
      return d + ">" + print_type(t->codomain());
    }
  }
  return "?";
}

std::string print_formula(const SurfaceRef& f) {
  std::ostringstream os;
  print(os, f, kQuant);
  return os.str();
}

std::string print_theory(const Theory& t) {
  std::ostringstream os;
  os << "theory " << t.name << "\n";
  os << "logic " << to_string(t.logic) << "\n";
  os << "quant " << to_string(t.quant) << "\n";
  if (!t.consts.empty()) os << "\n";
  for (const auto& c : t.consts)
    os << "const " << c.name << " : " << print_type(c.type) << "\n";
  if (!t.defs.empty()) os << "\n";
  for (const auto& d : t.defs) {
    os << "def " << d.name;
    for (const auto& [pn, ps] : d.params) {
      auto ds = default_sort(pn);
      if (ds && *ds == ps) os << " " << pn;
      else os << " (" << pn << ":" << to_string(ps) << ")";
    }
    os << " : " << print_formula(d.body) << "\n";
  }
  if (!t.axioms.empty()) os << "\n";
  for (const auto& a : t.axioms)
    os << "axiom " << a.name << " : " << print_formula(a.formula) << "\n";
  if (!t.conjectures.empty()) os << "\n";
  for (const auto& c : t.conjectures)
    os << "conjecture " << c.name << " : " << print_formula(c.formula) << "\n";
  return os.str();
}

}  // namespace omv
