// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/surface.hpp"

#include <vector>

#include "omv/errors.hpp"

namespace omv {

std::string to_string(QuantMode m) {
  return m == QuantMode::Possibilist ? "possibilist" : "actualist";
}
std::string to_string(FrameClass f) {
  switch (f) {
    case FrameClass::K: return "K";
    case FrameClass::KT: return "KT";
    case FrameClass::KB: return "KB";
    case FrameClass::S5: return "S5";
  }
  return "?";
}
std::optional<QuantMode> quant_mode_from(const std::string& s) {
  if (s == "possibilist") return QuantMode::Possibilist;
  if (s == "actualist") return QuantMode::ActualistFirstOrder;
  return std::nullopt;
}
std::optional<FrameClass> frame_class_from(const std::string& s) {
  if (s == "K") return FrameClass::K;
  if (s == "KT") return FrameClass::KT;
  if (s == "KB") return FrameClass::KB;
  if (s == "S5") return FrameClass::S5;
  return std::nullopt;
}

std::string to_string(SortTag s) {
  switch (s) {
    case SortTag::Indiv: return "i";
    case SortTag::Proposition: return "wo";
    case SortTag::Property: return "i>wo";
    case SortTag::PropertyCollection: return "coll";
  }
  return "?";
}

TypeRef sort_type(SortTag s) {
  switch (s) {
    case SortTag::Indiv: return Type::indiv();
    case SortTag::Proposition: return Type::lifted();
    case SortTag::Property: return Type::property();
    case SortTag::PropertyCollection: return Type::property_collection();
  }
  return Type::indiv();
}

namespace {
std::shared_ptr<SurfaceFormula> node(SurfaceKind k) {
  auto n = std::make_shared<SurfaceFormula>();
  n->kind = k;
  return n;
}
}  // namespace

SurfaceRef SurfaceFormula::var(std::string n, int line, int col) {
  auto e = node(SurfaceKind::Var);
  e->name = std::move(n);
  e->line = line;
  e->col = col;
  return e;
}
SurfaceRef SurfaceFormula::const_ref(std::string n, int line, int col) {
  auto e = node(SurfaceKind::ConstRef);
  e->name = std::move(n);
  e->line = line;
  e->col = col;
  return e;
}
SurfaceRef SurfaceFormula::app(SurfaceRef f, SurfaceRef x) {
  auto e = node(SurfaceKind::App);
  e->line = f->line;
  e->col = f->col;
  e->a = std::move(f);
  e->b = std::move(x);
  return e;
}
SurfaceRef SurfaceFormula::lam(std::string v, SortTag s, SurfaceRef body) {
  auto e = node(SurfaceKind::Lam);
  e->name = std::move(v);
  e->sort = s;
  e->a = std::move(body);
  return e;
}
SurfaceRef SurfaceFormula::unary(SurfaceKind k, SurfaceRef x) {
  auto e = node(k);
  e->line = x->line;
  e->col = x->col;
  e->a = std::move(x);
  return e;
}
SurfaceRef SurfaceFormula::binary(SurfaceKind k, SurfaceRef l, SurfaceRef r) {
  auto e = node(k);
  e->line = l->line;
  e->col = l->col;
  e->a = std::move(l);
  e->b = std::move(r);
  return e;
}
SurfaceRef SurfaceFormula::quant(SurfaceKind k, std::string v, SortTag s, SurfaceRef body) {
  auto e = node(k);
  e->name = std::move(v);
  e->sort = s;
  e->a = std::move(body);
  return e;
}
SurfaceRef SurfaceFormula::leaf(SurfaceKind k) { return node(k); }

bool SurfaceFormula::equal(const SurfaceRef& x, const SurfaceRef& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind || x->name != y->name || x->sort != y->sort) return false;
  return equal(x->a, y->a) && equal(x->b, y->b);
}

namespace {
bool alpha_eq(const SurfaceRef& x, const SurfaceRef& y,
              std::vector<std::pair<std::string, std::string>>& renaming) {
  if (!x || !y) return x == y;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case SurfaceKind::Var: {
      for (auto it = renaming.rbegin(); it != renaming.rend(); ++it) {
        if (it->first == x->name || it->second == y->name)
          return it->first == x->name && it->second == y->name;
      }
      return x->name == y->name;  // both free
    }
    case SurfaceKind::ConstRef:
      return x->name == y->name;
    case SurfaceKind::Lam:
    case SurfaceKind::Forall:
    case SurfaceKind::Exists: {
      if (x->sort != y->sort) return false;
      renaming.emplace_back(x->name, y->name);
      bool ok = alpha_eq(x->a, y->a, renaming);
      renaming.pop_back();
      return ok;
    }
    default:
      return alpha_eq(x->a, y->a, renaming) && alpha_eq(x->b, y->b, renaming);
  }
}
}  // namespace

bool SurfaceFormula::alpha_equal(const SurfaceRef& x, const SurfaceRef& y) {
  std::vector<std::pair<std::string, std::string>> renaming;
  return alpha_eq(x, y, renaming);
}

namespace {

[[noreturn]] void sort_error(const SurfaceRef& e, const std::string& msg) {
  throw SourceError(e->line, e->col, msg);
}

TypeRef infer(const SurfaceRef& e, const SurfaceContext& ctx,
              std::vector<std::pair<std::string, TypeRef>>& bound) {
  auto lifted = Type::lifted();
  switch (e->kind) {
    case SurfaceKind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (it->first == e->name) return it->second;
      if (auto t = ctx.lookup(e->name)) return *t;
      sort_error(e, "unbound name '" + e->name + "'");
    }
    case SurfaceKind::ConstRef: {
      if (auto t = ctx.lookup(e->name)) return *t;
      sort_error(e, "unknown constant '" + e->name + "'");
    }
    case SurfaceKind::Top:
    case SurfaceKind::Bot:
      return lifted;
    case SurfaceKind::Not:
    case SurfaceKind::Box:
    case SurfaceKind::Dia: {
      TypeRef a = infer(e->a, ctx, bound);
      if (a != lifted)
        sort_error(e, "operand must be a lifted proposition, found " + a->str());
      return lifted;
    }
    case SurfaceKind::And:
    case SurfaceKind::Or:
    case SurfaceKind::Implies:
    case SurfaceKind::Iff: {
      TypeRef a = infer(e->a, ctx, bound);
      TypeRef b = infer(e->b, ctx, bound);
      if (a != lifted || b != lifted)
        sort_error(e, "connective operands must be lifted propositions");
      return lifted;
    }
    case SurfaceKind::Eq:
    case SurfaceKind::Neq: {
      TypeRef a = infer(e->a, ctx, bound);
      TypeRef b = infer(e->b, ctx, bound);
      if (a != Type::indiv() || b != Type::indiv())
        sort_error(e, "equality compares individuals");
      return lifted;
    }
    case SurfaceKind::App: {
      TypeRef f = infer(e->a, ctx, bound);
      TypeRef x = infer(e->b, ctx, bound);
      if (!f->is_fun())
        sort_error(e, "cannot apply a non-function of type " + f->str());
      if (f->domain() != x)
        sort_error(e, "argument type " + x->str() + " does not match " + f->domain()->str());
      return f->codomain();
    }
    case SurfaceKind::Lam: {
      if (e->sort != SortTag::Indiv)
        sort_error(e, "lambda abstraction is over individuals");
      bound.emplace_back(e->name, sort_type(e->sort));
      TypeRef body = infer(e->a, ctx, bound);
      bound.pop_back();
      if (body != lifted)
        sort_error(e, "lambda body must be a lifted proposition");
      return Type::property();
    }
    case SurfaceKind::Forall:
    case SurfaceKind::Exists: {
      bound.emplace_back(e->name, sort_type(e->sort));
      TypeRef body = infer(e->a, ctx, bound);
      bound.pop_back();
      if (body != lifted)
        sort_error(e, "quantifier body must be a lifted proposition");
      return lifted;
    }
  }
  sort_error(e, "malformed surface expression");
}

}  // namespace

TypeRef surface_typecheck(const SurfaceRef& e, const SurfaceContext& ctx) {
  std::vector<std::pair<std::string, TypeRef>> bound;
  return infer(e, ctx, bound);
}

}  // namespace omv
