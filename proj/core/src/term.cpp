// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/term.hpp"

namespace omv {

TermRef Term::var(std::string name, TypeRef t) {
  return TermRef(new Term(TermKind::Var, std::move(name), t, nullptr, nullptr));
}
TermRef Term::constant(std::string name, TypeRef t) {
  return TermRef(new Term(TermKind::Const, std::move(name), t, nullptr, nullptr));
}
TermRef Term::lam(std::string v, TypeRef vt, TermRef body) {
  return TermRef(new Term(TermKind::Lam, std::move(v), vt, std::move(body), nullptr));
}
TermRef Term::app(TermRef fn, TermRef arg) {
  return TermRef(new Term(TermKind::App, "", nullptr, std::move(fn), std::move(arg)));
}
TermRef Term::negate(TermRef a) {
  return TermRef(new Term(TermKind::Not, "", nullptr, std::move(a), nullptr));
}
TermRef Term::conj(TermRef a, TermRef b) {
  return TermRef(new Term(TermKind::And, "", nullptr, std::move(a), std::move(b)));
}
TermRef Term::disj(TermRef a, TermRef b) {
  return TermRef(new Term(TermKind::Or, "", nullptr, std::move(a), std::move(b)));
}
TermRef Term::implies(TermRef a, TermRef b) {
  return TermRef(new Term(TermKind::Implies, "", nullptr, std::move(a), std::move(b)));
}
TermRef Term::iff(TermRef a, TermRef b) {
  return TermRef(new Term(TermKind::Iff, "", nullptr, std::move(a), std::move(b)));
}
TermRef Term::eq(TermRef a, TermRef b) {
  return TermRef(new Term(TermKind::Eq, "", nullptr, std::move(a), std::move(b)));
}
TermRef Term::forall(std::string v, TypeRef vt, TermRef body) {
  return TermRef(new Term(TermKind::Forall, std::move(v), vt, std::move(body), nullptr));
}
TermRef Term::exists(std::string v, TypeRef vt, TermRef body) {
  return TermRef(new Term(TermKind::Exists, std::move(v), vt, std::move(body), nullptr));
}
TermRef Term::truth() {
  static TermRef t(new Term(TermKind::True, "", nullptr, nullptr, nullptr));
  return t;
}
TermRef Term::falsity() {
  static TermRef f(new Term(TermKind::False, "", nullptr, nullptr, nullptr));
  return f;
}

std::string Term::str() const {
  switch (kind_) {
    case TermKind::Var: return name_;
    case TermKind::Const: return name_;
    case TermKind::Lam: return "(\\" + name_ + ":" + type_->str() + ". " + a_->str() + ")";
    case TermKind::App: return "(" + a_->str() + " " + b_->str() + ")";
    case TermKind::Not: return "~" + a_->str();
    case TermKind::And: return "(" + a_->str() + " & " + b_->str() + ")";
    case TermKind::Or: return "(" + a_->str() + " | " + b_->str() + ")";
    case TermKind::Implies: return "(" + a_->str() + " -> " + b_->str() + ")";
    case TermKind::Iff: return "(" + a_->str() + " <-> " + b_->str() + ")";
    case TermKind::Eq: return "(" + a_->str() + " = " + b_->str() + ")";
    case TermKind::Forall: return "(all " + name_ + ":" + type_->str() + ". " + a_->str() + ")";
    case TermKind::Exists: return "(ex " + name_ + ":" + type_->str() + ". " + a_->str() + ")";
    case TermKind::True: return "true";
    case TermKind::False: return "false";
  }
  return "?";
}

namespace {

TypeRef check(const TermRef& t, TypeContext& ctx) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Const: {
      auto it = ctx.find(t->name());
      if (it == ctx.end()) throw UnboundName(t->name());
      if (it->second != t->var_type())
        throw TypeError(t->str(), it->second->str(), t->var_type()->str());
      return t->var_type();
    }
    case TermKind::Lam: {
      auto it = ctx.find(t->name());
      TypeRef shadowed = (it == ctx.end()) ? nullptr : it->second;
      ctx[t->name()] = t->var_type();
      TypeRef body = check(t->child_a(), ctx);
      if (shadowed) ctx[t->name()] = shadowed; else ctx.erase(t->name());
      return Type::fun(t->var_type(), body);
    }
    case TermKind::App: {
      TypeRef f = check(t->child_a(), ctx);
      TypeRef a = check(t->child_b(), ctx);
      if (!f->is_fun())
        throw TypeError(t->str(), "a function type", f->str());
      if (f->domain() != a)
        throw TypeError(t->str(), f->domain()->str(), a->str());
      return f->codomain();
    }
    case TermKind::Not: {
      TypeRef a = check(t->child_a(), ctx);
      if (a != Type::boolean()) throw TypeError(t->str(), "bool", a->str());
      return Type::boolean();
    }
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies:
    case TermKind::Iff: {
      TypeRef a = check(t->child_a(), ctx);
      TypeRef b = check(t->child_b(), ctx);
      if (a != Type::boolean()) throw TypeError(t->str(), "bool", a->str());
      if (b != Type::boolean()) throw TypeError(t->str(), "bool", b->str());
      return Type::boolean();
    }
    case TermKind::Eq: {
      TypeRef a = check(t->child_a(), ctx);
      TypeRef b = check(t->child_b(), ctx);
      if (a != b) throw TypeError(t->str(), a->str(), b->str());
      return Type::boolean();
    }
    case TermKind::Forall:
    case TermKind::Exists: {
      auto it = ctx.find(t->name());
      TypeRef shadowed = (it == ctx.end()) ? nullptr : it->second;
      ctx[t->name()] = t->var_type();
      TypeRef body = check(t->child_a(), ctx);
      if (shadowed) ctx[t->name()] = shadowed; else ctx.erase(t->name());
      if (body != Type::boolean()) throw TypeError(t->str(), "bool", body->str());
      return Type::boolean();
    }
    case TermKind::True:
    case TermKind::False:
      return Type::boolean();
  }
  throw TypeError("unreachable term kind");
}

}  // namespace

TypeRef typecheck(const TermRef& term, const TypeContext& context) {
  TypeContext ctx = context;
  return check(term, ctx);
}

}  // namespace omv
