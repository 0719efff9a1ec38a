// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/embed.hpp"

#include <vector>

namespace omv {

namespace {

struct Embedder {
  QuantMode mode;
  const EmbedEnv& env;
  int gensym = 0;
  // surface name -> (kernel name, kernel type); innermost last
  std::vector<std::tuple<std::string, std::string, TypeRef>> scope;

  std::string fresh(const std::string& base) {
    return base + "!" + std::to_string(gensym++);
  }

  std::string fresh_world() { return fresh("w"); }

  bool name_in_scope(const std::string& n) const {
    for (const auto& [s, k, t] : scope)
      if (s == n || k == n) return true;
    // Binders shadowing a declared constant or definition are renamed too,
    // so every kernel name refers to exactly one thing.
    return env.decls.consts.count(n) > 0 || env.decls.defs.count(n) > 0;
  }

  // Binds a surface name, renaming apart if it would shadow.
  std::string bind(const std::string& n, TypeRef t) {
    std::string kernel_name = name_in_scope(n) ? fresh(n) : n;
    scope.emplace_back(n, kernel_name, t);
    return kernel_name;
  }
  void unbind() { scope.pop_back(); }

  TermRef r_const() const {
    return Term::constant(kAccessibilityName, Type::accessibility());
  }
  TermRef e_const() const {
    return Term::constant(kExistenceName, Type::property());
  }

  // Wraps a pointwise combination of lifted operands into a new lambda.
  template <typename F>
  TermRef lift(F&& make_body) {
    std::string w = fresh_world();
    TermRef wv = Term::var(w, Type::world());
    return Term::lam(w, Type::world(), make_body(wv));
  }

  TermRef at(const TermRef& lifted, const TermRef& world) {
    return Term::app(lifted, world);
  }

  TermRef go(const SurfaceRef& e) {
    switch (e->kind) {
      case SurfaceKind::Var: {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (std::get<0>(*it) == e->name)
            return Term::var(std::get<1>(*it), std::get<2>(*it));
        }
        // Free occurrence: treat like a constant lookup below.
        [[fallthrough]];
      }
      case SurfaceKind::ConstRef: {
        if (auto it = env.def_terms.find(e->name); it != env.def_terms.end())
          return it->second;
        if (auto it = env.decls.consts.find(e->name); it != env.decls.consts.end())
          return Term::constant(e->name, it->second);
        throw EmbedError("unknown constant '" + e->name + "'");
      }
      case SurfaceKind::Top:
        return lift([&](const TermRef&) { return Term::truth(); });
      case SurfaceKind::Bot:
        return lift([&](const TermRef&) { return Term::falsity(); });
      case SurfaceKind::App:
        return Term::app(go(e->a), go(e->b));
      case SurfaceKind::Lam: {
        std::string v = bind(e->name, sort_type(e->sort));
        TermRef body = go(e->a);
        unbind();
        return Term::lam(v, sort_type(e->sort), body);
      }
      case SurfaceKind::Not: {
        TermRef a = go(e->a);
        return lift([&](const TermRef& w) { return Term::negate(at(a, w)); });
      }
      case SurfaceKind::And:
      case SurfaceKind::Or:
      case SurfaceKind::Implies:
      case SurfaceKind::Iff: {
        TermRef a = go(e->a);
        TermRef b = go(e->b);
        return lift([&](const TermRef& w) {
          switch (e->kind) {
            case SurfaceKind::And: return Term::conj(at(a, w), at(b, w));
            case SurfaceKind::Or: return Term::disj(at(a, w), at(b, w));
            case SurfaceKind::Implies: return Term::implies(at(a, w), at(b, w));
            default: return Term::iff(at(a, w), at(b, w));
          }
        });
      }
      case SurfaceKind::Eq:
      case SurfaceKind::Neq: {
        TermRef a = go(e->a);
        TermRef b = go(e->b);
        return lift([&](const TermRef&) {
          TermRef eq = Term::eq(a, b);
          return e->kind == SurfaceKind::Eq ? eq : Term::negate(eq);
        });
      }
      case SurfaceKind::Box: {
        TermRef a = go(e->a);
        return lift([&](const TermRef& w) {
          std::string v = fresh_world();
          TermRef vv = Term::var(v, Type::world());
          TermRef reach = Term::app(Term::app(r_const(), w), vv);
          return Term::forall(v, Type::world(), Term::implies(reach, at(a, vv)));
        });
      }
      case SurfaceKind::Dia: {
        TermRef a = go(e->a);
        return lift([&](const TermRef& w) {
          std::string v = fresh_world();
          TermRef vv = Term::var(v, Type::world());
          TermRef reach = Term::app(Term::app(r_const(), w), vv);
          return Term::exists(v, Type::world(), Term::conj(reach, at(a, vv)));
        });
      }
      case SurfaceKind::Forall:
      case SurfaceKind::Exists: {
        bool is_all = e->kind == SurfaceKind::Forall;
        TypeRef bt = sort_type(e->sort);
        bool actualist_guard =
            mode == QuantMode::ActualistFirstOrder && e->sort == SortTag::Indiv;
        std::string v = bind(e->name, bt);
        TermRef body = go(e->a);
        unbind();
        return lift([&](const TermRef& w) {
          TermRef opened = at(body, w);
          TermRef xv = Term::var(v, bt);
          if (actualist_guard) {
            TermRef exists_here = Term::app(Term::app(e_const(), xv), w);
            opened = is_all ? Term::implies(exists_here, opened)
                            : Term::conj(exists_here, opened);
          }
          return is_all ? Term::forall(v, bt, opened) : Term::exists(v, bt, opened);
        });
      }
    }
    throw EmbedError("malformed surface expression");
  }
};

}  // namespace

TermRef embed(const SurfaceRef& formula, QuantMode mode, const EmbedEnv& env) {
  // Reject ill-sorted input early so the kernel term is always well-typed.
  surface_typecheck(formula, env.decls);
  Embedder em{mode, env, 0, {}};
  return em.go(formula);
}

TermRef validity_closure(const TermRef& lifted, const TypeContext& context) {
  TypeRef t = typecheck(lifted, context);
  if (t != Type::lifted())
    throw EmbedError("validity closure needs a world-lifted term, found " + t->str());
  TermRef w = Term::var("w!valid", Type::world());
  return Term::forall("w!valid", Type::world(), Term::app(lifted, w));
}

bool frame_satisfied(uint64_t r_index, FrameClass f, int worlds) {
  auto reflexive = [&] {
    for (int u = 0; u < worlds; ++u)
      if (!rel_at(r_index, u, u, worlds)) return false;
    return true;
  };
  auto symmetric = [&] {
    for (int u = 0; u < worlds; ++u)
      for (int v = 0; v < worlds; ++v)
        if (rel_at(r_index, u, v, worlds) != rel_at(r_index, v, u, worlds)) return false;
    return true;
  };
  auto transitive = [&] {
    for (int u = 0; u < worlds; ++u)
      for (int v = 0; v < worlds; ++v)
        for (int z = 0; z < worlds; ++z)
          if (rel_at(r_index, u, v, worlds) && rel_at(r_index, v, z, worlds) &&
              !rel_at(r_index, u, z, worlds))
            return false;
    return true;
  };
  switch (f) {
    case FrameClass::K: return true;
    case FrameClass::KT: return reflexive();
    case FrameClass::KB: return symmetric();
    case FrameClass::S5: return reflexive() && symmetric() && transitive();
  }
  return false;
}

TypeContext EmbeddedTheory::kernel_context() const {
  TypeContext ctx;
  for (const auto& [n, t] : constants) ctx[n] = t;
  ctx[kAccessibilityName] = Type::accessibility();
  ctx[kExistenceName] = Type::property();
  return ctx;
}

EmbeddedTheory embed_theory(const Theory& theory, std::optional<FrameClass> logic,
                            std::optional<QuantMode> quant) {
  EmbeddedTheory out;
  out.name = theory.name;
  out.frame = logic.value_or(theory.logic);
  out.quant = quant.value_or(theory.quant);

  EmbedEnv env;
  for (const auto& c : theory.consts) {
    if (c.name == kAccessibilityName || c.name == kExistenceName)
      throw EmbedError("'" + c.name + "' is reserved for the embedding");
    env.decls.consts[c.name] = c.type;
    out.constants.emplace_back(c.name, c.type);
  }

  TypeContext kctx = out.kernel_context();

  // Definitions expand in order; each body may use only earlier ones.
  for (const auto& d : theory.defs) {
    SurfaceContext body_ctx = env.decls;
    for (const auto& [pname, psort] : d.params) body_ctx.consts[pname] = sort_type(psort);
    surface_typecheck(d.body, body_ctx);

    Embedder em{out.quant, env, 0, {}};
    std::vector<std::pair<std::string, TypeRef>> bound;
    for (const auto& [pname, psort] : d.params)
      bound.emplace_back(em.bind(pname, sort_type(psort)), sort_type(psort));
    TermRef body = em.go(d.body);
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      body = Term::lam(it->first, it->second, body);

    typecheck(body, kctx);
    env.def_terms[d.name] = body;
    env.decls.defs[d.name] = d.type();
    out.defs.emplace_back(d.name, body);
  }

  auto compile_check = [&](const NamedFormula& f) {
    EmbeddedTheory::Check c;
    c.name = f.name;
    c.lifted = embed(f.formula, out.quant, env);
    c.validity = validity_closure(c.lifted, kctx);
    return c;
  };
  for (const auto& a : theory.axioms) out.axioms.push_back(compile_check(a));
  for (const auto& c : theory.conjectures) out.conjectures.push_back(compile_check(c));

  for (const auto& c : theory.consts) {
    if (c.type != Type::property_collection()) continue;
    // The parser reads every identifier as a Var node, so the pattern uses
    // Var for the constant as well; free names compare by spelling.
    SurfaceRef pattern = SurfaceFormula::quant(
        SurfaceKind::Forall, "ph", SortTag::Property,
        SurfaceFormula::binary(
            SurfaceKind::Iff,
            SurfaceFormula::app(
                SurfaceFormula::var(c.name),
                SurfaceFormula::lam("x", SortTag::Indiv,
                                    SurfaceFormula::unary(
                                        SurfaceKind::Not,
                                        SurfaceFormula::app(SurfaceFormula::var("ph"),
                                                            SurfaceFormula::var("x"))))),
            SurfaceFormula::unary(SurfaceKind::Not,
                                  SurfaceFormula::app(SurfaceFormula::var(c.name),
                                                      SurfaceFormula::var("ph")))));
    for (const auto& ax : theory.axioms) {
      if (SurfaceFormula::alpha_equal(ax.formula, pattern)) {
        out.pair_axiom_constants.push_back(c.name);
        break;
      }
    }
  }
  return out;
}

}  // namespace omv
