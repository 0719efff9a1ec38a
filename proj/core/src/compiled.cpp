// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/compiled.hpp"

#include <map>

namespace omv {

struct CompiledTerm::Node {
  enum class Op : uint8_t {
    True, False, Slot, Const,
    Not, And, Or, Implies, Iff, Eq,
    Forall, Exists, Lam, App, Let,
  };

  Op op;
  int slot = -1;        // Slot / binder target / Const index
  uint64_t count = 0;   // quantifier or lambda domain size
  uint64_t cod = 0;     // Lam / App codomain size
  std::vector<uint64_t> pow;  // App: pow[k] = cod^k, k in [0, domain size)
  std::unique_ptr<Node> a, b;

  uint64_t eval(std::span<const uint64_t> consts, std::vector<uint64_t>& slots) const {
    switch (op) {
      case Op::True: return 1;
      case Op::False: return 0;
      case Op::Slot: return slots[size_t(slot)];
      case Op::Const: return consts[size_t(slot)];
      case Op::Not: return 1 - a->eval(consts, slots);
      case Op::And: return a->eval(consts, slots) ? b->eval(consts, slots) : 0;
      case Op::Or: return a->eval(consts, slots) ? 1 : b->eval(consts, slots);
      case Op::Implies: return a->eval(consts, slots) ? b->eval(consts, slots) : 1;
      case Op::Iff: return a->eval(consts, slots) == b->eval(consts, slots) ? 1 : 0;
      case Op::Eq: return a->eval(consts, slots) == b->eval(consts, slots) ? 1 : 0;
      case Op::Forall: {
        for (uint64_t k = 0; k < count; ++k) {
          slots[size_t(slot)] = k;
          if (!a->eval(consts, slots)) return 0;
        }
        return 1;
      }
      case Op::Exists: {
        for (uint64_t k = 0; k < count; ++k) {
          slots[size_t(slot)] = k;
          if (a->eval(consts, slots)) return 1;
        }
        return 0;
      }
      case Op::Lam: {
        uint64_t idx = 0;
        for (uint64_t k = 0; k < count; ++k) {
          slots[size_t(slot)] = k;
          idx = idx * cod + a->eval(consts, slots);
        }
        return idx;
      }
      case Op::App: {
        uint64_t fn = a->eval(consts, slots);
        uint64_t arg = b->eval(consts, slots);
        return (fn / pow[pow.size() - 1 - size_t(arg)]) % cod;
      }
      case Op::Let: {
        slots[size_t(slot)] = a->eval(consts, slots);
        return b->eval(consts, slots);
      }
    }
    return 0;
  }
};

CompiledTerm::CompiledTerm(CompiledTerm&&) noexcept = default;
CompiledTerm& CompiledTerm::operator=(CompiledTerm&&) noexcept = default;
CompiledTerm::~CompiledTerm() = default;

uint64_t CompiledTerm::run(std::span<const uint64_t> const_values, Scratch& scratch) const {
  return root_->eval(const_values, scratch.slots);
}

namespace {

using Node = CompiledTerm::Node;
using Op = Node::Op;

struct Compiler {
  const ConstLayout& layout;
  const SizeContext& sizes;
  uint64_t ceiling;
  std::map<std::string, std::vector<int>> var_slots;  // name -> slot stack
  int next_slot = 0;

  std::unique_ptr<Node> leaf(Op op) {
    auto n = std::make_unique<Node>();
    n->op = op;
    return n;
  }

  int push_var(const std::string& name) {
    int s = next_slot++;
    var_slots[name].push_back(s);
    return s;
  }
  void pop_var(const std::string& name) { var_slots[name].pop_back(); }

  std::unique_ptr<Node> go(const TermRef& t) {
    switch (t->kind()) {
      case TermKind::True: return leaf(Op::True);
      case TermKind::False: return leaf(Op::False);
      case TermKind::Var: {
        auto it = var_slots.find(t->name());
        if (it == var_slots.end() || it->second.empty())
          throw UnboundName(t->name());
        auto n = leaf(Op::Slot);
        n->slot = it->second.back();
        return n;
      }
      case TermKind::Const: {
        int idx = layout.index_of(t->name());
        if (idx < 0) throw UnboundName(t->name());
        auto n = leaf(Op::Const);
        n->slot = idx;
        return n;
      }
      case TermKind::Not: {
        auto n = leaf(Op::Not);
        n->a = go(t->child_a());
        return n;
      }
      case TermKind::And:
      case TermKind::Or:
      case TermKind::Implies:
      case TermKind::Iff:
      case TermKind::Eq: {
        Op op = t->kind() == TermKind::And       ? Op::And
                : t->kind() == TermKind::Or      ? Op::Or
                : t->kind() == TermKind::Implies ? Op::Implies
                : t->kind() == TermKind::Iff     ? Op::Iff
                                                 : Op::Eq;
        auto n = leaf(op);
        n->a = go(t->child_a());
        n->b = go(t->child_b());
        return n;
      }
      case TermKind::Forall:
      case TermKind::Exists: {
        auto n = leaf(t->kind() == TermKind::Forall ? Op::Forall : Op::Exists);
        n->count = sizes.size_checked(t->var_type(), ceiling);
        n->slot = push_var(t->name());
        n->a = go(t->child_a());
        pop_var(t->name());
        return n;
      }
      case TermKind::Lam: {
        auto n = leaf(Op::Lam);
        n->count = sizes.size_checked(t->var_type(), ceiling);
        n->slot = push_var(t->name());
        n->a = go(t->child_a());
        pop_var(t->name());
        n->cod = codomain_size(t);
        return n;
      }
      case TermKind::App: {
        // Beta-redexes become lets; no table is ever built for them.
        if (t->child_a()->kind() == TermKind::Lam) {
          const TermRef& lam = t->child_a();
          auto n = leaf(Op::Let);
          n->a = go(t->child_b());
          n->slot = push_var(lam->name());
          n->b = go(lam->child_a());
          pop_var(lam->name());
          return n;
        }
        auto n = leaf(Op::App);
        n->a = go(t->child_a());
        n->b = go(t->child_b());
        TypeRef fn_t = fn_type(t->child_a());
        constexpr uint64_t kNoCeil = (uint64_t{1} << 63) - 1;
        uint64_t dom = sizes.size_checked(fn_t->domain(), kNoCeil);
        n->cod = sizes.size_checked(fn_t->codomain(), kNoCeil);
        n->pow.resize(size_t(dom));
        uint64_t p = 1;
        for (uint64_t k = 0; k < dom; ++k) { n->pow[size_t(k)] = p; p *= n->cod; }
        return n;
      }
    }
    throw TypeError("unreachable term kind in compile");
  }

  // The compiler needs function types only at App nodes; infer just enough
  // structure by walking the function position.
  TypeRef fn_type(const TermRef& t) {
    switch (t->kind()) {
      case TermKind::Var:
      case TermKind::Const: return t->var_type();
      case TermKind::Lam: return Type::fun(t->var_type(), body_type(t->child_a()));
      case TermKind::App: {
        TypeRef f = fn_type(t->child_a());
        return f->codomain();
      }
      default:
        throw TypeError("cannot infer a function type for " + t->str());
    }
  }

  uint64_t codomain_size(const TermRef& lam) {
    TypeRef body = body_type(lam->child_a());
    constexpr uint64_t kNoCeil = (uint64_t{1} << 63) - 1;
    return sizes.size_checked(body, kNoCeil);
  }

  TypeRef body_type(const TermRef& t) {
    switch (t->kind()) {
      case TermKind::Var:
      case TermKind::Const: return t->var_type();
      case TermKind::True:
      case TermKind::False:
      case TermKind::Not:
      case TermKind::And:
      case TermKind::Or:
      case TermKind::Implies:
      case TermKind::Iff:
      case TermKind::Eq:
      case TermKind::Forall:
      case TermKind::Exists: return Type::boolean();
      case TermKind::Lam: return Type::fun(t->var_type(), body_type(t->child_a()));
      case TermKind::App: return body_type(t->child_a())->codomain();
    }
    throw TypeError("unreachable term kind");
  }
};

}  // namespace

CompiledTerm compile(const TermRef& term, const ConstLayout& layout,
                     const SizeContext& sizes, uint64_t ceiling) {
  Compiler c{layout, sizes, ceiling, {}, 0};
  CompiledTerm out;
  out.root_ = c.go(term);
  out.slot_count_ = size_t(c.next_slot);
  return out;
}

}  // namespace omv
