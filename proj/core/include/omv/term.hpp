// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <map>
#include <memory>
#include <string>

#include "omv/types.hpp"

namespace omv {

enum class TermKind : uint8_t {
  Var, Const, Lam, App,
  Not, And, Or, Implies, Iff,
  Eq, Forall, Exists,
  True, False,
};

class Term;
using TermRef = std::shared_ptr<const Term>;

/// Immutable term of the classical higher-order core. Binders (Lam, Forall,
/// Exists) carry the bound variable's name and type; builders do not rename,
/// so whoever constructs nested binders is responsible for keeping bound
/// names unique (the embedding layer does).
class Term {
 public:
  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  TypeRef var_type() const { return type_; }  // Var/Const/binders
  const TermRef& child_a() const { return a_; }
  const TermRef& child_b() const { return b_; }

  // For binders: a_ is the body. For App: a_ fn, b_ arg.
  static TermRef var(std::string name, TypeRef t);
  static TermRef constant(std::string name, TypeRef t);
  static TermRef lam(std::string var, TypeRef var_t, TermRef body);
  static TermRef app(TermRef fn, TermRef arg);
  static TermRef negate(TermRef a);
  static TermRef conj(TermRef a, TermRef b);
  static TermRef disj(TermRef a, TermRef b);
  static TermRef implies(TermRef a, TermRef b);
  static TermRef iff(TermRef a, TermRef b);
  static TermRef eq(TermRef a, TermRef b);
  static TermRef forall(std::string var, TypeRef var_t, TermRef body);
  static TermRef exists(std::string var, TypeRef var_t, TermRef body);
  static TermRef truth();
  static TermRef falsity();

  /// Compact single-line rendering, for error messages and debugging.
  std::string str() const;

 private:
  Term(TermKind k, std::string n, TypeRef t, TermRef a, TermRef b)
      : kind_(k), name_(std::move(n)), type_(t), a_(std::move(a)), b_(std::move(b)) {}
  TermKind kind_;
  std::string name_;
  TypeRef type_;
  TermRef a_, b_;
};

using TypeContext = std::map<std::string, TypeRef>;

/// Computes the unique type of `term` under `context` (which must cover all
/// free variables and constants). Throws TypeError on ill-typed applications
/// or operand sorts, UnboundName for names missing from the context.
TypeRef typecheck(const TermRef& term, const TypeContext& context);

}  // namespace omv
