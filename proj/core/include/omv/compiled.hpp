// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <memory>
#include <span>
#include <vector>

#include "omv/term.hpp"

namespace omv {

/// Layout of uninterpreted constants for compiled evaluation. The search
/// binds one uint64 canonical index per constant, in this order.
struct ConstLayout {
  std::vector<std::pair<std::string, TypeRef>> consts;

  int index_of(const std::string& name) const {
    for (size_t i = 0; i < consts.size(); ++i)
      if (consts[i].first == name) return int(i);
    return -1;
  }
};

/// A closed term compiled for dense re-evaluation. Every value is the
/// canonical index of a denotation (see denotation.hpp): application is
/// digit extraction, lambda is digit accumulation, and quantifiers count
/// through the bound type's space with short-circuiting. No allocation
/// happens per run, so one CompiledTerm may be shared by threads as long
/// as each thread uses its own Scratch.
class CompiledTerm {
 public:
  struct Scratch {
    std::vector<uint64_t> slots;
  };

  CompiledTerm() = default;
  CompiledTerm(CompiledTerm&&) noexcept;
  CompiledTerm& operator=(CompiledTerm&&) noexcept;
  ~CompiledTerm();

  Scratch make_scratch() const { return Scratch{std::vector<uint64_t>(slot_count_, 0)}; }

  uint64_t run(std::span<const uint64_t> const_values, Scratch& scratch) const;

  struct Node;  // defined in compiled.cpp

 private:
  std::unique_ptr<Node> root_;
  size_t slot_count_ = 0;
  friend CompiledTerm compile(const TermRef&, const ConstLayout&, const SizeContext&,
                              uint64_t);
};

/// Compiles a closed term. Quantifier and lambda domains are checked
/// against `ceiling` up front; beta-redexes App(Lam(x,b), a) become let
/// bindings instead of table builds.
CompiledTerm compile(const TermRef& term, const ConstLayout& layout,
                     const SizeContext& sizes, uint64_t ceiling);

}  // namespace omv
