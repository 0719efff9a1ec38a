// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omv/embed.hpp"
#include "omv/eval.hpp"

namespace omv {

/// Search bounds. The ceiling caps every denotation enumeration (quantifier
/// loops, lambda tables) and every candidate space for an uninterpreted
/// constant; exceeding it raises BoundOverflow instead of truncating.
struct Bounds {
  int max_worlds = 2;
  int max_indiv = 2;
  double timeout_s = 120.0;
  uint64_t ceiling = kDefaultCeiling;
};

/// Candidate-space policy for constants of lifted-predicate shape
/// Fun(A, World>Bool).
///
///   Full   every table, i.e. world-indexed truth;
///   Rigid  only world-constant tables (a plain subset of A);
///   Auto   Full when it fits the ceiling, Rigid as fallback.
///
/// The space actually used is recorded per layer in the verdict statistics
/// and in reports.
enum class PSpace : uint8_t { Auto, Rigid, Full };

std::string to_string(PSpace p);

struct SearchOptions {
  int jobs = 0;  // 0 = hardware concurrency
  PSpace p_space = PSpace::Auto;
  bool verbose = false;
};

/// A finite Kripke model: frame sizes, accessibility, existence map and the
/// interpretation of every declared constant, all as canonical indices
/// (see denotation.hpp for the order).
struct KripkeModel {
  int worlds = 1;
  int indiv = 1;
  FrameClass frame = FrameClass::K;
  QuantMode quant = QuantMode::Possibilist;
  uint64_t r_index = 0;
  uint64_t e_index = 0;
  std::vector<std::pair<std::string, uint64_t>> constants;

  bool reaches(int u, int v) const { return rel_at(r_index, u, v, worlds); }
  bool exists(int x, int w) const { return exists_at(e_index, x, w, worlds, indiv); }

  std::optional<uint64_t> constant(const std::string& name) const {
    for (const auto& [n, v] : constants)
      if (n == name) return v;
    return std::nullopt;
  }
};

/// Slow-evaluator view of a model: every constant (plus R and E) decoded to
/// a structural denotation. Throws ModelError if the model does not cover
/// exactly the theory's constants.
Valuation model_valuation(const KripkeModel& m, const EmbeddedTheory& th,
                          uint64_t ceiling = kDefaultCeiling);

/// Independent re-check of a model with the direct evaluator: frame
/// condition, per-axiom validity, and optionally one conjecture.
struct VerifyOutcome {
  bool frame_ok = false;
  bool existence_ok = false;  // E nonempty at every world (total when possibilist)
  std::vector<std::pair<std::string, bool>> axioms;
  std::optional<bool> conjecture_valid;

  bool axioms_valid() const {
    for (const auto& [n, ok] : axioms)
      if (!ok) return false;
    return true;
  }
  bool model_ok() const { return frame_ok && existence_ok && axioms_valid(); }
};

VerifyOutcome verify_model(const EmbeddedTheory& th, const KripkeModel& m,
                           const std::string* conjecture = nullptr,
                           uint64_t ceiling = kDefaultCeiling);

struct LayerStats {
  int worlds = 0;
  int indiv = 0;
  uint64_t examined = 0;
  std::string p_space;  // "full", "rigid", "full(pairs)", ... or "" if no constants
};

struct SearchStats {
  uint64_t models_examined = 0;
  double wall_ms = 0;
  std::vector<LayerStats> layers;
};

struct Verdict {
  enum class Kind : uint8_t {
    ModelFound,
    CounterexampleFound,
    NoCounterexampleUpTo,
    UnsatisfiableUpTo,
    TimedOut,
  };

  Kind kind;
  std::optional<KripkeModel> model;
  std::string conjecture;        // for entailment / refutation checks
  Bounds bounds;
  SearchStats stats;
  uint64_t models_at_minimal = 0;  // ModelFound: how many models share the minimal (w,d)
};

std::string to_string(Verdict::Kind k);
std::optional<Verdict::Kind> verdict_kind_from(const std::string& s);

}  // namespace omv
