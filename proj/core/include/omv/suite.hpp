// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include "omv/search.hpp"

namespace omv {

/// Structural expectations on a reported model; only the present fields are
/// checked.
struct ModelShape {
  std::optional<int> worlds;
  std::optional<int> indiv;
  std::optional<std::vector<std::pair<int, int>>> r_edges;
  std::optional<bool> top_positive;       // the always-true property is positive everywhere
  std::optional<bool> selfdiff_not_positive;  // index-0 property nowhere positive
  std::optional<bool> empty_not_positive;     // same table as self-difference
  std::optional<int> godlike_min;  // at every world, at least this many G individuals
};

struct SuiteCase {
  enum class CheckKind : uint8_t { FindModel, Entail, Refute };

  std::string id;
  std::string suite;
  std::string theory_id;
  CheckKind check = CheckKind::FindModel;
  std::string conjecture;
  std::vector<std::string> premises;  // empty: the theory's full axiom set
  Bounds bounds;
  Verdict::Kind expected;
  ModelShape shape;
  bool allow_timeout = false;
  std::string provenance;
};

/// Parses a manifest (see theories/expectations.json). Throws ModelError on
/// malformed entries.
std::vector<SuiteCase> parse_manifest(const std::string& json_text);

/// The bundled manifest.
const std::vector<SuiteCase>& builtin_suite_cases();

struct CaseOutcome {
  const SuiteCase* c = nullptr;
  Verdict verdict;
  bool pass = false;
  std::string note;  // why a case failed, if it did
};

struct SuiteReport {
  std::vector<CaseOutcome> cases;
  int passed = 0;
  int failed = 0;
  int timed_out = 0;
  double wall_ms = 0;

  bool all_passed() const { return failed == 0; }
};

/// Runs every case whose suite or id matches `selection` ("all" runs
/// everything). Cases run in manifest order; each case's search may use
/// parallel workers. `bounds_override`, when set, replaces each case's
/// bounds. Verdicts and outcomes are deterministic; wall times are not.
SuiteReport run_suite(const std::string& selection,
                      const std::optional<Bounds>& bounds_override = std::nullopt,
                      const SearchOptions& opts = {});

/// Checks one model against a shape expectation (needs the embedded theory
/// to evaluate the God-like definition). Returns an explanation for the
/// first violated field, or nullopt if everything matches.
std::optional<std::string> shape_mismatch(const ModelShape& shape,
                                          const KripkeModel& model,
                                          const EmbeddedTheory& th);

}  // namespace omv
