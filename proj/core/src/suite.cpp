// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/suite.hpp"

#include <chrono>

#include <json.hpp>

#include "omv/corpus.hpp"

namespace omv {

namespace {

using nlohmann::json;

SuiteCase::CheckKind check_kind_from(const std::string& s) {
  if (s == "find_model") return SuiteCase::CheckKind::FindModel;
  if (s == "entail") return SuiteCase::CheckKind::Entail;
  if (s == "refute") return SuiteCase::CheckKind::Refute;
  throw ModelError("unknown check kind '" + s + "' in manifest");
}

}  // namespace

std::vector<SuiteCase> parse_manifest(const std::string& json_text) {
  json m = json::parse(json_text);
  if (m.value("schema", "") != "omv-suite-manifest/1")
    throw ModelError("unrecognized manifest schema");
  double default_timeout = 120.0;
  if (m.contains("defaults")) default_timeout = m["defaults"].value("timeout_s", 120.0);

  std::vector<SuiteCase> out;
  for (const auto& jc : m.at("cases")) {
    SuiteCase c;
    c.id = jc.at("id").get<std::string>();
    c.suite = jc.at("suite").get<std::string>();
    c.theory_id = jc.at("theory").get<std::string>();
    c.check = check_kind_from(jc.at("check").get<std::string>());
    c.conjecture = jc.value("conjecture", "");
    if (jc.contains("premises"))
      c.premises = jc["premises"].get<std::vector<std::string>>();
    c.bounds.max_worlds = jc.at("bounds").value("max_worlds", 2);
    c.bounds.max_indiv = jc.at("bounds").value("max_indiv", 2);
    c.bounds.timeout_s = jc.at("bounds").value("timeout_s", default_timeout);
    auto kind = verdict_kind_from(jc.at("expected").get<std::string>());
    if (!kind) throw ModelError("unknown expected verdict in case " + c.id);
    c.expected = *kind;
    if (jc.contains("expect_model")) {
      const auto& js = jc["expect_model"];
      if (js.contains("worlds")) c.shape.worlds = js["worlds"].get<int>();
      if (js.contains("indiv")) c.shape.indiv = js["indiv"].get<int>();
      if (js.contains("r")) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : js["r"]) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        c.shape.r_edges = std::move(edges);
      }
      if (js.contains("top_positive")) c.shape.top_positive = js["top_positive"].get<bool>();
      if (js.contains("selfdiff_not_positive"))
        c.shape.selfdiff_not_positive = js["selfdiff_not_positive"].get<bool>();
      if (js.contains("empty_not_positive"))
        c.shape.empty_not_positive = js["empty_not_positive"].get<bool>();
      if (js.contains("godlike_min")) c.shape.godlike_min = js["godlike_min"].get<int>();
    }
    c.allow_timeout = jc.value("allow_timeout", false);
    c.provenance = jc.value("provenance", "");
    if (c.provenance.empty()) throw ModelError("case " + c.id + " lacks provenance");
    out.push_back(std::move(c));
  }
  return out;
}

const std::vector<SuiteCase>& builtin_suite_cases() {
  static const std::vector<SuiteCase> cases = parse_manifest(builtin_manifest_text());
  return cases;
}

namespace {

// Positivity of the property with canonical index `prop` at world `w`,
// read off a lifted-predicate table by digit extraction.
bool positive_at(uint64_t table, uint64_t prop, uint64_t base_count, uint64_t sigma,
                 int w, int worlds) {
  uint64_t pw = 1;
  for (uint64_t k = 1; k < base_count - prop; ++k) pw *= sigma;
  uint64_t digit = (table / pw) % sigma;
  return (digit >> (worlds - 1 - w)) & 1;
}

}  // namespace

std::optional<std::string> shape_mismatch(const ModelShape& shape,
                                          const KripkeModel& model,
                                          const EmbeddedTheory& th) {
  if (shape.worlds && model.worlds != *shape.worlds)
    return "expected " + std::to_string(*shape.worlds) + " worlds, found " +
           std::to_string(model.worlds);
  if (shape.indiv && model.indiv != *shape.indiv)
    return "expected " + std::to_string(*shape.indiv) + " individuals, found " +
           std::to_string(model.indiv);
  if (shape.r_edges) {
    std::vector<std::pair<int, int>> actual;
    for (int u = 0; u < model.worlds; ++u)
      for (int v = 0; v < model.worlds; ++v)
        if (model.reaches(u, v)) actual.emplace_back(u, v);
    std::vector<std::pair<int, int>> want = *shape.r_edges;
    std::sort(want.begin(), want.end());
    if (actual != want) return "accessibility relation differs from the expected one";
  }

  bool need_p = shape.top_positive || shape.selfdiff_not_positive ||
                shape.empty_not_positive;
  if (need_p) {
    auto p = model.constant("P");
    if (!p) return "model has no constant P to inspect";
    SizeContext sizes(model.worlds, model.indiv);
    uint64_t base = *sizes.size(Type::property());
    uint64_t sigma = *sizes.size(Type::lifted());
    auto positive_everywhere = [&](uint64_t prop) {
      for (int w = 0; w < model.worlds; ++w)
        if (!positive_at(*p, prop, base, sigma, w, model.worlds)) return false;
      return true;
    };
    auto positive_somewhere = [&](uint64_t prop) {
      for (int w = 0; w < model.worlds; ++w)
        if (positive_at(*p, prop, base, sigma, w, model.worlds)) return true;
      return false;
    };
    if (shape.top_positive && *shape.top_positive && !positive_everywhere(base - 1))
      return "the always-true property is not positive at every world";
    if (shape.selfdiff_not_positive && *shape.selfdiff_not_positive &&
        positive_somewhere(0))
      return "self-difference is positive somewhere";
    if (shape.empty_not_positive && *shape.empty_not_positive && positive_somewhere(0))
      return "the empty property is positive somewhere";
  }

  if (shape.godlike_min) {
    // Evaluate the theory's G definition on the model, per world.
    TermRef g;
    for (const auto& [n, t] : th.defs)
      if (n == "G") g = t;
    if (!g) return "theory defines no G to count God-like individuals";
    SizeContext sizes(model.worlds, model.indiv);
    Valuation consts = model_valuation(model, th);
    Valuation empty;
    Denotation table = eval(g, consts, empty, sizes);
    for (int w = 0; w < model.worlds; ++w) {
      int count = 0;
      for (int x = 0; x < model.indiv; ++x)
        if (table.entries()[size_t(x)].entries()[size_t(w)].as_bool()) ++count;
      if (count < *shape.godlike_min)
        return "world " + std::to_string(w) + " has " + std::to_string(count) +
               " God-like individuals, expected at least " +
               std::to_string(*shape.godlike_min);
    }
  }
  return std::nullopt;
}

SuiteReport run_suite(const std::string& selection,
                      const std::optional<Bounds>& bounds_override,
                      const SearchOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;

  for (const SuiteCase& c : builtin_suite_cases()) {
    if (selection != "all" && c.suite != selection && c.id != selection) continue;

    const Theory* base = builtin_theory(c.theory_id);
    if (!base) throw ModelError("manifest names unknown theory '" + c.theory_id + "'");
    Theory t = c.premises.empty() ? *base : base->with_premises(c.premises);
    EmbeddedTheory th = embed_theory(t);

    Bounds b = bounds_override.value_or(c.bounds);
    CaseOutcome out;
    out.c = &c;
    if (c.check == SuiteCase::CheckKind::FindModel)
      out.verdict = find_model(th, b, opts);
    else
      out.verdict = check_entailment(th, c.conjecture, b, opts);

    if (out.verdict.kind == Verdict::Kind::TimedOut) {
      ++report.timed_out;
      out.pass = c.allow_timeout;
      if (!out.pass) out.note = "timed out";
    } else if (out.verdict.kind != c.expected) {
      out.pass = false;
      out.note = "expected " + to_string(c.expected) + ", got " +
                 to_string(out.verdict.kind);
    } else {
      out.pass = true;
      if (out.verdict.model) {
        if (auto why = shape_mismatch(c.shape, *out.verdict.model, th)) {
          out.pass = false;
          out.note = *why;
        }
      }
    }
    (out.pass ? report.passed : report.failed)++;
    report.cases.push_back(std::move(out));
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

}  // namespace omv
