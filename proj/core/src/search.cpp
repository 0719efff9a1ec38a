// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "omv/compiled.hpp"

namespace omv {

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Candidate spaces for uninterpreted constants.

struct ConstSpace {
  enum class Kind : uint8_t { Full, RigidLifted, List };
  Kind kind = Kind::Full;
  uint64_t count = 0;
  // RigidLifted: tables over a base domain of `base_count` entries with
  // codomain size `sigma`, each entry constantly false (0) or constantly
  // true (sigma-1).
  uint64_t base_count = 0;
  uint64_t sigma = 0;
  std::vector<uint64_t> list;
  std::string label;

  uint64_t nth(uint64_t i) const {
    switch (kind) {
      case Kind::Full: return i;
      case Kind::List: return list[size_t(i)];
      case Kind::RigidLifted: {
        uint64_t idx = 0;
        for (uint64_t k = 0; k < base_count; ++k) {
          bool member = (i >> (base_count - 1 - k)) & 1;
          idx = idx * sigma + (member ? sigma - 1 : 0);
        }
        return idx;
      }
    }
    return 0;
  }
};

// Lifted-predicate shape Fun(A, World>Bool).
bool is_lifted_predicate(TypeRef t) {
  return t->is_fun() && t->codomain() == Type::lifted();
}

// Candidates that satisfy the complement-pair axiom by construction, in
// ascending canonical order. `per_world` selects world-indexed choices
// (one member per pair at each world) vs a single rigid choice.
std::vector<uint64_t> pair_pruned_candidates(uint64_t base_count, uint64_t sigma,
                                             bool per_world) {
  uint64_t pairs = base_count / 2;
  std::vector<uint64_t> out;
  if (per_world) {
    // digit(lo) free in [0, sigma), digit(hi) its pointwise complement.
    uint64_t total = 1;
    for (uint64_t p = 0; p < pairs; ++p) total *= sigma;
    out.reserve(size_t(total));
    std::vector<uint64_t> digits(size_t(base_count), 0);
    for (uint64_t choice = 0; choice < total; ++choice) {
      uint64_t c = choice;
      for (uint64_t p = 0; p < pairs; ++p) {
        uint64_t lo_digit = c % sigma;
        c /= sigma;
        digits[size_t(p)] = lo_digit;
        digits[size_t(base_count - 1 - p)] = (sigma - 1) ^ lo_digit;
      }
      uint64_t idx = 0;
      for (uint64_t k = 0; k < base_count; ++k) idx = idx * sigma + digits[size_t(k)];
      out.push_back(idx);
    }
  } else {
    uint64_t total = uint64_t{1} << pairs;
    out.reserve(size_t(total));
    for (uint64_t choice = 0; choice < total; ++choice) {
      uint64_t idx = 0;
      for (uint64_t k = 0; k < base_count; ++k) {
        uint64_t p = std::min(k, base_count - 1 - k);
        bool lo_positive = (choice >> p) & 1;
        bool member = (k < base_count - 1 - k) ? lo_positive : !lo_positive;
        idx = idx * sigma + (member ? sigma - 1 : 0);
      }
      out.push_back(idx);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConstSpace plan_const_space(const std::string& name, TypeRef type,
                            const SizeContext& sizes, const Bounds& bounds,
                            PSpace policy, bool has_pair_axiom) {
  auto full = sizes.size(type);
  bool lifted_pred = is_lifted_predicate(type);
  uint64_t base = 0, sigma = 0;
  if (lifted_pred) {
    base = sizes.size_checked(type->domain(), bounds.ceiling);
    sigma = sizes.size_checked(Type::lifted(), bounds.ceiling);
  }

  auto make_full = [&]() -> ConstSpace {
    ConstSpace s;
    if (has_pair_axiom && lifted_pred && base % 2 == 0) {
      s.kind = ConstSpace::Kind::List;
      s.list = pair_pruned_candidates(base, sigma, /*per_world=*/true);
      s.count = s.list.size();
      s.label = "full(pairs)";
    } else {
      s.kind = ConstSpace::Kind::Full;
      s.count = *full;
      s.label = "full";
    }
    return s;
  };
  auto make_rigid = [&]() -> ConstSpace {
    ConstSpace s;
    if (has_pair_axiom && base % 2 == 0) {
      s.kind = ConstSpace::Kind::List;
      s.list = pair_pruned_candidates(base, sigma, /*per_world=*/false);
      s.count = s.list.size();
      s.label = "rigid(pairs)";
    } else {
      s.kind = ConstSpace::Kind::RigidLifted;
      s.base_count = base;
      s.sigma = sigma;
      s.count = uint64_t{1} << base;
      s.label = "rigid";
    }
    return s;
  };

  bool full_fits = full && *full <= bounds.ceiling;
  bool rigid_fits = lifted_pred && base < 63 && (uint64_t{1} << base) <= bounds.ceiling;

  switch (policy) {
    case PSpace::Full:
      if (!full_fits)
        throw BoundOverflow("candidate space for '" + name + "' (" + type->str() +
                            ") exceeds the ceiling at w=" + std::to_string(sizes.worlds()) +
                            ", d=" + std::to_string(sizes.indiv()));
      return make_full();
    case PSpace::Rigid:
      if (lifted_pred && rigid_fits) return make_rigid();
      if (full_fits && sizes.worlds() == 1) return make_full();  // rigid == full
      if (!lifted_pred && full_fits) return make_full();
      throw BoundOverflow("rigid candidate space for '" + name +
                          "' exceeds the ceiling at w=" + std::to_string(sizes.worlds()) +
                          ", d=" + std::to_string(sizes.indiv()));
    case PSpace::Auto:
      if (full_fits) return make_full();
      if (rigid_fits) return make_rigid();
      throw BoundOverflow(
          "candidate space for '" + name + "' (" + type->str() + ") at w=" +
          std::to_string(sizes.worlds()) + ", d=" + std::to_string(sizes.indiv()) +
          " exceeds the ceiling even with world-constant tables; lower the bounds");
  }
  throw BoundOverflow("unreachable");
}

// ---------------------------------------------------------------------------
// Layer plan: everything compiled and enumerable at one (w,d).

struct LayerPlan {
  int worlds, indiv;
  SizeContext sizes;
  ConstLayout layout;  // declared constants..., then R, then E
  std::vector<uint64_t> r_list;
  std::vector<uint64_t> e_list;
  std::vector<ConstSpace> spaces;       // one per declared constant
  uint64_t product = 1;                 // product of space counts
  std::vector<CompiledTerm> axioms;     // in theory order
  std::vector<int> axiom_stage;         // 0: R only, 1: R/E, 2+i: consts up to i
  std::optional<CompiledTerm> conjecture;
  std::string space_label;

  int r_slot() const { return int(spaces.size()); }
  int e_slot() const { return int(spaces.size()) + 1; }
};

void collect_consts(const TermRef& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind() == TermKind::Const) out.insert(t->name());
  collect_consts(t->child_a(), out);
  collect_consts(t->child_b(), out);
}

LayerPlan plan_layer(const EmbeddedTheory& th, int w, int d, const Bounds& bounds,
                     PSpace policy, const std::string* conjecture) {
  LayerPlan plan{w, d, SizeContext(w, d), {}, {}, {}, {}, 1, {}, {}, {}, {}};

  for (const auto& [name, type] : th.constants) plan.layout.consts.emplace_back(name, type);
  plan.layout.consts.emplace_back(kAccessibilityName, Type::accessibility());
  plan.layout.consts.emplace_back(kExistenceName, Type::property());

  // R filtered by the frame class.
  uint64_t r_count = plan.sizes.size_checked(Type::accessibility(), bounds.ceiling);
  for (uint64_t r = 0; r < r_count; ++r)
    if (frame_satisfied(r, th.frame, w)) plan.r_list.push_back(r);

  // E: total in possibilist mode, per-world nonempty otherwise.
  uint64_t e_count = plan.sizes.size_checked(Type::property(), bounds.ceiling);
  uint64_t total = e_count - 1;
  if (th.quant == QuantMode::Possibilist) {
    plan.e_list.push_back(total);
  } else {
    for (uint64_t e = 0; e < e_count; ++e) {
      bool ok = true;
      for (int wi = 0; wi < w && ok; ++wi) {
        bool nonempty = false;
        for (int x = 0; x < d; ++x) nonempty |= exists_at(e, x, wi, w, d);
        ok = nonempty;
      }
      if (ok) plan.e_list.push_back(e);
    }
  }

  for (const auto& [name, type] : th.constants) {
    bool pair_axiom = th.has_pair_axiom(name);
    ConstSpace s = plan_const_space(name, type, plan.sizes, bounds, policy, pair_axiom);
    plan.product *= s.count;
    if (!plan.space_label.empty()) plan.space_label += ",";
    plan.space_label += s.label;
    plan.spaces.push_back(std::move(s));
  }

  for (const auto& ax : th.axioms) {
    plan.axioms.push_back(compile(ax.validity, plan.layout, plan.sizes, bounds.ceiling));
    std::set<std::string> deps;
    collect_consts(ax.validity, deps);
    int stage = 0;
    for (size_t i = 0; i < th.constants.size(); ++i)
      if (deps.count(th.constants[i].first)) stage = std::max(stage, int(i) + 2);
    if (stage == 0 && deps.count(kExistenceName)) stage = 1;
    plan.axiom_stage.push_back(stage);
  }
  if (conjecture) {
    const auto* c = th.find_conjecture(*conjecture);
    if (!c) throw ModelError("theory '" + th.name + "' has no conjecture named '" +
                             *conjecture + "'");
    plan.conjecture = compile(c->validity, plan.layout, plan.sizes, bounds.ceiling);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Layer execution.

struct Hit {
  uint64_t flat;  // position within the layer's candidate order
  std::vector<uint64_t> values;  // declared constants only
  uint64_t r, e;
};

struct TaskResult {
  uint64_t start_flat = 0;
  uint64_t examined = 0;
  std::optional<Hit> hit;
  uint64_t hits_total = 0;  // all hits in the task (find_model tie counting)
};

struct LayerOutcome {
  uint64_t examined = 0;       // sequential-equivalent count
  std::optional<Hit> first;    // canonically least hit
  uint64_t hits_total = 0;
  bool timed_out = false;
};

// What counts as a "hit" differs between searches: a model of the axioms
// (find_model / enumerate) or a model refuting the conjecture (entailment).
enum class Goal : uint8_t { Model, Counterexample };

LayerOutcome run_layer(const LayerPlan& plan, Goal goal, const Bounds&,
                       const SearchOptions& opts, Clock::time_point deadline,
                       bool stop_at_first, bool count_all_hits) {
  const size_t n_consts = plan.spaces.size();
  const uint64_t chunk = 4096;

  struct Task {
    uint64_t r, e;
    uint64_t begin, end;   // flattened constant-product range
    uint64_t start_flat;   // global position of `begin`
  };

  // Stage-0/1 pruning happens while generating tasks: a rejected (R, E)
  // prefix removes its whole candidate subtree.
  std::vector<Task> tasks;
  {
    std::vector<uint64_t> vals(n_consts + 2, 0);
    std::vector<CompiledTerm::Scratch> scratches;
    for (const auto& ax : plan.axioms) scratches.push_back(ax.make_scratch());
    uint64_t e_count = plan.e_list.size();
    for (uint64_t ri = 0; ri < plan.r_list.size(); ++ri) {
      vals[plan.r_slot()] = plan.r_list[ri];
      bool ok = true;
      for (size_t a = 0; a < plan.axioms.size() && ok; ++a)
        if (plan.axiom_stage[a] == 0)
          ok = plan.axioms[a].run(vals, scratches[a]) != 0;
      if (!ok) continue;
      for (uint64_t ei = 0; ei < e_count; ++ei) {
        vals[plan.e_slot()] = plan.e_list[ei];
        bool eok = true;
        for (size_t a = 0; a < plan.axioms.size() && eok; ++a)
          if (plan.axiom_stage[a] == 1)
            eok = plan.axioms[a].run(vals, scratches[a]) != 0;
        if (!eok) continue;
        uint64_t base = (ri * e_count + ei) * plan.product;
        for (uint64_t b = 0; b < plan.product; b += chunk) {
          tasks.push_back(Task{plan.r_list[ri], plan.e_list[ei], b,
                               std::min(b + chunk, plan.product), base + b});
        }
      }
    }
  }

  std::atomic<size_t> next_task{0};
  std::atomic<uint64_t> best_flat{UINT64_MAX};
  std::atomic<bool> timed_out{false};
  std::vector<TaskResult> results(tasks.size());

  auto worker = [&]() {
    std::vector<uint64_t> vals(n_consts + 2, 0);
    std::vector<CompiledTerm::Scratch> ax_scratch;
    for (const auto& ax : plan.axioms) ax_scratch.push_back(ax.make_scratch());
    CompiledTerm::Scratch cj_scratch;
    if (plan.conjecture) cj_scratch = plan.conjecture->make_scratch();
    std::vector<uint64_t> odo(n_consts, 0);

    for (;;) {
      size_t ti = next_task.fetch_add(1);
      if (ti >= tasks.size()) return;
      const Task& task = tasks[ti];
      if (stop_at_first && task.start_flat > best_flat.load(std::memory_order_relaxed))
        continue;
      TaskResult res;
      res.start_flat = task.start_flat;

      vals[plan.r_slot()] = task.r;
      vals[plan.e_slot()] = task.e;

      // Decode the odometer for the first candidate of the range.
      uint64_t rem = task.begin;
      for (size_t k = n_consts; k-- > 0;) {
        odo[k] = rem % plan.spaces[k].count;
        rem /= plan.spaces[k].count;
      }

      uint64_t ticks = 0;
      for (uint64_t flat = task.begin; flat < task.end; ++flat) {
        if ((++ticks & 1023) == 0) {
          if (Clock::now() > deadline) { timed_out.store(true); break; }
          if (stop_at_first &&
              task.start_flat > best_flat.load(std::memory_order_relaxed))
            break;
        }
        for (size_t k = 0; k < n_consts; ++k) vals[k] = plan.spaces[k].nth(odo[k]);
        ++res.examined;

        bool ok = true;
        for (size_t a = 0; a < plan.axioms.size() && ok; ++a)
          if (plan.axiom_stage[a] >= 2)
            ok = plan.axioms[a].run(vals, ax_scratch[a]) != 0;
        bool is_hit = false;
        if (ok) {
          if (goal == Goal::Model) {
            is_hit = true;
          } else {
            is_hit = plan.conjecture->run(vals, cj_scratch) == 0;
          }
        }
        if (is_hit) {
          ++res.hits_total;
          if (!res.hit) {
            uint64_t global = task.start_flat + (flat - task.begin);
            res.hit = Hit{global, {vals.begin(), vals.begin() + long(n_consts)},
                          task.r, task.e};
            uint64_t prev = best_flat.load();
            while (global < prev && !best_flat.compare_exchange_weak(prev, global)) {}
            if (!count_all_hits) break;
          }
        }

        // Advance the odometer.
        for (size_t k = n_consts; k-- > 0;) {
          if (++odo[k] < plan.spaces[k].count) break;
          odo[k] = 0;
          if (k == 0) break;
        }
      }
      results[ti] = std::move(res);
      if (timed_out.load()) return;
    }
  };

  size_t jobs = opts.jobs > 0 ? size_t(opts.jobs)
                              : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<size_t>(tasks.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  LayerOutcome out;
  out.timed_out = timed_out.load();

  // Canonically least hit, and the sequential-equivalent examined count:
  // tasks positioned after the first hit do not contribute.
  std::vector<size_t> order(results.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return results[a].start_flat < results[b].start_flat;
  });
  for (size_t i : order) {
    const TaskResult& r = results[i];
    if (r.hit && (!out.first || r.hit->flat < out.first->flat)) out.first = r.hit;
    out.hits_total += r.hits_total;
  }
  if (stop_at_first && out.first) {
    out.examined = 0;
    for (size_t i : order) {
      const TaskResult& r = results[i];
      if (r.start_flat > out.first->flat) break;
      out.examined += r.examined;
    }
  } else {
    for (const auto& r : results) out.examined += r.examined;
  }
  return out;
}

KripkeModel hit_to_model(const Hit& h, const LayerPlan& plan, const EmbeddedTheory& th) {
  KripkeModel m;
  m.worlds = plan.worlds;
  m.indiv = plan.indiv;
  m.frame = th.frame;
  m.quant = th.quant;
  m.r_index = h.r;
  m.e_index = h.e;
  for (size_t i = 0; i < th.constants.size(); ++i)
    m.constants.emplace_back(th.constants[i].first, h.values[i]);
  return m;
}

struct SearchDriver {
  const EmbeddedTheory& th;
  Bounds bounds;
  SearchOptions opts;
  std::optional<std::string> conjecture;

  Verdict run() {
    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(bounds.timeout_s));
    Goal goal = conjecture ? Goal::Counterexample : Goal::Model;

    // Plan every layer first: infeasible bounds fail before any search.
    std::vector<LayerPlan> plans;
    for (int w = 1; w <= bounds.max_worlds; ++w)
      for (int d = 1; d <= bounds.max_indiv; ++d)
        plans.push_back(plan_layer(th, w, d, bounds, opts.p_space,
                                   conjecture ? &*conjecture : nullptr));

    Verdict v;
    v.bounds = bounds;
    if (conjecture) v.conjecture = *conjecture;

    for (const auto& plan : plans) {
      if (opts.verbose)
        fprintf(stderr, "[omv] layer w=%d d=%d: |R|=%zu |E|=%zu candidates=%llu (%s)\n",
                plan.worlds, plan.indiv, plan.r_list.size(), plan.e_list.size(),
                (unsigned long long)(plan.r_list.size() * plan.e_list.size() *
                                     plan.product),
                plan.space_label.c_str());
      bool stop_at_first = goal == Goal::Counterexample;
      bool count_all = goal == Goal::Model;
      LayerOutcome lo = run_layer(plan, goal, bounds, opts, deadline,
                                  stop_at_first, count_all);
      v.stats.layers.push_back(
          {plan.worlds, plan.indiv, lo.examined, plan.space_label});
      v.stats.models_examined += lo.examined;

      if (lo.timed_out) {
        v.kind = Verdict::Kind::TimedOut;
        v.stats.wall_ms = elapsed_ms(t0);
        return v;
      }
      if (lo.first) {
        KripkeModel m = hit_to_model(*lo.first, plan, th);
        confirm(m, goal);
        v.model = m;
        v.models_at_minimal = lo.hits_total;
        v.kind = goal == Goal::Model ? Verdict::Kind::ModelFound
                                     : Verdict::Kind::CounterexampleFound;
        v.stats.wall_ms = elapsed_ms(t0);
        return v;
      }
    }
    v.kind = conjecture ? Verdict::Kind::NoCounterexampleUpTo
                        : Verdict::Kind::UnsatisfiableUpTo;
    v.stats.wall_ms = elapsed_ms(t0);
    return v;
  }

  static double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }

  // Every published model re-verifies on the independent evaluator.
  void confirm(const KripkeModel& m, Goal goal) const {
    VerifyOutcome vo = verify_model(th, m, conjecture ? &*conjecture : nullptr,
                                    bounds.ceiling);
    bool ok = vo.model_ok() &&
              (goal == Goal::Model || (vo.conjecture_valid && !*vo.conjecture_valid));
    if (!ok)
      throw ModelError("internal error: search result failed independent re-verification");
  }
};

}  // namespace

Verdict find_model(const EmbeddedTheory& th, const Bounds& bounds,
                   const SearchOptions& opts) {
  SearchDriver d{th, bounds, opts, std::nullopt};
  return d.run();
}

Verdict check_entailment(const EmbeddedTheory& th, const std::string& conjecture,
                         const Bounds& bounds, const SearchOptions& opts) {
  SearchDriver d{th, bounds, opts, conjecture};
  return d.run();
}

void enumerate_models(const EmbeddedTheory& th, const Bounds& bounds,
                      const std::function<bool(const KripkeModel&)>& sink,
                      const SearchOptions& opts) {
  // Sequential by construction so the sink observes canonical order.
  auto t0 = Clock::now();
  auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(bounds.timeout_s));
  std::vector<LayerPlan> plans;
  for (int w = 1; w <= bounds.max_worlds; ++w)
    for (int d = 1; d <= bounds.max_indiv; ++d)
      plans.push_back(plan_layer(th, w, d, bounds, opts.p_space, nullptr));

  for (const auto& plan : plans) {
    const size_t n_consts = plan.spaces.size();
    std::vector<uint64_t> vals(n_consts + 2, 0);
    std::vector<CompiledTerm::Scratch> scratch;
    for (const auto& ax : plan.axioms) scratch.push_back(ax.make_scratch());
    std::vector<uint64_t> odo(n_consts, 0);

    for (uint64_t r : plan.r_list) {
      vals[plan.r_slot()] = r;
      bool rok = true;
      for (size_t a = 0; a < plan.axioms.size() && rok; ++a)
        if (plan.axiom_stage[a] == 0) rok = plan.axioms[a].run(vals, scratch[a]) != 0;
      if (!rok) continue;
      for (uint64_t e : plan.e_list) {
        vals[plan.e_slot()] = e;
        bool eok = true;
        for (size_t a = 0; a < plan.axioms.size() && eok; ++a)
          if (plan.axiom_stage[a] == 1) eok = plan.axioms[a].run(vals, scratch[a]) != 0;
        if (!eok) continue;
        std::fill(odo.begin(), odo.end(), 0);
        for (uint64_t flat = 0; flat < plan.product; ++flat) {
          if (Clock::now() > deadline)
            throw BoundOverflow("model enumeration timed out");
          for (size_t k = 0; k < n_consts; ++k) vals[k] = plan.spaces[k].nth(odo[k]);
          bool ok = true;
          for (size_t a = 0; a < plan.axioms.size() && ok; ++a)
            if (plan.axiom_stage[a] >= 2) ok = plan.axioms[a].run(vals, scratch[a]) != 0;
          if (ok) {
            Hit h{flat, {vals.begin(), vals.begin() + long(n_consts)}, r, e};
            if (!sink(hit_to_model(h, plan, th))) return;
          }
          for (size_t k = n_consts; k-- > 0;) {
            if (++odo[k] < plan.spaces[k].count) break;
            odo[k] = 0;
            if (k == 0) break;
          }
        }
      }
    }
  }
}

}  // namespace omv
