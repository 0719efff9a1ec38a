// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/model.hpp"

namespace omv {

std::string to_string(PSpace p) {
  switch (p) {
    case PSpace::Auto: return "auto";
    case PSpace::Rigid: return "rigid";
    case PSpace::Full: return "full";
  }
  return "?";
}

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::ModelFound: return "ModelFound";
    case Verdict::Kind::CounterexampleFound: return "CounterexampleFound";
    case Verdict::Kind::NoCounterexampleUpTo: return "NoCounterexampleUpTo";
    case Verdict::Kind::UnsatisfiableUpTo: return "UnsatisfiableUpTo";
    case Verdict::Kind::TimedOut: return "TimedOut";
  }
  return "?";
}

std::optional<Verdict::Kind> verdict_kind_from(const std::string& s) {
  if (s == "ModelFound") return Verdict::Kind::ModelFound;
  if (s == "CounterexampleFound") return Verdict::Kind::CounterexampleFound;
  if (s == "NoCounterexampleUpTo") return Verdict::Kind::NoCounterexampleUpTo;
  if (s == "UnsatisfiableUpTo") return Verdict::Kind::UnsatisfiableUpTo;
  if (s == "TimedOut") return Verdict::Kind::TimedOut;
  return std::nullopt;
}

Valuation model_valuation(const KripkeModel& m, const EmbeddedTheory& th,
                          uint64_t ceiling) {
  SizeContext sizes(m.worlds, m.indiv);
  Valuation vals;
  for (const auto& [name, type] : th.constants) {
    auto idx = m.constant(name);
    if (!idx) throw ModelError("model does not interpret constant '" + name + "'");
    auto space = sizes.size(type);
    if (!space || *idx >= *space)
      throw ModelError("interpretation of '" + name + "' is out of range");
    vals.emplace(name, denotation_at(type, *idx, sizes));
  }
  if (m.constants.size() != th.constants.size())
    throw ModelError("model interprets constants the theory does not declare");
  (void)ceiling;
  vals.emplace(kAccessibilityName,
               denotation_at(Type::accessibility(), m.r_index, sizes));
  vals.emplace(kExistenceName, denotation_at(Type::property(), m.e_index, sizes));
  return vals;
}

VerifyOutcome verify_model(const EmbeddedTheory& th, const KripkeModel& m,
                           const std::string* conjecture, uint64_t ceiling) {
  SizeContext sizes(m.worlds, m.indiv);
  VerifyOutcome out;
  out.frame_ok = frame_satisfied(m.r_index, th.frame, m.worlds);

  out.existence_ok = true;
  for (int w = 0; w < m.worlds; ++w) {
    bool nonempty = false;
    for (int x = 0; x < m.indiv; ++x) nonempty |= m.exists(x, w);
    if (!nonempty) out.existence_ok = false;
  }
  if (m.quant == QuantMode::Possibilist) {
    // Possibilist models fix a total existence map.
    uint64_t total = (uint64_t{1} << (m.worlds * m.indiv)) - 1;
    if (m.e_index != total) out.existence_ok = false;
  }

  Valuation consts = model_valuation(m, th, ceiling);
  Valuation empty;
  for (const auto& ax : th.axioms) {
    bool ok = eval(ax.validity, consts, empty, sizes, ceiling).as_bool();
    out.axioms.emplace_back(ax.name, ok);
  }
  if (conjecture) {
    const auto* c = th.find_conjecture(*conjecture);
    if (!c) throw ModelError("no conjecture named '" + *conjecture + "'");
    out.conjecture_valid = eval(c->validity, consts, empty, sizes, ceiling).as_bool();
  }
  return out;
}

}  // namespace omv
