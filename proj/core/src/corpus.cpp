// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/corpus.hpp"

#include "omv/parser.hpp"

namespace omv {

namespace detail {
const std::map<std::string, std::string>& builtin_theory_sources();
const std::string& builtin_manifest_source();
}  // namespace detail

const std::map<std::string, std::string>& builtin_theory_texts() {
  return detail::builtin_theory_sources();
}

const std::vector<Theory>& builtin_theories() {
  static const std::vector<Theory> theories = [] {
    std::vector<Theory> out;
    for (const auto& [id, text] : builtin_theory_texts()) {
      Theory t = parse_theory(text);
      if (t.name != id)
        throw SourceError(1, 1, "builtin theory file '" + id +
                                    "' declares mismatching name '" + t.name + "'");
      out.push_back(std::move(t));
    }
    return out;
  }();
  return theories;
}

const Theory* builtin_theory(const std::string& id) {
  for (const auto& t : builtin_theories())
    if (t.name == id) return &t;
  return nullptr;
}

const std::string& builtin_manifest_text() { return detail::builtin_manifest_source(); }

}  // namespace omv
