// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <map>

#include "omv/theory.hpp"

namespace omv {

/// Source text of every built-in theory, keyed by id (the id, the file stem
/// and the theory's own name coincide).
const std::map<std::string, std::string>& builtin_theory_texts();

/// All built-in theories, parsed. Parsing happens once; the corpus is
/// immutable afterwards.
const std::vector<Theory>& builtin_theories();

const Theory* builtin_theory(const std::string& id);

/// The bundled suite expectations manifest (JSON text).
const std::string& builtin_manifest_text();

}  // namespace omv
