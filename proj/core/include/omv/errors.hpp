// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omv {

/// A denotation space or candidate space exceeded the configured ceiling,
/// or does not fit in 63 bits at all.
struct BoundOverflow : std::runtime_error {
  explicit BoundOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Kernel type-checking failure (ill-typed application, wrong operand
/// type, or a name missing from the declaration context).
struct TypeError : std::runtime_error {
  std::string location;  // best-effort rendering of the offending subterm
  std::string expected;
  std::string found;
  TypeError(std::string loc, std::string exp, std::string fnd)
      : std::runtime_error("type mismatch at " + loc + ": expected " + exp +
                           ", found " + fnd),
        location(std::move(loc)), expected(std::move(exp)), found(std::move(fnd)) {}
  explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundName : std::runtime_error {
  std::string name;
  explicit UnboundName(const std::string& n)
      : std::runtime_error("unbound name: " + n), name(n) {}
};

/// Parse or surface-level checking error with a position in the input text.
struct SourceError : std::runtime_error {
  int line = 0;
  int column = 0;
  std::string reason;
  std::vector<std::string> expected;  // tokens that would have been accepted

  SourceError(int ln, int col, std::string msg, std::vector<std::string> exp = {})
      : std::runtime_error(format(ln, col, msg, exp)),
        line(ln), column(col), reason(std::move(msg)), expected(std::move(exp)) {}

  static std::string format(int ln, int col, const std::string& msg,
                            const std::vector<std::string>& exp) {
    std::string s = std::to_string(ln) + ":" + std::to_string(col) + ": " + msg;
    if (!exp.empty()) {
      s += " (expected ";
      for (size_t i = 0; i < exp.size(); ++i) {
        if (i) s += ", ";
        s += exp[i];
      }
      s += ")";
    }
    return s;
  }
};

/// Errors raised while compiling a surface formula into the core logic.
struct EmbedError : std::runtime_error {
  explicit EmbedError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed model data (missing interpretation, index out of range, ...).
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace omv
