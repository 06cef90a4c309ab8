#pragma once

#include <stdexcept>
#include <string>

namespace monodromy {

// Raised when an internal consistency check fails (certificate replay
// mismatch, convention self-check, ...). Distinct from std::invalid_argument,
// which marks bad caller input; the CLI maps the two to different exit codes.
struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monodromy
