#pragma once

// Internal helpers shared by the JSON parsing/serialization code. Integers
// that fit in 64 bits travel as JSON numbers; anything larger becomes a
// decimal string, and both forms are accepted on input.

#include <limits>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "monodromy/bigint.hpp"

namespace monodromy::detail {

inline BigInt bigint_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) {
    return BigInt(j.get<long long>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw std::invalid_argument("bad integer string '" + s + "'");
    }
    return BigInt(s);
  }
  throw std::invalid_argument("expected integer or integer string");
}

inline nlohmann::ordered_json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) {
    return nlohmann::ordered_json(v.convert_to<long long>());
  }
  return nlohmann::ordered_json(v.str());
}

}  // namespace monodromy::detail
