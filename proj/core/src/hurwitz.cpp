#include "monodromy/hurwitz.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "json_util.hpp"

namespace monodromy {

namespace {

using json = nlohmann::ordered_json;
using detail::bigint_from_json;
using detail::bigint_to_json;

IntMatrix2 product_of(const std::vector<TwistPower>& es) {
  IntMatrix2 P;
  for (const auto& t : es) {
    P = mat_mul(P, twist_matrix(t));
  }
  return P;
}

}  // namespace

Factorization::Factorization(Base b, std::vector<TwistPower> es)
    : base(b), entries(std::move(es)), total(product_of(entries)) {
  if (base == Base::sphere && !(total == IntMatrix2())) {
    throw std::invalid_argument("sphere factorization must multiply to the identity, got " +
                                to_string(total));
  }
}

bool is_lefschetz(const Factorization& f) {
  for (const auto& t : f.entries) {
    if (t.exponent != 1) return false;
  }
  return true;
}

void hurwitz_move_entries(std::vector<TwistPower>& es, std::size_t i, MoveDirection dir) {
  if (i < 1 || i >= es.size()) {
    throw std::invalid_argument("move index " + std::to_string(i) + " out of range for " +
                                std::to_string(es.size()) + " entries");
  }
  TwistPower& x = es[i - 1];
  TwistPower& y = es[i];
  if (dir == MoveDirection::forward) {
    // (x, y) -> (x |> y, x)
    TwistPower conj{apply_to_curve(twist_matrix(x), y.curve), y.exponent};
    y = x;
    x = conj;
  } else {
    // (x, y) -> (y, y^-1 |> x)
    TwistPower yinv{y.curve, -y.exponent};
    TwistPower conj{apply_to_curve(twist_matrix(yinv), x.curve), x.exponent};
    x = y;
    y = conj;
  }
}

void apply_braid_entries(std::vector<TwistPower>& es, const BraidWord& b) {
  if (static_cast<std::size_t>(b.strands) != es.size()) {
    throw std::invalid_argument("braid strand count " + std::to_string(b.strands) +
                                " does not match entry count " + std::to_string(es.size()));
  }
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    int l = *it;
    hurwitz_move_entries(es, static_cast<std::size_t>(std::abs(l)),
                         l > 0 ? MoveDirection::forward : MoveDirection::inverse);
  }
}

Factorization hurwitz_move(const Factorization& f, std::size_t i, MoveDirection dir) {
  Factorization out = f;
  hurwitz_move_entries(out.entries, i, dir);
  return out;  // total product is invariant under the move
}

Factorization apply_braid(const Factorization& f, const BraidWord& b) {
  Factorization out = f;
  apply_braid_entries(out.entries, b);
  return out;
}

IntMatrix2 total_product(const Factorization& f) { return f.total; }

IntMatrix2 total_product(const std::vector<TwistPower>& es) { return product_of(es); }

Factorization fiber_sum(const Factorization& f1, const Factorization& f2) {
  if (f1.base != f2.base) {
    throw std::invalid_argument("fiber sum requires matching bases");
  }
  std::vector<TwistPower> es = f1.entries;
  es.insert(es.end(), f2.entries.begin(), f2.entries.end());
  return Factorization(f1.base, std::move(es));
}

Factorization builtin(const std::string& id) {
  auto parse_count = [&](std::size_t prefix) -> long {
    const std::string num = id.substr(prefix);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad builtin id '" + id + "'");
    }
    return std::stol(num);
  };
  const TorusCurve a(1, 0);
  const TorusCurve b(0, 1);
  if (id.rfind("q:", 0) == 0) {
    long n = parse_count(2);
    if (n < 1) {
      throw std::invalid_argument("builtin q:n needs n >= 1");
    }
    std::vector<TwistPower> es;
    es.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
      es.emplace_back(i % 2 == 0 ? a : b, 1);
    }
    return Factorization(Base::disk, std::move(es));
  }
  if (id.rfind("E:", 0) == 0) {
    long d = parse_count(2);
    if (d < 1) {
      throw std::invalid_argument("builtin E:d needs d >= 1");
    }
    std::vector<TwistPower> es;
    es.reserve(static_cast<std::size_t>(12 * d));
    for (long i = 0; i < 12 * d; ++i) {
      es.emplace_back(i % 2 == 0 ? a : b, 1);
    }
    return Factorization(Base::sphere, std::move(es));
  }
  throw std::invalid_argument("unknown builtin id '" + id + "' (expected q:<n> or E:<d>)");
}

Factorization factorization_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad factorization JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("base") || !j.contains("entries")) {
      throw std::invalid_argument("factorization JSON needs 'base' and 'entries'");
    }
    const std::string base_s = j["base"].get<std::string>();
    Base base;
    if (base_s == "disk") {
      base = Base::disk;
    } else if (base_s == "sphere") {
      base = Base::sphere;
    } else {
      throw std::invalid_argument("base must be 'disk' or 'sphere', got '" + base_s + "'");
    }
    std::vector<TwistPower> es;
    for (const auto& e : j["entries"]) {
      if (e.contains("curve")) {
        const auto& c = e["curve"];
        if (!c.is_array() || c.size() != 2) {
          throw std::invalid_argument("entry curve must be a two-element array");
        }
        BigInt power = e.contains("power") ? bigint_from_json(e["power"]) : BigInt(1);
        es.emplace_back(TorusCurve(bigint_from_json(c[0]), bigint_from_json(c[1])),
                        std::move(power));
      } else if (e.contains("matrix")) {
        const auto& m = e["matrix"];
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
            !m[1].is_array() || m[1].size() != 2) {
          throw std::invalid_argument("entry matrix must be 2x2");
        }
        IntMatrix2 A(bigint_from_json(m[0][0]), bigint_from_json(m[0][1]),
                     bigint_from_json(m[1][0]), bigint_from_json(m[1][1]));
        TwistRecognition r = recognize_twist(A);
        if (r.kind != TwistRecognition::Kind::twist_power) {
          throw std::invalid_argument("entry matrix " + to_string(A) +
                                      " is not a twist power");
        }
        es.push_back(r.twist);
      } else {
        throw std::invalid_argument("entry needs 'curve' or 'matrix'");
      }
    }
    return Factorization(base, std::move(es));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad factorization JSON: ") + e.what());
  }
}

std::string factorization_to_json(const Factorization& f) {
  json j;
  j["base"] = f.base == Base::disk ? "disk" : "sphere";
  json entries = json::array();
  for (const auto& t : f.entries) {
    json e;
    e["curve"] = json::array({bigint_to_json(t.curve.p), bigint_to_json(t.curve.q)});
    e["power"] = bigint_to_json(t.exponent);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

}  // namespace monodromy
