#include "monodromy/certify.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_util.hpp"
#include "monodromy/canonical.hpp"

namespace monodromy {

namespace {

using json = nlohmann::ordered_json;
using detail::bigint_from_json;
using detail::bigint_to_json;

SpiderPattern make_pattern(std::vector<int> classes,
                           std::vector<SpiderPattern::Constraint> cs) {
  SpiderPattern p;
  p.classes = std::move(classes);
  p.constraints = std::move(cs);
  return p;
}

}  // namespace

SpiderPattern pair_pattern(const BigInt& bound) {
  return make_pattern({0, 1}, {{0, 1, bound, true}});
}

SpiderPattern quad_pattern(const BigInt& bound) {
  return make_pattern({0, 1, 0, 1}, {{0, 1, bound, true}});
}

SpiderPattern alternating_pattern(std::size_t length) {
  std::vector<int> classes(length);
  for (std::size_t i = 0; i < length; ++i) classes[i] = static_cast<int>(i % 2);
  return make_pattern(std::move(classes), {{0, 1, BigInt(1), false}});
}

SpiderPattern eta1_spider_pattern() {
  return make_pattern({0, 1, 1, 0, 0, 1, 1, 0}, {{0, 1, BigInt(1), false}});
}

namespace {

// Backtracking subsequence search in lexicographic position order. Class
// representatives are fixed by the first position of each class; constraints
// are checked as soon as both sides are bound.
struct PatternSearch {
  const std::vector<TwistPower>& entries;
  const SpiderPattern& pattern;
  std::size_t max_results;
  int nclasses = 0;
  std::vector<const TorusCurve*> rep;   // per class, null until bound
  std::vector<std::size_t> chosen;      // 0-based entry indices
  std::vector<std::vector<std::size_t>> out;

  PatternSearch(const std::vector<TwistPower>& es, const SpiderPattern& p, std::size_t m)
      : entries(es), pattern(p), max_results(m) {
    for (int c : p.classes) nclasses = std::max(nclasses, c + 1);
    rep.assign(static_cast<std::size_t>(nclasses), nullptr);
  }

  bool constraints_ok(int cls) const {
    for (const auto& c : pattern.constraints) {
      int other = -1;
      if (c.class_a == cls) other = c.class_b;
      if (c.class_b == cls) other = c.class_a;
      if (other < 0 || rep[static_cast<std::size_t>(other)] == nullptr) continue;
      BigInt got = intersection(*rep[static_cast<std::size_t>(cls)],
                                *rep[static_cast<std::size_t>(other)]);
      if (c.lower_bound ? got < c.value : got != c.value) return false;
    }
    return true;
  }

  void walk(std::size_t pos_idx, std::size_t start) {
    if (out.size() >= max_results) return;
    if (pos_idx == pattern.classes.size()) {
      std::vector<std::size_t> positions;
      positions.reserve(chosen.size());
      for (std::size_t c : chosen) positions.push_back(c + 1);
      out.push_back(std::move(positions));
      return;
    }
    const std::size_t remaining = pattern.classes.size() - pos_idx;
    if (start + remaining > entries.size()) return;
    const int cls = pattern.classes[pos_idx];
    auto& slot = rep[static_cast<std::size_t>(cls)];
    for (std::size_t t = start; t + remaining <= entries.size(); ++t) {
      const TorusCurve& cur = entries[t].curve;
      if (slot != nullptr) {
        if (!(*slot == cur)) continue;
      } else {
        slot = &cur;
        if (!constraints_ok(cls)) {
          slot = nullptr;
          continue;
        }
      }
      chosen.push_back(t);
      walk(pos_idx + 1, t + 1);
      chosen.pop_back();
      bool first_of_class = true;
      for (std::size_t u = 0; u < pos_idx; ++u) {
        if (pattern.classes[u] == cls) {
          first_of_class = false;
          break;
        }
      }
      if (first_of_class) slot = nullptr;
      if (out.size() >= max_results) return;
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> find_pattern(const Factorization& f,
                                                   const SpiderPattern& p,
                                                   std::size_t max_results) {
  if (p.classes.empty()) {
    return {{}};  // the empty pattern matches once, with the empty subsequence
  }
  if (p.length() > f.size() || max_results == 0) {
    return {};
  }
  PatternSearch ps(f.entries, p, max_results);
  ps.walk(0, 0);
  return std::move(ps.out);
}

std::vector<TwistPower> transform_5cycle(const std::vector<TwistPower>& sub) {
  if (sub.size() != 5 || !(sub[0].curve == sub[2].curve) || !(sub[2].curve == sub[4].curve) ||
      !(sub[1].curve == sub[3].curve) || intersection(sub[0].curve, sub[1].curve) != 1) {
    throw std::invalid_argument("transform_5cycle needs type (a,b,a,b,a) with i(a,b) = 1");
  }
  std::vector<TwistPower> out = sub;
  apply_braid_entries(out, BraidWord(5, {2, 1, 1, 4}));
  return out;
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::s1: return "s1";
    case Strategy::s2: return "s2";
    case Strategy::s3: return "s3";
    case Strategy::auroux: return "auroux";
  }
  throw std::invalid_argument("bad strategy");
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "s1") return Strategy::s1;
  if (name == "s2") return Strategy::s2;
  if (name == "s3") return Strategy::s3;
  if (name == "auroux") return Strategy::auroux;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

void verify_certificate(const InfinityCertificate& cert) {
  if (cert.K < 1) {
    throw verification_error("certificate bound K must be positive");
  }
  if (cert.strategy == Strategy::auroux) {
    if (cert.subtuple.size() != 2) {
      throw verification_error("growth certificate needs exactly two entries");
    }
    const TorusCurve& c = cert.subtuple[0].curve;
    const TorusCurve& d = cert.subtuple[1].curve;
    BigInt i0 = intersection(c, d);
    if (i0 < 1) {
      throw verification_error("growth certificate needs intersecting curves");
    }
    BigInt prev(-1);
    for (long k = 1; k <= cert.K; ++k) {
      // intersection_growth itself enforces the |k| i0^2 law
      BigInt v = intersection_growth(c, d, BigInt(k));
      if (v <= prev) {
        throw verification_error("growth values must be strictly increasing");
      }
      prev = v;
    }
    return;
  }
  if (cert.subtuple.empty()) {
    throw verification_error("certificate has an empty sub-tuple");
  }
  const bool conj = cert.base == Base::sphere;
  std::vector<TwistPower> cur = cert.subtuple;
  apply_braid_entries(cur, cert.preparation);
  std::set<CanonicalKey> keys;
  keys.insert(key_for_entries(cur, conj));
  for (long k = 1; k <= cert.K; ++k) {
    apply_braid_entries(cur, cert.sigma);
    if (!keys.insert(key_for_entries(cur, conj)).second) {
      throw verification_error("certificate replay collision at power " + std::to_string(k));
    }
  }
}

namespace {

std::vector<TwistPower> take_positions(const Factorization& f,
                                       const std::vector<std::size_t>& positions) {
  std::vector<TwistPower> sub;
  sub.reserve(positions.size());
  for (std::size_t p : positions) sub.push_back(f.entries[p - 1]);
  return sub;
}

InfinityCertificate build_pattern_certificate(const Factorization& f, Strategy strat,
                                              const std::vector<std::size_t>& positions,
                                              BraidWord prep, BraidWord sigma,
                                              std::string invariant, long K) {
  InfinityCertificate cert;
  cert.strategy = strat;
  cert.base = f.base;
  cert.positions = positions;
  cert.subtuple = take_positions(f, positions);
  cert.preparation = std::move(prep);
  cert.sigma = std::move(sigma);
  cert.invariant = std::move(invariant);
  cert.K = K;
  verify_certificate(cert);  // construction bug here is fatal, not a miss
  return cert;
}

}  // namespace

std::optional<InfinityCertificate> certify_infinite(const Factorization& f, long K) {
  if (!is_lefschetz(f)) {
    throw std::invalid_argument("certification expects a Lefschetz factorization "
                                "(all exponents +1)");
  }
  const bool sphere = f.base == Base::sphere;

  // S1: an intersection >= 2 pair, repeated (c,d,c,d) for the sphere base.
  {
    SpiderPattern p = sphere ? quad_pattern(BigInt(2)) : pair_pattern(BigInt(2));
    auto hits = find_pattern(f, p, 1);
    if (!hits.empty()) {
      int strands = static_cast<int>(p.length());
      return build_pattern_certificate(
          f, Strategy::s1, hits.front(), BraidWord(strands, {}), BraidWord(strands, {1}),
          "first pair has intersection >= 2; exchanging it gives pairwise distinct tuples",
          K);
    }
  }

  // S2: alternating pattern with i = 1; rewrite 5-windows to produce
  // intersection-2 pairs, then exchange the first produced pair.
  {
    SpiderPattern p = alternating_pattern(sphere ? 10 : 5);
    auto hits = find_pattern(f, p, 1);
    if (!hits.empty()) {
      BraidWord prep = sphere ? BraidWord(10, {2, 1, 1, 4, 7, 6, 6, 9})
                              : BraidWord(5, {2, 1, 1, 4});
      BraidWord sigma = sphere ? BraidWord(10, {3}) : BraidWord(5, {3});
      std::string inv = sphere
          ? "both 5-windows rewritten to intersection-2 pairs at (3,4) and (8,9); "
            "untouched entries pin conjugation; s3 exchanges the first pair"
          : "window rewritten to an intersection-2 pair at (3,4); s3 exchanges it";
      return build_pattern_certificate(f, Strategy::s2, hits.front(), std::move(prep),
                                       std::move(sigma), std::move(inv), K);
    }
  }

  // S3 (sphere only): (a,b,b,a,a,b,b,a); rewrite the middle five entries,
  // keeping the leading (a,b) pair as a conjugation marker.
  if (sphere) {
    auto hits = find_pattern(f, eta1_spider_pattern(), 1);
    if (!hits.empty()) {
      return build_pattern_certificate(
          f, Strategy::s3, hits.front(), BraidWord(8, {4, 5}), BraidWord(8, {3}),
          "middle five rewritten to expose an intersection-2 pair at (3,4); "
          "the untouched leading (a,b) pair pins conjugation; s3 exchanges the pair",
          K);
    }
  }

  return std::nullopt;
}

std::optional<InfinityCertificate> auroux_divergence(const Factorization& f,
                                                     const Factorization& g, long K) {
  if (!(f == g)) {
    throw std::invalid_argument("divergence certificate applies to self fiber sums only");
  }
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (intersection(f.entries[i].curve, f.entries[j].curve) >= 1) {
        InfinityCertificate cert;
        cert.strategy = Strategy::auroux;
        cert.base = f.base;
        // the pair lives across the two copies in fiber_sum(f,f)
        cert.positions = {i + 1, n + j + 1};
        cert.subtuple = {f.entries[i], f.entries[j]};
        cert.preparation = BraidWord(2, {});
        cert.sigma = BraidWord(2, {});
        cert.invariant =
            "i(d, T_c^k d) = k * i(c,d)^2 grows without bound, so the twist "
            "powers of one summand are pairwise inequivalent";
        cert.K = K;
        verify_certificate(cert);
        return cert;
      }
    }
  }
  return std::nullopt;  // all curves parallel: the twists commute
}

std::string certificate_to_json(const InfinityCertificate& cert) {
  json j;
  j["strategy"] = strategy_name(cert.strategy);
  j["base"] = cert.base == Base::disk ? "disk" : "sphere";
  j["positions"] = cert.positions;
  json sub = json::array();
  for (const auto& t : cert.subtuple) {
    json e;
    e["curve"] = json::array({bigint_to_json(t.curve.p), bigint_to_json(t.curve.q)});
    e["power"] = bigint_to_json(t.exponent);
    sub.push_back(std::move(e));
  }
  j["subtuple"] = std::move(sub);
  j["preparation"] = format_braid_word(cert.preparation);
  j["sigma"] = format_braid_word(cert.sigma);
  j["invariant"] = cert.invariant;
  j["K"] = cert.K;
  return j.dump(2);
}

InfinityCertificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad certificate JSON: ") + e.what());
  }
  try {
    InfinityCertificate cert;
    cert.strategy = strategy_from_name(j.at("strategy").get<std::string>());
    const std::string base_s = j.at("base").get<std::string>();
    if (base_s == "disk") {
      cert.base = Base::disk;
    } else if (base_s == "sphere") {
      cert.base = Base::sphere;
    } else {
      throw std::invalid_argument("certificate base must be 'disk' or 'sphere'");
    }
    cert.positions = j.at("positions").get<std::vector<std::size_t>>();
    for (const auto& e : j.at("subtuple")) {
      const auto& c = e.at("curve");
      BigInt power = e.contains("power") ? bigint_from_json(e["power"]) : BigInt(1);
      cert.subtuple.emplace_back(TorusCurve(bigint_from_json(c.at(0)), bigint_from_json(c.at(1))),
                                 std::move(power));
    }
    int strands = std::max<int>(2, static_cast<int>(cert.subtuple.size()));
    cert.preparation = parse_braid_word(j.value("preparation", ""), strands);
    cert.sigma = parse_braid_word(j.value("sigma", ""), strands);
    cert.invariant = j.value("invariant", "");
    cert.K = j.at("K").get<long>();
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad certificate JSON: ") + e.what());
  }
}

}  // namespace monodromy
