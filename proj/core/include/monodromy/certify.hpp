#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodromy/braid.hpp"
#include "monodromy/hurwitz.hpp"

namespace monodromy {

// Topological type of a position subsequence: which positions must carry
// equal curves, and which pairwise intersection numbers are required (exact
// or as lower bounds). Constraints refer to equality classes.
struct SpiderPattern {
  struct Constraint {
    int class_a = 0;
    int class_b = 0;
    BigInt value;
    bool lower_bound = false;
  };

  std::vector<int> classes;  // equality class id per pattern position
  std::vector<Constraint> constraints;

  std::size_t length() const { return classes.size(); }
};

// (c,d) with i(c,d) >= bound.
SpiderPattern pair_pattern(const BigInt& bound);
// (c,d,c,d) with i(c,d) >= bound.
SpiderPattern quad_pattern(const BigInt& bound);
// (a,b,a,b,...) of the given length with i(a,b) = 1.
SpiderPattern alternating_pattern(std::size_t length);
// (a,b,b,a,a,b,b,a) with i(a,b) = 1.
SpiderPattern eta1_spider_pattern();

// All increasing position tuples (1-based) whose curves satisfy the pattern,
// in lexicographic order, at most max_results of them.
std::vector<std::vector<std::size_t>> find_pattern(const Factorization& f,
                                                   const SpiderPattern& p,
                                                   std::size_t max_results = SIZE_MAX);

// Local rewriting of a 5-tuple of type (a,b,a,b,a), i(a,b)=1, by the braid
// word s2 s1^2 s4: the result has type (b,b,a',b',b) where the middle pair
// (a',b') has intersection number 2. The total product is unchanged.
std::vector<TwistPower> transform_5cycle(const std::vector<TwistPower>& sub);

enum class Strategy { s1, s2, s3, auroux };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// Machine-checkable witness that the braid orbit of a factorization is
// infinite (equivalently, the liftable subgroup has infinite index). The
// stored sub-tuple makes certificates replayable standalone:
//  - pattern strategies: preparation then sigma^k for k = 0..K must give
//    K+1 pairwise distinct keys (exact tuples over the disk, conjugacy
//    classes over the sphere);
//  - auroux: the two stored curves (c,d) must satisfy the growth law
//    i(d, T_c^k d) = k * i(c,d)^2 with i(c,d) >= 1, strictly increasing.
struct InfinityCertificate {
  Strategy strategy = Strategy::s1;
  Base base = Base::disk;
  std::vector<std::size_t> positions;  // 1-based into the source factorization
  std::vector<TwistPower> subtuple;
  BraidWord preparation;
  BraidWord sigma;
  std::string invariant;
  long K = 50;
};

// Replays the certificate from its stored fields only; throws
// verification_error on any mismatch.
void verify_certificate(const InfinityCertificate& cert);

// Strategy cascade (first hit wins):
//   S1: pair (disk) or (c,d,c,d) (sphere) with intersection >= 2; sigma
//       exchanges the first pair.
//   S2: alternating 5-pattern (disk) or 10-pattern (sphere) with i = 1;
//       preparation rewrites one (disk) or both (sphere) 5-windows to expose
//       intersection-2 pairs; sigma exchanges the first produced pair.
//   S3 (sphere): (a,b,b,a,a,b,b,a) with i = 1; preparation rewrites the
//       middle five entries; the untouched leading pair pins conjugation.
// Requires a Lefschetz factorization (all exponents +1). Every returned
// certificate has already been replay-verified.
std::optional<InfinityCertificate> certify_infinite(const Factorization& f, long K = 50);

// Divergence witness for a self fiber sum: requires f and g structurally
// equal; picks the first entry pair with intersection >= 1 and certifies
// fiber_sum(f,f) through the intersection-growth law. Returns nothing if all
// entry curves are pairwise disjoint (the twists then commute).
std::optional<InfinityCertificate> auroux_divergence(const Factorization& f,
                                                     const Factorization& g, long K = 50);

std::string certificate_to_json(const InfinityCertificate& cert);
InfinityCertificate certificate_from_json(const std::string& text);

}  // namespace monodromy
