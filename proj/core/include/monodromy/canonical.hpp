#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monodromy/hurwitz.hpp"

namespace monodromy {

// Opaque canonical key. Equal keys mean equal disk tuples, or simultaneously
// SL2(Z)-conjugate tuples for the sphere base.
struct CanonicalKey {
  std::string bytes;

  bool operator==(const CanonicalKey&) const = default;
  bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }
  std::string hex() const;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    return std::hash<std::string>{}(k.bytes);
  }
};

CanonicalKey disk_key(const Factorization& f);
CanonicalKey sphere_key(const Factorization& f);

// Key for bare entry tuples; `up_to_conjugacy` selects the sphere behavior.
// Certificate replay and the orbit engine share this path.
CanonicalKey key_for_entries(const std::vector<TwistPower>& es, bool up_to_conjugacy);

// Canonical representative of a tuple under simultaneous conjugation
// c -> A.c: conjugate the first curve to (1,0); if some curve is not parallel
// to it, normalize the first such to (p,q) with q > 0 and 0 <= p < q using
// the residual unipotent stabilizer. The residual stabilizer of the result is
// +-I, which acts trivially on curve classes, so this is a complete invariant.
std::vector<TwistPower> canonical_conjugacy_representative(const std::vector<TwistPower>& es);

std::vector<TwistPower> conjugate_entries(const std::vector<TwistPower>& es, const IntMatrix2& A);

// Conjugation-invariant integer fingerprint: traces of all prefix products
// followed by traces of all adjacent-pair products. Cheap shard discriminator
// for hash tables; agreement is necessary, not sufficient, for key equality.
std::vector<BigInt> trace_prehash(const Factorization& f);

}  // namespace monodromy
