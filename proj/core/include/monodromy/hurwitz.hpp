#pragma once

#include <string>
#include <vector>

#include "monodromy/braid.hpp"
#include "monodromy/sl2.hpp"

namespace monodromy {

enum class Base { disk, sphere };

enum class MoveDirection { forward, inverse };

// Ordered tuple of twist powers over a disk or sphere base. A sphere base
// forces total product = identity ("closed fiber sum" constraint); the disk
// base is free. The total product is cached because every Hurwitz move
// preserves it.
struct Factorization {
  Base base = Base::disk;
  std::vector<TwistPower> entries;
  IntMatrix2 total;

  Factorization() = default;
  Factorization(Base b, std::vector<TwistPower> es);

  std::size_t size() const { return entries.size(); }
  bool operator==(const Factorization& o) const {
    return base == o.base && entries == o.entries;
  }
};

// True when all exponents are +1 (every entry a single positive twist).
bool is_lefschetz(const Factorization& f);

// Entry-level moves, shared with certificate replay which works on bare
// tuples. Forward at i (1-based) maps (t_i, t_{i+1}) to (t_i |> t_{i+1}, t_i)
// where |> conjugates the curve by twist_matrix(t_i); inverse undoes it.
void hurwitz_move_entries(std::vector<TwistPower>& es, std::size_t i, MoveDirection dir);
void apply_braid_entries(std::vector<TwistPower>& es, const BraidWord& b);

Factorization hurwitz_move(const Factorization& f, std::size_t i, MoveDirection dir);

// Letters applied rightmost-first: apply_braid(f, b1*b2) =
// apply_braid(apply_braid(f, b2), b1), a left action.
Factorization apply_braid(const Factorization& f, const BraidWord& b);

IntMatrix2 total_product(const Factorization& f);
IntMatrix2 total_product(const std::vector<TwistPower>& es);

// Concatenation; bases must match and the sphere invariant must survive.
Factorization fiber_sum(const Factorization& f1, const Factorization& f2);

// Built-in families: "q:n" is the alternating disk tuple (Ta, Tb, Ta, ...)
// of length n with a=(1,0), b=(0,1); "E:d" is the sphere tuple (Ta, Tb)^{6d}
// of length 12d, whose product is the identity.
Factorization builtin(const std::string& id);

// JSON interchange: {"base":"disk","entries":[{"curve":[1,0],"power":1},...]}.
// Entries may instead carry {"matrix":[[a,b],[c,d]]}, accepted only when the
// matrix is recognized as a twist power.
Factorization factorization_from_json(const std::string& text);
std::string factorization_to_json(const Factorization& f);

}  // namespace monodromy
