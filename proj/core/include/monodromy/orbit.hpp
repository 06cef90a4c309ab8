#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "monodromy/canonical.hpp"
#include "monodromy/hurwitz.hpp"

namespace monodromy {

// BFS closure of a factorization under all Hurwitz moves. Vertex 0 is the
// root; the remaining ids are assigned by sorted canonical key at
// finalization, so the graph is identical regardless of traversal schedule.
struct OrbitGraph {
  static constexpr std::uint32_t no_edge = std::numeric_limits<std::uint32_t>::max();

  Base base = Base::disk;
  int strands = 2;
  bool complete = false;
  std::vector<CanonicalKey> keys;                  // per vertex id
  std::vector<std::vector<TwistPower>> reps;       // stored representatives
  // edges[v][g-1]: forward target under s_g; edges[v][strands-1 + g-1]:
  // inverse target. no_edge marks unexplored slots of an incomplete graph.
  std::vector<std::vector<std::uint32_t>> edges;

  std::size_t size() const { return keys.size(); }
};

struct OrbitBudget {
  std::size_t max_vertices = 1'000'000;
  unsigned threads = 1;
};

OrbitGraph enumerate(const Factorization& f, const OrbitBudget& budget = {});

bool stabilizes(const Factorization& f, const BraidWord& b);

struct PureOrbitResult {
  std::size_t size = 0;
  bool complete = false;
};

// Orbit under the pure-braid generators A_ij^{+-1} only.
PureOrbitResult pure_orbit_size(const Factorization& f, std::size_t max_vertices = 1'000'000);

// Per-generator count of vertices fixed by the forward move (self-loops).
// Requires a complete graph.
std::vector<std::size_t> fixed_point_stats(const OrbitGraph& g);

// DOT digraph with forward edges labeled "s<i>"; self-loops omitted; an
// incomplete graph carries a marker comment.
std::string export_dot(const OrbitGraph& g);

}  // namespace monodromy
