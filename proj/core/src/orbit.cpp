#include "monodromy/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace monodromy {

namespace {

struct MoveResult {
  std::string key;
  std::vector<TwistPower> entries;
};

// All 2(n-1) one-move images of a tuple, forward moves first. Pure apart from
// allocation, so frontier batches can be fanned out across threads.
std::vector<MoveResult> expand_vertex(const std::vector<TwistPower>& es, int n,
                                      bool up_to_conjugacy) {
  std::vector<MoveResult> out;
  out.reserve(2 * static_cast<std::size_t>(n - 1));
  for (int dir = 0; dir < 2; ++dir) {
    for (int g = 1; g < n; ++g) {
      std::vector<TwistPower> moved = es;
      hurwitz_move_entries(moved, static_cast<std::size_t>(g),
                           dir == 0 ? MoveDirection::forward : MoveDirection::inverse);
      std::string key = key_for_entries(moved, up_to_conjugacy).bytes;
      out.push_back({std::move(key), std::move(moved)});
    }
  }
  return out;
}

}  // namespace

OrbitGraph enumerate(const Factorization& f, const OrbitBudget& budget) {
  const int n = static_cast<int>(f.size());
  if (n < 2) {
    throw std::invalid_argument("orbit enumeration needs at least two entries");
  }
  if (budget.max_vertices < 1) {
    throw std::invalid_argument("vertex budget must be positive");
  }
  const bool conj = f.base == Base::sphere;
  const int degree = n - 1;
  const unsigned threads = std::max(1u, budget.threads);

  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::vector<TwistPower>> reps;
  std::vector<std::vector<std::uint32_t>> edges;

  std::string root_key = key_for_entries(f.entries, conj).bytes;
  ids.emplace(root_key, 0);
  reps.push_back(f.entries);

  std::vector<std::uint32_t> frontier{0};
  bool complete = true;

  // Frontier batches are expanded (possibly in parallel), then merged on one
  // thread in batch order; discovery order is therefore schedule-independent.
  constexpr std::size_t batch = 2048;
  while (!frontier.empty() && complete) {
    std::vector<std::uint32_t> next;
    for (std::size_t lo = 0; lo < frontier.size() && complete; lo += batch) {
      const std::size_t hi = std::min(lo + batch, frontier.size());
      std::vector<std::vector<MoveResult>> results(hi - lo);
      if (threads == 1 || hi - lo < 2) {
        for (std::size_t t = lo; t < hi; ++t) {
          results[t - lo] = expand_vertex(reps[frontier[t]], n, conj);
        }
      } else {
        std::vector<std::thread> pool;
        std::size_t per = (hi - lo + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
          std::size_t a = lo + w * per;
          std::size_t b = std::min(a + per, hi);
          if (a >= b) break;
          pool.emplace_back([&, a, b, lo] {
            for (std::size_t t = a; t < b; ++t) {
              results[t - lo] = expand_vertex(reps[frontier[t]], n, conj);
            }
          });
        }
        for (auto& th : pool) th.join();
      }
      // sequential merge: first writer wins, ids in deterministic order
      for (std::size_t t = lo; t < hi && complete; ++t) {
        const std::uint32_t v = frontier[t];
        if (edges.size() <= v) edges.resize(v + 1);
        auto& row = edges[v];
        row.assign(2 * static_cast<std::size_t>(degree), OrbitGraph::no_edge);
        auto& res = results[t - lo];
        for (std::size_t s = 0; s < res.size(); ++s) {
          auto it = ids.find(res[s].key);
          std::uint32_t target;
          if (it != ids.end()) {
            target = it->second;
          } else {
            if (reps.size() >= budget.max_vertices) {
              complete = false;
              break;
            }
            target = static_cast<std::uint32_t>(reps.size());
            ids.emplace(std::move(res[s].key), target);
            reps.push_back(std::move(res[s].entries));
            next.push_back(target);
          }
          row[s] = target;
        }
      }
    }
    frontier = std::move(next);
  }

  OrbitGraph g;
  g.base = f.base;
  g.strands = n;
  g.complete = complete;
  edges.resize(reps.size());
  for (auto& row : edges) {
    if (row.empty()) row.assign(2 * static_cast<std::size_t>(degree), OrbitGraph::no_edge);
  }

  // Finalize ids: root stays 0, the rest ordered by canonical key.
  const std::size_t N = reps.size();
  std::vector<std::pair<std::string, std::uint32_t>> order;
  order.reserve(N - 1);
  for (const auto& [key, id] : ids) {
    if (id != 0) order.emplace_back(key, id);
  }
  std::sort(order.begin(), order.end());
  std::vector<std::uint32_t> remap(N);
  remap[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i].second] = static_cast<std::uint32_t>(i + 1);
  }

  g.keys.resize(N);
  g.reps.resize(N);
  g.edges.assign(N, {});
  g.keys[0] = CanonicalKey{std::move(root_key)};
  for (auto& [key, id] : order) {
    g.keys[remap[id]] = CanonicalKey{std::move(key)};
  }
  for (std::size_t v = 0; v < N; ++v) {
    g.reps[remap[v]] = std::move(reps[v]);
    auto& row = g.edges[remap[v]];
    row = std::move(edges[v]);
    for (auto& tgt : row) {
      if (tgt != OrbitGraph::no_edge) tgt = remap[tgt];
    }
  }
  return g;
}

bool stabilizes(const Factorization& f, const BraidWord& b) {
  if (static_cast<std::size_t>(b.strands) != f.size()) {
    throw std::invalid_argument("braid strand count does not match factorization length");
  }
  const bool conj = f.base == Base::sphere;
  Factorization moved = apply_braid(f, b);
  return key_for_entries(moved.entries, conj) == key_for_entries(f.entries, conj);
}

PureOrbitResult pure_orbit_size(const Factorization& f, std::size_t max_vertices) {
  const int n = static_cast<int>(f.size());
  if (n < 2) {
    throw std::invalid_argument("orbit enumeration needs at least two entries");
  }
  const bool conj = f.base == Base::sphere;

  std::vector<BraidWord> gens;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      gens.push_back(pure_braid_generator(i, j, n));
      gens.push_back(inverse(gens.back()));
    }
  }

  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::vector<TwistPower>> reps;
  ids.emplace(key_for_entries(f.entries, conj).bytes, 0);
  reps.push_back(f.entries);

  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : frontier) {
      for (const auto& w : gens) {
        std::vector<TwistPower> moved = reps[v];
        apply_braid_entries(moved, w);
        std::string key = key_for_entries(moved, conj).bytes;
        auto it = ids.find(key);
        if (it == ids.end()) {
          if (reps.size() >= max_vertices) {
            return {reps.size(), false};
          }
          std::uint32_t id = static_cast<std::uint32_t>(reps.size());
          ids.emplace(std::move(key), id);
          reps.push_back(std::move(moved));
          next.push_back(id);
        }
      }
    }
    frontier = std::move(next);
  }
  return {reps.size(), true};
}

std::vector<std::size_t> fixed_point_stats(const OrbitGraph& g) {
  if (!g.complete) {
    throw std::invalid_argument("fixed point stats need a complete orbit graph");
  }
  const int degree = g.strands - 1;
  std::vector<std::size_t> counts(static_cast<std::size_t>(degree), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int i = 0; i < degree; ++i) {
      if (g.edges[v][static_cast<std::size_t>(i)] == v) {
        ++counts[static_cast<std::size_t>(i)];
      }
    }
  }
  return counts;
}

std::string export_dot(const OrbitGraph& g) {
  std::ostringstream os;
  os << "digraph hurwitz_orbit {\n";
  if (!g.complete) {
    os << "  // incomplete: vertex budget exhausted before closure\n";
  }
  os << "  node [shape=circle];\n";
  os << "  0 [shape=doublecircle];\n";
  const int degree = g.strands - 1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int i = 0; i < degree; ++i) {
      std::uint32_t w = g.edges[v][static_cast<std::size_t>(i)];
      if (w == OrbitGraph::no_edge || w == v) continue;  // self-loops omitted
      os << "  " << v << " -> " << w << " [label=\"s" << (i + 1) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace monodromy
