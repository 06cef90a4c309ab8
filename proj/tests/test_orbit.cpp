#include <doctest.h>

#include <random>
#include <stdexcept>

#include "monodromy/canonical.hpp"
#include "monodromy/orbit.hpp"

using namespace monodromy;

namespace {

OrbitGraph full(const std::string& id, unsigned threads = 1) {
  OrbitBudget b;
  b.threads = threads;
  return enumerate(builtin(id), b);
}

}  // namespace

TEST_CASE("orbit sizes for the alternating disk tuples") {
  OrbitGraph g2 = full("q:2");
  CHECK(g2.size() == 3);
  CHECK(g2.complete);

  OrbitGraph g3 = full("q:3");
  CHECK(g3.size() == 8);
  CHECK(g3.complete);

  OrbitGraph g4 = full("q:4");
  CHECK(g4.size() == 27);
  CHECK(g4.complete);
}

TEST_CASE("root is vertex zero") {
  OrbitGraph g = full("q:3");
  CHECK(g.keys[0] == disk_key(builtin("q:3")));
}

TEST_CASE("complete graphs satisfy the degree criterion") {
  for (const char* id : {"q:2", "q:3", "q:4"}) {
    OrbitGraph g = full(id);
    REQUIRE(g.complete);
    for (const auto& row : g.edges) {
      REQUIRE(row.size() == 2 * static_cast<std::size_t>(g.strands - 1));
      for (std::uint32_t e : row) {
        CHECK(e != OrbitGraph::no_edge);
        CHECK(e < g.size());
      }
    }
  }
}

TEST_CASE("forward and inverse edges are mutually inverse") {
  OrbitGraph g = full("q:4");
  std::size_t m = static_cast<std::size_t>(g.strands - 1);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t i = 0; i < m; ++i) {
      std::uint32_t w = g.edges[v][i];
      CHECK(g.edges[w][m + i] == v);
    }
  }
}

TEST_CASE("edge targets match recomputation from representatives") {
  OrbitGraph g = full("q:4");
  std::size_t m = static_cast<std::size_t>(g.strands - 1);
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<std::size_t> pick_v(0, g.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_e(0, 2 * m - 1);
  std::size_t samples = (g.size() * 2 * m) / 10;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t v = pick_v(rng);
    std::size_t e = pick_e(rng);
    std::size_t gen = e < m ? e + 1 : e - m + 1;
    MoveDirection dir = e < m ? MoveDirection::forward : MoveDirection::inverse;
    std::vector<TwistPower> es = g.reps[v];
    hurwitz_move_entries(es, gen, dir);
    CHECK(key_for_entries(es, g.base == Base::sphere) == g.keys[g.edges[v][e]]);
  }
}

TEST_CASE("budget exhaustion reports an incomplete graph") {
  OrbitBudget b;
  b.max_vertices = 1000;
  OrbitGraph g = enumerate(builtin("q:5"), b);
  CHECK_FALSE(g.complete);
  CHECK(g.size() == 1000);

  OrbitBudget bs;
  bs.max_vertices = 50;
  OrbitGraph gs = enumerate(builtin("E:1"), bs);
  CHECK_FALSE(gs.complete);
  CHECK(gs.size() == 50);
}

TEST_CASE("parallel schedules give identical graphs") {
  OrbitGraph a = full("q:4", 1);
  OrbitGraph b = full("q:4", 4);
  CHECK(a.keys == b.keys);
  CHECK(a.edges == b.edges);

  OrbitBudget small;
  small.max_vertices = 500;
  small.threads = 1;
  OrbitGraph pa = enumerate(builtin("q:5"), small);
  small.threads = 4;
  OrbitGraph pb = enumerate(builtin("q:5"), small);
  CHECK(pa.keys == pb.keys);
}

TEST_CASE("stabilizer membership") {
  Factorization q3 = builtin("q:3");
  CHECK(stabilizes(q3, halftwist_word(1, 3, 3)));
  CHECK(stabilizes(q3, BraidWord(3, {1, 1, 1})));
  CHECK_FALSE(stabilizes(q3, BraidWord(3, {1})));
  CHECK_THROWS_AS(stabilizes(q3, BraidWord(4, {1})), std::invalid_argument);
}

TEST_CASE("pure-braid orbits match the full orbits") {
  CHECK(pure_orbit_size(builtin("q:2")).size == 3);
  CHECK(pure_orbit_size(builtin("q:3")).size == 8);
  CHECK(pure_orbit_size(builtin("q:4")).size == 27);
  CHECK(pure_orbit_size(builtin("q:4")).complete);
}

TEST_CASE("fixed point statistics") {
  CHECK(fixed_point_stats(full("q:2")) == std::vector<std::size_t>{0});
  CHECK(fixed_point_stats(full("q:3")) == std::vector<std::size_t>{2, 2});
  CHECK(fixed_point_stats(full("q:4")) == std::vector<std::size_t>{9, 9, 9});

  OrbitBudget b;
  b.max_vertices = 10;
  OrbitGraph partial = enumerate(builtin("q:5"), b);
  CHECK_THROWS_AS(fixed_point_stats(partial), std::invalid_argument);
}

TEST_CASE("single-entry factorizations cannot be enumerated") {
  CHECK_THROWS_AS(enumerate(builtin("q:1")), std::invalid_argument);
}

TEST_CASE("dot export") {
  OrbitGraph g = full("q:2");
  std::string dot = export_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"s1\"") != std::string::npos);
  CHECK(dot.find("incomplete") == std::string::npos);

  OrbitBudget b;
  b.max_vertices = 10;
  std::string partial = export_dot(enumerate(builtin("q:5"), b));
  CHECK(partial.find("incomplete") != std::string::npos);
}
