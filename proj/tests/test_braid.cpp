#include <doctest.h>

#include <random>
#include <stdexcept>

#include "monodromy/braid.hpp"
#include "monodromy/errors.hpp"

using namespace monodromy;

namespace {

FreeWord random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    ls.push_back(sign(rng) ? g : -g);
  }
  return FreeWord(rank, std::move(ls));
}

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    ls.push_back(sign(rng) ? g : -g);
  }
  return BraidWord(n, std::move(ls));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(FreeWord(2, {1, 2, -2})) == FreeWord(2, {1}));
  CHECK(free_reduce(FreeWord(2, {})) == FreeWord(2, {}));
  CHECK(free_reduce(FreeWord(1, {1, -1, 1})) == FreeWord(1, {1}));
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(BraidWord(2, {2}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(FreeWord(2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(1, {1}), std::invalid_argument);
}

TEST_CASE("artin generator action") {
  CHECK(artin_act(BraidWord(2, {1}), FreeWord(2, {1})) == FreeWord(2, {1, 2, -1}));
  CHECK(artin_act(BraidWord(2, {1}), FreeWord(2, {2})) == FreeWord(2, {1}));
  FreeWord w(3, {1, -3, 2});
  CHECK(artin_act(BraidWord(3, {}), w) == w);
  CHECK(artin_act(BraidWord(3, {1, -1}), FreeWord(3, {2})) == FreeWord(3, {2}));
  CHECK_THROWS_AS(artin_act(BraidWord(2, {1}), FreeWord(3, {1})), std::invalid_argument);
}

TEST_CASE("artin action is a left action") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    BraidWord b1 = random_braid(rng, 4, 6);
    BraidWord b2 = random_braid(rng, 4, 6);
    FreeWord w = random_word(rng, 4, 8);
    CHECK(artin_act(concat(b1, b2), w) == artin_act(b1, artin_act(b2, w)));
  }
}

TEST_CASE("artin action aborts on length blow-up") {
  BraidWord pa = power(parse_braid_word("s1 s2^-1", 3), 40);
  CHECK_THROWS_AS(artin_act(pa, FreeWord(3, {1}), 4096), verification_error);
}

TEST_CASE("braid word problem") {
  CHECK(braid_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK_FALSE(braid_equal(BraidWord(2, {1}), BraidWord(2, {})));

  BraidWord s13 = halftwist_word(1, 3, 3);
  BraidWord s1cubed(3, {1, 1, 1});
  CHECK(braid_equal(power(concat(s13, s1cubed), 3), power(concat(s1cubed, s13), 3)));

  CHECK_THROWS_AS(braid_equal(BraidWord(2, {1}), BraidWord(3, {1})), std::invalid_argument);
}

TEST_CASE("braid relations hold under the word problem for n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(braid_equal(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1})));
    }
    for (int i = 1; i < n - 1; ++i) {
      for (int j = i + 2; j < n; ++j) {
        CHECK(braid_equal(BraidWord(n, {i, j}), BraidWord(n, {j, i})));
      }
    }
  }
}

TEST_CASE("half twists") {
  CHECK(halftwist_word(1, 2, 3).letters == std::vector<int>{1});
  CHECK(halftwist_word(1, 3, 3).letters == std::vector<int>{2, 1, -2});
  CHECK(halftwist_word(2, 4, 4).letters == std::vector<int>{3, 2, -3});
  CHECK_THROWS_AS(halftwist_word(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(halftwist_word(1, 4, 3), std::invalid_argument);
}

TEST_CASE("half twists permute exactly their two strands") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> perm = strand_permutation(halftwist_word(i, j, n));
        for (int s = 1; s <= n; ++s) {
          int expect = s == i ? j : (s == j ? i : s);
          CHECK(perm[static_cast<std::size_t>(s - 1)] == expect);
        }
      }
    }
  }
}

TEST_CASE("pure braid generators") {
  CHECK(pure_braid_generator(1, 2, 2).letters == std::vector<int>{1, 1});
  CHECK(pure_braid_generator(1, 3, 3).letters == std::vector<int>{2, 1, 1, -2});
  CHECK(pure_braid_generator(2, 3, 3).letters == std::vector<int>{2, 2});

  // pure braids act trivially on strand endpoints
  std::vector<int> perm = strand_permutation(pure_braid_generator(1, 4, 5));
  for (int s = 1; s <= 5; ++s) {
    CHECK(perm[static_cast<std::size_t>(s - 1)] == s);
  }
}

TEST_CASE("braid word text form") {
  BraidWord b = parse_braid_word("s1 s2^-1 s1^3", 3);
  CHECK(b.letters == std::vector<int>{1, -2, 1, 1, 1});
  CHECK(format_braid_word(b) == "s1 s2^-1 s1^3");
  CHECK(parse_braid_word("", 4).letters.empty());
  CHECK(parse_braid_word("s1^0", 3).letters.empty());

  CHECK_THROWS_AS(parse_braid_word("s3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("t1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("s1^x", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("s0", 3), std::invalid_argument);
}

TEST_CASE("format folds runs and round-trips") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    BraidWord b = random_braid(rng, 5, 10);
    BraidWord back = parse_braid_word(format_braid_word(b), 5);
    CHECK(back.letters == b.letters);
  }
}
