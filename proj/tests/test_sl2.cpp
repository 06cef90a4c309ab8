#include <doctest.h>

#include <random>
#include <stdexcept>

#include "monodromy/sl2.hpp"

using namespace monodromy;

namespace {

const IntMatrix2 Ta(1, -1, 0, 1);
const IntMatrix2 Tb(1, 0, 1, 1);
const IntMatrix2 I2(1, 0, 0, 1);

TorusCurve random_curve(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-30, 30);
  for (;;) {
    BigInt p = coord(rng);
    BigInt q = coord(rng);
    if (p == 0 && q == 0) {
      continue;
    }
    BigInt g = gcd(p, q);
    return TorusCurve(p / g, q / g);
  }
}

IntMatrix2 random_sl2(std::mt19937_64& rng) {
  // Random word in the generators stays exactly in SL2(Z).
  std::uniform_int_distribution<int> pick(0, 3);
  IntMatrix2 a = I2;
  for (int i = 0; i < 12; ++i) {
    switch (pick(rng)) {
      case 0:
        a = mat_mul(a, Ta);
        break;
      case 1:
        a = mat_mul(a, Tb);
        break;
      case 2:
        a = mat_mul(a, mat_inv(Ta));
        break;
      default:
        a = mat_mul(a, mat_inv(Tb));
        break;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("matrix constructor enforces determinant one") {
  CHECK_NOTHROW(IntMatrix2(0, -1, 1, 1));
  CHECK_THROWS_AS(IntMatrix2(1, 0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix2(1, 0, 0, -1), std::invalid_argument);
}

TEST_CASE("matrix product and inverse") {
  CHECK(mat_mul(Ta, Tb) == IntMatrix2(0, -1, 1, 1));
  CHECK(mat_mul(I2, Ta) == Ta);

  IntMatrix2 tab = mat_mul(Ta, Tb);
  IntMatrix2 cube = mat_mul(mat_mul(tab, tab), tab);
  CHECK(cube == IntMatrix2(-1, 0, 0, -1));
  CHECK(mat_mul(cube, cube) == I2);

  CHECK(mat_inv(Ta) == IntMatrix2(1, 1, 0, 1));
  CHECK(mat_inv(I2) == I2);
  CHECK(mat_mul(mat_inv(Tb), Tb) == I2);
}

TEST_CASE("torus curves are primitive and sign-canonical") {
  CHECK(TorusCurve(-1, 1) == TorusCurve(1, -1));
  CHECK(TorusCurve(0, -1) == TorusCurve(0, 1));
  CHECK_THROWS_AS(TorusCurve(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(TorusCurve(0, 0), std::invalid_argument);
}

TEST_CASE("twist power rejects zero exponent") {
  CHECK_NOTHROW(TwistPower(TorusCurve(1, 0), -3));
  CHECK_THROWS_AS(TwistPower(TorusCurve(1, 0), 0), std::invalid_argument);
}

TEST_CASE("twist matrices") {
  CHECK(twist_matrix(TwistPower(TorusCurve(1, 0), 1)) == Ta);
  CHECK(twist_matrix(TwistPower(TorusCurve(0, 1), 1)) == Tb);
  CHECK(twist_matrix(TwistPower(TorusCurve(1, 0), -1)) == IntMatrix2(1, 1, 0, 1));
}

TEST_CASE("matrices act on curves") {
  CHECK(apply_to_curve(Ta, TorusCurve(0, 1)) == TorusCurve(1, -1));
  CHECK(apply_to_curve(Tb, TorusCurve(1, 0)) == TorusCurve(1, 1));
  CHECK(apply_to_curve(I2, TorusCurve(3, 5)) == TorusCurve(3, 5));
}

TEST_CASE("intersection numbers") {
  CHECK(intersection(TorusCurve(1, 0), TorusCurve(0, 1)) == 1);
  CHECK(intersection(TorusCurve(2, 5), TorusCurve(2, 5)) == 0);
  CHECK(intersection(TorusCurve(1, -1), TorusCurve(1, 1)) == 2);
}

TEST_CASE("intersection growth law") {
  CHECK(intersection_growth(TorusCurve(1, 0), TorusCurve(0, 1), 3) == 3);
  CHECK(intersection_growth(TorusCurve(1, 0), TorusCurve(0, 1), -3) == 3);
  CHECK(intersection_growth(TorusCurve(2, 5), TorusCurve(1, 1), 0) == 0);
  CHECK(intersection_growth(TorusCurve(1, -1), TorusCurve(1, 1), 2) == 8);
}

TEST_CASE("twist recognition") {
  TwistRecognition r = recognize_twist(Ta);
  CHECK(r.kind == TwistRecognition::Kind::twist_power);
  CHECK(r.twist == TwistPower(TorusCurve(1, 0), 1));

  CHECK(recognize_twist(I2).kind == TwistRecognition::Kind::identity);
  // trace 1 (elliptic) and trace -2 / trace 3 are never twist powers
  CHECK(recognize_twist(IntMatrix2(0, -1, 1, 1)).kind == TwistRecognition::Kind::not_twist);
  CHECK(recognize_twist(IntMatrix2(-1, 0, 0, -1)).kind == TwistRecognition::Kind::not_twist);
  CHECK(recognize_twist(IntMatrix2(2, 1, 1, 1)).kind == TwistRecognition::Kind::not_twist);
}

TEST_CASE("twist recognition round-trips on random twists") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> expo(-20, 20);
  for (int iter = 0; iter < 200; ++iter) {
    BigInt k = expo(rng);
    if (k == 0) {
      continue;
    }
    TwistPower t(random_curve(rng), k);
    TwistRecognition r = recognize_twist(twist_matrix(t));
    REQUIRE(r.kind == TwistRecognition::Kind::twist_power);
    CHECK(r.twist == t);
  }
}

TEST_CASE("conjugation covariance of twists") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix2 a = random_sl2(rng);
    TorusCurve c = random_curve(rng);
    TwistPower t(c, 2);
    IntMatrix2 lhs = twist_matrix(TwistPower(apply_to_curve(a, c), 2));
    IntMatrix2 rhs = mat_mul(mat_mul(a, twist_matrix(t)), mat_inv(a));
    // The curve class forgets sign, but the twist matrix is sign-insensitive
    // (v enters quadratically), so equality is exact.
    CHECK(lhs == rhs);
  }
}

TEST_CASE("intersection is conjugation-invariant") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix2 a = random_sl2(rng);
    TorusCurve c = random_curve(rng);
    TorusCurve d = random_curve(rng);
    CHECK(intersection(apply_to_curve(a, c), apply_to_curve(a, d)) == intersection(c, d));
  }
}
