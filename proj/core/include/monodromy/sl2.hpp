#pragma once

#include <string>

#include "monodromy/bigint.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

// Row-major 2x2 integer matrix, constrained to SL2(Z).
struct IntMatrix2 {
  BigInt a{1}, b{0}, c{0}, d{1};

  IntMatrix2() = default;
  IntMatrix2(BigInt a_, BigInt b_, BigInt c_, BigInt d_);

  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  bool operator==(const IntMatrix2&) const = default;
};

// Isotopy class of an essential simple closed curve on the torus, stored as a
// primitive pair with the first nonzero coordinate positive (a curve equals
// its reverse, so (p,q) and (-p,-q) are the same class).
struct TorusCurve {
  BigInt p{1}, q{0};

  TorusCurve() = default;
  TorusCurve(BigInt p_, BigInt q_);

  bool operator==(const TorusCurve&) const = default;
  bool operator<(const TorusCurve& o) const { return p < o.p || (p == o.p && q < o.q); }
};

// A power of a Dehn twist; the atom of a monodromy factorization.
struct TwistPower {
  TorusCurve curve;
  BigInt exponent{1};

  TwistPower() = default;
  TwistPower(TorusCurve c, BigInt k);

  bool operator==(const TwistPower&) const = default;
};

IntMatrix2 mat_mul(const IntMatrix2& A, const IntMatrix2& B);
IntMatrix2 mat_inv(const IntMatrix2& A);

// Matrix of T_c^k in the convention T_c(v) = v + <v,c>c with
// <(a,b),(p,q)> = aq - bp; explicitly [[1+kpq, -kp^2], [kq^2, 1-kpq]].
IntMatrix2 twist_matrix(const TwistPower& t);

TorusCurve apply_to_curve(const IntMatrix2& A, const TorusCurve& c);

// Geometric intersection number |p1 q2 - q1 p2|.
BigInt intersection(const TorusCurve& c1, const TorusCurve& c2);

// i(d, T_c^k d), which must equal |k| * i(c,d)^2; the equality is recomputed
// and enforced on every call, so a convention bug cannot pass silently.
BigInt intersection_growth(const TorusCurve& c, const TorusCurve& d, const BigInt& k);

struct TwistRecognition {
  enum class Kind { identity, twist_power, not_twist };
  Kind kind = Kind::not_twist;
  TwistPower twist;  // meaningful only when kind == twist_power
};

// Inverse of twist_matrix: decides whether A is the identity, a twist power
// (returned sign-canonically), or neither.
TwistRecognition recognize_twist(const IntMatrix2& A);

std::string to_string(const IntMatrix2& A);
std::string to_string(const TorusCurve& c);

}  // namespace monodromy
