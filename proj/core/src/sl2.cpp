#include "monodromy/sl2.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>

namespace monodromy {

IntMatrix2::IntMatrix2(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det() != 1) {
    throw std::invalid_argument("matrix is not in SL2(Z): det = " + det().str());
  }
}

TorusCurve::TorusCurve(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {
  if (boost::multiprecision::gcd(p, q) != 1) {
    throw std::invalid_argument("curve (" + p.str() + "," + q.str() + ") is not primitive");
  }
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
}

TwistPower::TwistPower(TorusCurve c, BigInt k) : curve(std::move(c)), exponent(std::move(k)) {
  if (exponent == 0) {
    throw std::invalid_argument("twist power must have nonzero exponent");
  }
}

IntMatrix2 mat_mul(const IntMatrix2& A, const IntMatrix2& B) {
  return IntMatrix2(A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
                    A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d);
}

IntMatrix2 mat_inv(const IntMatrix2& A) {
  // det 1, so the adjugate is the inverse
  return IntMatrix2(A.d, -A.b, -A.c, A.a);
}

IntMatrix2 twist_matrix(const TwistPower& t) {
  const BigInt& p = t.curve.p;
  const BigInt& q = t.curve.q;
  const BigInt& k = t.exponent;
  return IntMatrix2(1 + k * p * q, -k * p * p, k * q * q, 1 - k * p * q);
}

TorusCurve apply_to_curve(const IntMatrix2& A, const TorusCurve& c) {
  return TorusCurve(A.a * c.p + A.b * c.q, A.c * c.p + A.d * c.q);
}

BigInt intersection(const TorusCurve& c1, const TorusCurve& c2) {
  return boost::multiprecision::abs(c1.p * c2.q - c1.q * c2.p);
}

BigInt intersection_growth(const TorusCurve& c, const TorusCurve& d, const BigInt& k) {
  if (k == 0) {
    return 0;
  }
  TorusCurve image = apply_to_curve(twist_matrix(TwistPower(c, k)), d);
  BigInt got = intersection(d, image);
  BigInt i0 = intersection(c, d);
  BigInt expected = boost::multiprecision::abs(k) * i0 * i0;
  if (got != expected) {
    throw verification_error("intersection growth mismatch: i(d, T^k d) = " + got.str() +
                             " but |k| i(c,d)^2 = " + expected.str());
  }
  return got;
}

TwistRecognition recognize_twist(const IntMatrix2& A) {
  TwistRecognition r;
  if (A == IntMatrix2()) {
    r.kind = TwistRecognition::Kind::identity;
    return r;
  }
  if (A.trace() != 2) {
    return r;  // a twist power is unipotent: trace must be 2
  }
  // A - I = k * (p,q)^T (q,-p): read k and the curve back off the entries.
  // n12 = -k p^2, n21 = k q^2, n11 = k p q.
  const BigInt n11 = A.a - 1;
  const BigInt n12 = A.b;
  const BigInt n21 = A.c;
  BigInt p, q, k;
  if (n21 == 0) {
    // q = 0: curve is (1,0), n12 = -k
    if (n11 != 0 || A.d != 1) return r;
    p = 1;
    q = 0;
    k = -n12;
  } else if (n12 == 0) {
    // p = 0: curve is (0,1), n21 = k
    if (n11 != 0) return r;
    p = 0;
    q = 1;
    k = n21;
  } else {
    // generic: |k| = gcd(|n12|, |n21|) divided by nothing (p,q coprime
    // squares multiply to p^2 q^2, gcd(p^2,q^2)=1), sign of k from n21.
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    BigInt g = gcd(abs(n12), abs(n21));
    k = (n21 > 0) ? g : -g;
    BigInt p2 = -n12 / k;
    BigInt q2 = n21 / k;
    if (p2 <= 0 || q2 <= 0) return r;
    p = boost::multiprecision::sqrt(p2);
    q = boost::multiprecision::sqrt(q2);
    if (p * p != p2 || q * q != q2) return r;
    if (n11 != k * p * q) {
      // the sign-canonical representative may need q < 0
      if (n11 == -k * p * q) {
        q = -q;
      } else {
        return r;
      }
    }
  }
  if (boost::multiprecision::gcd(p, boost::multiprecision::abs(q)) != 1) return r;
  TwistPower t{TorusCurve(p, q), k};
  if (twist_matrix(t) != A) return r;
  r.kind = TwistRecognition::Kind::twist_power;
  r.twist = t;
  return r;
}

std::string to_string(const IntMatrix2& A) {
  std::ostringstream os;
  os << "[[" << A.a << "," << A.b << "],[" << A.c << "," << A.d << "]]";
  return os.str();
}

std::string to_string(const TorusCurve& c) {
  std::ostringstream os;
  os << "(" << c.p << "," << c.q << ")";
  return os.str();
}

}  // namespace monodromy
