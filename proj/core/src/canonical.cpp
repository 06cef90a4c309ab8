#include "monodromy/canonical.hpp"

#include <sstream>

namespace monodromy {

namespace {

// extended gcd: returns (g, u, v) with u*a + v*b = g > 0 for (a,b) != (0,0)
struct Egcd {
  BigInt g, u, v;
};

Egcd egcd(const BigInt& a, const BigInt& b) {
  if (b == 0) {
    if (a >= 0) return {a, 1, 0};
    return {-a, -1, 0};
  }
  Egcd sub = egcd(b, a % b);
  return {sub.g, sub.v, sub.u - (a / b) * sub.v};
}

std::string serialize(const std::vector<TwistPower>& es, char tag) {
  std::ostringstream os;
  os << tag << '|';
  for (const auto& t : es) {
    os << t.curve.p << ',' << t.curve.q << ',' << t.exponent << ';';
  }
  return os.str();
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::vector<TwistPower> conjugate_entries(const std::vector<TwistPower>& es, const IntMatrix2& A) {
  std::vector<TwistPower> out;
  out.reserve(es.size());
  for (const auto& t : es) {
    out.emplace_back(apply_to_curve(A, t.curve), t.exponent);
  }
  return out;
}

std::vector<TwistPower> canonical_conjugacy_representative(const std::vector<TwistPower>& es) {
  if (es.empty()) return {};
  const TorusCurve one_zero(1, 0);

  // Step 1: conjugate the first curve to (1,0) via [[u,v],[-q,p]].
  const TorusCurve& c1 = es.front().curve;
  Egcd e = egcd(c1.p, c1.q);
  IntMatrix2 A(e.u, e.v, -c1.q, c1.p);
  std::vector<TwistPower> out = conjugate_entries(es, A);

  // Step 2: first curve not parallel to (1,0); all-parallel tuples are done.
  std::size_t j = out.size();
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (!(out[t].curve == one_zero)) {
      j = t;
      break;
    }
  }
  if (j == out.size()) return out;

  // Step 3: normalize that curve to q > 0, 0 <= p < q with [[1,m],[0,1]].
  // Sign canonicalization already guarantees q != 0 here; the class rep with
  // q > 0 is (p,q) itself when q > 0, else (-p,-q).
  BigInt pj = out[j].curve.p;
  BigInt qj = out[j].curve.q;
  if (qj < 0) {
    pj = -pj;
    qj = -qj;
  }
  BigInt p_reduced = floor_mod(pj, qj);
  BigInt m = (p_reduced - pj) / qj;
  IntMatrix2 U(1, m, 0, 1);
  return conjugate_entries(out, U);
}

CanonicalKey key_for_entries(const std::vector<TwistPower>& es, bool up_to_conjugacy) {
  if (!up_to_conjugacy) {
    return CanonicalKey{serialize(es, 'D')};
  }
  return CanonicalKey{serialize(canonical_conjugacy_representative(es), 'S')};
}

CanonicalKey disk_key(const Factorization& f) {
  if (f.base != Base::disk) {
    throw std::invalid_argument("disk_key requires a disk-based factorization");
  }
  return key_for_entries(f.entries, false);
}

CanonicalKey sphere_key(const Factorization& f) {
  if (f.base != Base::sphere) {
    throw std::invalid_argument("sphere_key requires a sphere-based factorization");
  }
  return key_for_entries(f.entries, true);
}

std::vector<BigInt> trace_prehash(const Factorization& f) {
  std::vector<BigInt> out;
  if (f.entries.empty()) return out;
  out.reserve(2 * f.entries.size() - 1);
  IntMatrix2 P;
  std::vector<IntMatrix2> ms;
  ms.reserve(f.entries.size());
  for (const auto& t : f.entries) {
    ms.push_back(twist_matrix(t));
    P = mat_mul(P, ms.back());
    out.push_back(P.trace());
  }
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
    out.push_back(mat_mul(ms[i], ms[i + 1]).trace());
  }
  return out;
}

}  // namespace monodromy
