#include <doctest.h>

#include <stdexcept>

#include "monodromy/certify.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/hurwitz.hpp"

using namespace monodromy;

namespace {

const TorusCurve alpha(1, 0);
const TorusCurve beta(0, 1);

TwistPower ta() { return TwistPower(alpha, 1); }
TwistPower tb() { return TwistPower(beta, 1); }

// (a,b,b,a,a,b,b,a) followed by four b's; the product is the identity, so it
// is a valid sphere factorization. No pair has intersection >= 2 and no
// alternating 10-subsequence exists, so only the 8-pattern route applies.
Factorization eta1_carrier() {
  std::vector<TwistPower> es{ta(), tb(), tb(), ta(), ta(), tb(), tb(), ta(),
                             tb(), tb(), tb(), tb()};
  return Factorization(Base::sphere, std::move(es));
}

}  // namespace

TEST_CASE("pattern search on the alternating tuple") {
  std::vector<std::vector<std::size_t>> hits =
      find_pattern(builtin("q:5"), alternating_pattern(5));
  REQUIRE_FALSE(hits.empty());
  CHECK(hits.front() == std::vector<std::size_t>{1, 2, 3, 4, 5});

  CHECK(find_pattern(builtin("E:1"), pair_pattern(2)).empty());

  std::vector<std::vector<std::size_t>> trivial =
      find_pattern(builtin("q:3"), SpiderPattern{});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().empty());
}

TEST_CASE("pattern search respects result limits") {
  std::vector<std::vector<std::size_t>> all = find_pattern(builtin("E:1"), alternating_pattern(2));
  std::vector<std::vector<std::size_t>> two =
      find_pattern(builtin("E:1"), alternating_pattern(2), 2);
  CHECK(all.size() > 2);
  CHECK(two.size() == 2);
  CHECK(two[0] == all[0]);
  CHECK(two[1] == all[1]);
}

TEST_CASE("five-cycle transformation") {
  std::vector<TwistPower> in{ta(), tb(), ta(), tb(), ta()};
  std::vector<TwistPower> out = transform_5cycle(in);
  std::vector<TwistPower> expect{tb(), tb(), TwistPower(TorusCurve(1, -1), 1),
                                 TwistPower(TorusCurve(1, 1), 1), tb()};
  CHECK(out == expect);

  // profile: positions 1,2,5 equal; middle pair meets twice; classes mix
  CHECK(out[0] == out[1]);
  CHECK(out[1] == out[4]);
  CHECK(intersection(out[2].curve, out[3].curve) == 2);
  CHECK(intersection(out[0].curve, out[2].curve) == 1);
  CHECK(total_product(out) == total_product(in));

  CHECK_THROWS_AS(transform_5cycle({ta(), tb(), ta(), tb(), tb()}), std::invalid_argument);
  CHECK_THROWS_AS(transform_5cycle({ta(), tb(), ta()}), std::invalid_argument);
}

TEST_CASE("strategy names round-trip") {
  for (Strategy s : {Strategy::s1, Strategy::s2, Strategy::s3, Strategy::auroux}) {
    CHECK(strategy_from_name(strategy_name(s)) == s);
  }
  CHECK_THROWS_AS(strategy_from_name("s9"), std::invalid_argument);
}

TEST_CASE("disk certificates for long alternating tuples") {
  for (int n : {5, 6, 7}) {
    auto cert = certify_infinite(builtin("q:" + std::to_string(n)), 30);
    REQUIRE(cert.has_value());
    CHECK(cert->base == Base::disk);
    CHECK(cert->strategy == Strategy::s2);
    CHECK_NOTHROW(verify_certificate(*cert));
  }
}

TEST_CASE("sphere certificates for the elliptic families") {
  for (int d : {1, 2}) {
    auto cert = certify_infinite(builtin("E:" + std::to_string(d)), 30);
    REQUIRE(cert.has_value());
    CHECK(cert->base == Base::sphere);
    CHECK(cert->strategy == Strategy::s2);
    CHECK_NOTHROW(verify_certificate(*cert));
  }
}

TEST_CASE("intersection-two pairs certify directly") {
  Factorization f(Base::disk,
                  {TwistPower(TorusCurve(1, -1), 1), TwistPower(TorusCurve(1, 1), 1)});
  auto cert = certify_infinite(f, 30);
  REQUIRE(cert.has_value());
  CHECK(cert->strategy == Strategy::s1);
  CHECK(cert->positions == std::vector<std::size_t>{1, 2});
}

TEST_CASE("eight-pattern certificate on a sphere carrier") {
  auto cert = certify_infinite(eta1_carrier(), 30);
  REQUIRE(cert.has_value());
  CHECK(cert->strategy == Strategy::s3);
  CHECK(cert->positions == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_NOTHROW(verify_certificate(*cert));
}

TEST_CASE("no certificate on finite orbits") {
  CHECK_FALSE(certify_infinite(builtin("q:2")).has_value());
  CHECK_FALSE(certify_infinite(builtin("q:3")).has_value());
  CHECK_FALSE(certify_infinite(builtin("q:4")).has_value());
}

TEST_CASE("certification requires positive twists") {
  Factorization f(Base::disk, {TwistPower(alpha, 2), TwistPower(beta, 1)});
  CHECK_THROWS_AS(certify_infinite(f), std::invalid_argument);
}

TEST_CASE("growth certificates for self fiber sums") {
  Factorization e1 = builtin("E:1");
  auto cert = auroux_divergence(e1, e1, 20);
  REQUIRE(cert.has_value());
  CHECK(cert->strategy == Strategy::auroux);
  CHECK(cert->subtuple.size() == 2);
  CHECK_NOTHROW(verify_certificate(*cert));

  // disjoint curves: the twists commute, no divergence
  Factorization flat(Base::disk, {ta(), ta(), ta()});
  CHECK_FALSE(auroux_divergence(flat, flat).has_value());

  CHECK_THROWS_AS(auroux_divergence(e1, builtin("E:2")), std::invalid_argument);
}

TEST_CASE("tampered certificates fail replay") {
  auto cert = certify_infinite(builtin("q:5"), 20);
  REQUIRE(cert.has_value());

  InfinityCertificate broken = *cert;
  broken.sigma = BraidWord(static_cast<int>(broken.subtuple.size()), {});
  CHECK_THROWS_AS(verify_certificate(broken), verification_error);

  InfinityCertificate badk = *cert;
  badk.K = 0;
  CHECK_THROWS_AS(verify_certificate(badk), verification_error);
}

TEST_CASE("certificate json round-trip") {
  auto cert = certify_infinite(builtin("E:1"), 15);
  REQUIRE(cert.has_value());
  InfinityCertificate back = certificate_from_json(certificate_to_json(*cert));
  CHECK(back.strategy == cert->strategy);
  CHECK(back.base == cert->base);
  CHECK(back.positions == cert->positions);
  CHECK(back.subtuple == cert->subtuple);
  CHECK(back.preparation.letters == cert->preparation.letters);
  CHECK(back.sigma.letters == cert->sigma.letters);
  CHECK(back.K == cert->K);
  CHECK_NOTHROW(verify_certificate(back));

  auto aur = auroux_divergence(builtin("E:1"), builtin("E:1"), 10);
  REQUIRE(aur.has_value());
  InfinityCertificate aback = certificate_from_json(certificate_to_json(*aur));
  CHECK_NOTHROW(verify_certificate(aback));

  CHECK_THROWS_AS(certificate_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(R"({"strategy":"s1"})"), std::invalid_argument);
}
