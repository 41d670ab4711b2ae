#include <doctest.h>

#include <cmath>
#include <random>

#include "gamma_enclose/bounds.hpp"
#include "gamma_enclose/errors.hpp"
#include "mp50.hpp"

using namespace gamma_enclose;

namespace {

mp50::Float ln_factorial_50(int n) {
  mp50::Float s = 0;
  for (int k = 2; k <= n; ++k) s += log(mp50::Float(k));
  return s;
}

}  // namespace

TEST_CASE("family table and parsing") {
  CHECK(all_families().size() == 7);
  for (const auto& f : all_families()) {
    auto id = parse_family(f.name);
    REQUIRE(id);
    CHECK(*id == f.id);
  }
  CHECK_FALSE(parse_family("AB2005"));
  CHECK_FALSE(parse_family(""));
  CHECK(family(FamilyId::kQuarticSharp).domain_min == 1.0);
  CHECK(family(FamilyId::kFactorial).integer_domain);
  CHECK(family(FamilyId::kQuarticSharp).contains(1.0));
  CHECK_FALSE(family(FamilyId::kQuarticSharp).contains(0.999));
  CHECK_FALSE(family(FamilyId::kAB2005).contains(0.0));
  CHECK(family(FamilyId::kCubicRef2).contains(0.0));
}

TEST_CASE("every family encloses log Gamma(x+1) at random points") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> lx(std::log(1e-3), std::log(1e3));
  for (const auto& f : all_families()) {
    if (f.integer_domain) continue;
    for (int i = 0; i < 200; ++i) {
      const double x = std::max(f.domain_min, std::exp(lx(rng)));
      const Enclosure e = enclose_lgamma(f.id, x);
      const mp50::Float ref = boost::math::lgamma(mp50::Float(x) + 1);
      CAPTURE(f.name);
      CAPTURE(x);
      CHECK(mp50::from(e.lo) <= ref + 1e-25);
      CHECK(ref <= mp50::from(e.hi) + 1e-25);
      CHECK(e.width() >= 0.0);
    }
  }
}

TEST_CASE("examples") {
  const double ln24 = std::log(24.0);
  const Enclosure ab = enclose_lgamma(FamilyId::kAB2005, 4.0);
  CHECK(ab.lo.hi() < ln24);
  CHECK(ab.hi.hi() > ln24);

  const TightnessRecord sharp = tightness(FamilyId::kQuarticSharp, 1.0);
  CHECK(std::fabs(sharp.gap_lower.hi()) <= 1e-25);

  const Enclosure z = enclose_lgamma(FamilyId::kDigammaArg, 0.0);
  CHECK(z.lo.is_zero());
  CHECK(z.hi.is_zero());
}

TEST_CASE("domain errors name the bound") {
  CHECK_THROWS_WITH_AS(enclose_lgamma(FamilyId::kQuarticSharp, 0.5),
                       doctest::Contains("x below domain_min 1"), DomainError);
  CHECK_THROWS_AS(enclose_lgamma(FamilyId::kAB2005, 0.0), DomainError);
  CHECK_THROWS_AS(enclose_lgamma(FamilyId::kCubicRef2, -1.0), DomainError);
  CHECK_THROWS_AS(enclose_factorial(0), DomainError);
}

TEST_CASE("delta star") {
  CHECK(delta_star(1.0).hi() == doctest::Approx(1.2943497247810449).epsilon(1e-15));
  for (double x : {1e-3, 0.5, 1.0, 10.0, 1e6, 1e9, 1e13}) {
    const ExtendedScalar d = delta_star(x);
    CHECK(d > x);
    CHECK(d < ExtendedScalar(x) + ExtendedScalar(1.0) / 3.0);
  }
  CHECK(std::fabs((delta_star(1e10) - delta_star_asymptotic(1e10)).hi()) < 1e-9);
  CHECK(enclose_lgamma(FamilyId::kBatirDelta, 2.0).hi < enclose_lgamma(FamilyId::kAB2005, 2.0).hi);
}

TEST_CASE("factorial enclosure brackets exact ln n!") {
  for (int n : {1, 2, 3, 10, 57, 170, 500}) {
    const Enclosure e = enclose_factorial(n);
    const mp50::Float want = ln_factorial_50(n);
    CHECK(mp50::abs_err(ln_factorial_exact(n), want) < 1e-30 * std::max(1.0, n * std::log(n)));
    CHECK(mp50::from(e.lo) <= want + 1e-25);
    CHECK(want <= mp50::from(e.hi) + 1e-25);
  }
  CHECK(std::fabs(enclose_factorial(1).lo.hi()) <= 1e-25);
  CHECK_THROWS_AS(ln_factorial_exact(kExactFactorialMax + 1), DomainError);
}

TEST_CASE("constants") {
  const Constants& k = constants_table();
  CHECK(k.a_star_lo.hi() == doctest::Approx(0.049653963176).epsilon(1e-10));
  CHECK(k.a_star_hi.hi() == doctest::Approx(1.0 / 18.0));
  CHECK(k.alpha_lo.hi() == doctest::Approx(std::pow(18.0, 0.25)));
  CHECK(k.beta_lo.hi() == doctest::Approx(std::exp(1.0) * std::pow(18.0 / 25.0, 0.25)));
  CHECK(k.published_alpha_lo.hi() == doctest::Approx(0.821728).epsilon(1e-6));
  CHECK(k.published_beta_lo.hi() == doctest::Approx(0.998936).epsilon(1e-6));
  CHECK(std::fabs((dd_exp(k.log_alpha_hi) - k.alpha_hi).hi()) < 1e-30);
}
