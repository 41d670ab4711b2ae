#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "gamma_enclose/errors.hpp"
#include "gamma_enclose/extprec.hpp"
#include "mp50.hpp"

using namespace gamma_enclose;

TEST_CASE("error-free transformations are exact") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> ex(-60, 60);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::ldexp(mant(rng), ex(rng));
    const double b = std::ldexp(mant(rng), ex(rng));
    double e = 0.0;
    const double s = eft::two_sum(a, b, e);
    CHECK(mp50::Float(s) + mp50::Float(e) == mp50::Float(a) + mp50::Float(b));
    const double p = eft::two_prod(a, b, e);
    CHECK(mp50::Float(p) + mp50::Float(e) == mp50::Float(a) * mp50::Float(b));
  }
}

TEST_CASE("construction and range contract") {
  CHECK_THROWS_AS(ExtendedScalar(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(ExtendedScalar(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(ExtendedScalar(1e308) * ExtendedScalar(10.0), RangeError);
  CHECK_THROWS_AS(ExtendedScalar(1e-200) * ExtendedScalar(1e-200), RangeError);

  const ExtendedScalar big = ExtendedScalar::from_integer((std::int64_t{1} << 62) + 1);
  CHECK(big.hi() == std::ldexp(1.0, 62));
  CHECK(big.lo() == 1.0);

  const ExtendedScalar third = ExtendedScalar(1.0) / 3.0;
  CHECK(std::fabs(third.lo()) <= std::ldexp(std::fabs(third.hi()), -53));
  CHECK(ExtendedScalar(2.0) > third);
  CHECK((-third).sign() == -1);
  CHECK(ExtendedScalar(0.0).is_zero());
}

TEST_CASE("field operations carry about 32 digits") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const ExtendedScalar a = ExtendedScalar(u(rng)) + std::ldexp(u(rng), -60);
    const ExtendedScalar b = ExtendedScalar(u(rng) + 2.0) + std::ldexp(u(rng), -60);
    const mp50::Float fa = mp50::from(a);
    const mp50::Float fb = mp50::from(b);
    CHECK(mp50::rel_err(a * b, fa * fb) < 1e-31);
    CHECK(mp50::rel_err(a / b, fa / fb) < 1e-31);
    CHECK(mp50::rel_err(a + b, fa + fb) < 1e-31);
  }
}

TEST_CASE("ln, exp and log1p against 50-digit values") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lx(-14.0, 14.0);
  for (int i = 0; i < 500; ++i) {
    const double x = std::exp(lx(rng));
    CHECK(mp50::rel_err(dd_ln(x), log(mp50::Float(x))) < 2e-31 * (1.0 + 1.0 / std::fabs(std::log(x))));
    const double y = lx(rng) * 40.0;
    CHECK(mp50::rel_err(dd_exp(y), exp(mp50::Float(y))) < 1e-29);
  }
  for (double t : {1e-20, 1e-8, -0.2, 0.24, 0.3, 3.0}) {
    CHECK(mp50::rel_err(dd_log1p(t), log1p(mp50::Float(t))) < 1e-30);
  }
  CHECK(dd_ln(1.0).is_zero());
  CHECK_THROWS_AS(dd_ln(0.0), DomainError);
  CHECK_THROWS_AS(dd_ln(-1.0), DomainError);
  CHECK_THROWS_AS(dd_exp(710.0), RangeError);
  CHECK_THROWS_AS(dd_log1p(-1.0), DomainError);
}

TEST_CASE("constants match independent series") {
  // ln 2 = sum 1/(k 2^k), e = sum 1/k!
  mp50::Float ln2 = 0, e = 0, term = 1;
  for (int k = 1; k < 200; ++k) ln2 += 1 / (mp50::Float(k) * pow(mp50::Float(2), k));
  for (int k = 0; k < 60; ++k) {
    e += term;
    term /= (k + 1);
  }
  CHECK(mp50::rel_err(constants::kLn2, ln2) < 1e-32);
  CHECK(mp50::rel_err(constants::kE, e) < 1e-32);
  CHECK(mp50::rel_err(constants::kPi, boost::math::constants::pi<mp50::Float>()) < 1e-32);
  CHECK(mp50::rel_err(constants::kEulerGamma, boost::math::constants::euler<mp50::Float>()) < 1e-31);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal_string(ExtendedScalar(1.0) / 3.0, 5) == "3.3333e-01");
  CHECK(to_decimal_string(ExtendedScalar(0.0)) == "0");
  CHECK(to_decimal_string(dd_ln(24.0), 30).rfind("3.178053830347945619646941", 0) == 0);
  CHECK(to_decimal_string(-constants::kPi, 10) == "-3.141592654e+00");
}
