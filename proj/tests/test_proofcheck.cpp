#include <doctest.h>

#include <cmath>

#include "gamma_enclose/errors.hpp"
#include "gamma_enclose/bounds.hpp"
#include "gamma_enclose/proofcheck.hpp"

using namespace gamma_enclose;
using namespace gamma_enclose::proofcheck;

TEST_CASE("rational polynomials") {
  const RationalPoly x{0, 1};
  const RationalPoly p = (x + RationalPoly::constant(1)).pow(3);
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(2) == 3);
  CHECK(p.coefficient(7) == 0);
  CHECK(p(Rational(1, 2)) == Rational(27, 8));
  CHECK(p.compose(x - RationalPoly::constant(1)) == x.pow(3));
  CHECK((p - p).degree() <= 0);
  CHECK(sign_of(Rational(-3, 7)) == -1);
}

TEST_CASE("theta and f") {
  const ExtendedScalar third = ExtendedScalar(1.0) / 3.0;
  ExtendedScalar prev = 0.0;
  for (std::int64_t k = 1; k <= 2000; k += 7) {
    const ExtendedScalar t = theta(k, 0.5);
    CHECK(t > prev);
    CHECK(t < third);
    prev = t;
  }
  CHECK(std::fabs((theta(1, 2.0) + 2.0 - delta_star(2.0)).hi()) < 1e-28);
  CHECK(std::fabs((f_fn(1e8) - third).hi()) < 1e-6);
  CHECK_THROWS_AS(theta(0, 1.0), DomainError);
}

TEST_CASE("h and g") {
  CHECK(h_fn(1.0) < 0.0);
  CHECK(h_fn(50.0) < 0.0);
  CHECK(g_fn(0.5) > g_fn(1.0));
  const double t = 1e-3;
  CHECK(h_fn(t).hi() == doctest::Approx(-std::pow(t, 6) / 36.0 + 2.0 * std::pow(t, 7) / 45.0)
                            .epsilon(1e-5));
}

TEST_CASE("phi mean value parameter") {
  CHECK(phi(1.0, 2.0) > 0.0);
  CHECK(phi(1.0, 2.0) < phi(10.0, 2.0));
  CHECK(std::fabs((phi(1e8, 2.0) - 1.0).hi()) < 1e-6);
}

TEST_CASE("eq18 polynomial") {
  const RationalPoly& e = eq18_polynomial();
  CHECK(e.degree() == 42);
  CHECK(eq18_value(1) == Rational(BigInt("-19117962330309366477309"), 10000));
  CHECK(eq18_sign(Rational(3, 2)) > 0);
  CHECK(eq18_sign(Rational(147, 100)) < 0);
  CHECK(eq18_sign(50) > 0);
  CHECK_THROWS_AS(eq18_sign(Rational(1, 2)), DomainError);
}

TEST_CASE("psi tail and p1") {
  CHECK(psi_tail_check(1.0));
  CHECK(psi_tail_check(7.5));
  CHECK(psi_tail_slack(1.0) > 0.0);
  CHECK(p1_polynomial()(1) == 360360 - 60060 + 6006 - 2860 + 3003 - 5460 + 15202 - 60060);
  CHECK_THROWS_AS(psi_tail_check(0.5), DomainError);
}

TEST_CASE("global quartic pieces") {
  CHECK(p_polynomial()(1) == 163225);
  CHECK(q_polynomial()(1) == 18062500);
  for (int i = 1; i <= 40; ++i) {
    const Rational x(i, 3);
    const SignPair s = pq_positivity(x);
    CHECK(s.p > 0);
    CHECK(s.q > 0);
    CHECK(theta_second_difference_identity(x));
  }
  CHECK(theta_cap(0.5) < theta_cap(2.0));
  CHECK(theta_cap_prime(0.5) > theta_cap_prime(2.0));
}

TEST_CASE("quadrature and Raabe") {
  const QuadratureRule& r = gauss_legendre_64();
  ExtendedScalar wsum = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    wsum += r.weights[i];
    m2 += r.weights[i] * r.nodes[i] * r.nodes[i];
  }
  CHECK(std::fabs((wsum - 2.0).hi()) < 1e-30);
  CHECK(std::fabs((m2 - ExtendedScalar(2.0) / 3.0).hi()) < 1e-30);
  CHECK(raabe_check(3.0).hi() < 1e-20);
}

TEST_CASE("stirling gap series") {
  const PartialSum p = stirling_gap_series(2.0, 10'000);
  const double diff = stirling_gap(2.0).hi() - p.value;
  CHECK(diff >= 0.0);
  CHECK(diff <= p.tail);
}
