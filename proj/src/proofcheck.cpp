#include "gamma_enclose/proofcheck.hpp"

#include <array>
#include <cmath>
#include <string>

namespace gamma_enclose::proofcheck {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

// 1/(2((w+1) log1p(1/w) - 1)) - w
ExtendedScalar f_of(const ExtendedScalar& w) {
  const ExtendedScalar denom = (w + 1.0) * dd_log1p(1.0 / w) - 1.0;
  return ExtendedScalar(0.5) / denom - w;
}

ExtendedScalar to_extended(const Rational& r) {
  const auto num = static_cast<double>(numerator(r));
  const auto den = static_cast<double>(denominator(r));
  return ExtendedScalar(num) / den;
}

// (162x^2 + 54x)/(18x^2 + 6x + 1)^2
Rational theta_second_rational_part(const Rational& x) {
  const Rational d = 18 * x * x + 6 * x + 1;
  return (162 * x * x + 54 * x) / (d * d);
}

}  // namespace

ExtendedScalar theta(std::int64_t k, double x) {
  require(k >= 1, "theta: k must be >= 1");
  require(x > 0.0 && std::isfinite(x), "theta: x must be positive");
  const ExtendedScalar w = ExtendedScalar(x) + static_cast<double>(k - 1);
  return f_of(w);
}

ExtendedScalar f_fn(double u) {
  require(u > 0.0 && std::isfinite(u), "f_fn: u must be positive");
  return f_of(u);
}

ExtendedScalar h_fn(double t) {
  require(t > 0.0 && std::isfinite(t), "h_fn: t must be positive");
  const ExtendedScalar te = t;
  const ExtendedScalar l = dd_log1p(te);
  const ExtendedScalar inner = (te + 1.0) * l - te;
  return te * te * l - te * te * te + dd_ldexp(inner * inner, 1);
}

ExtendedScalar g_fn(double t) {
  require(t > 0.0 && std::isfinite(t), "g_fn: t must be positive");
  const ExtendedScalar te = t;
  const ExtendedScalar num = ((te * 6.0 + 12.0) * te + 8.0) * te;
  const ExtendedScalar den = (te + 1.0) * (te + 1.0);
  return dd_log1p(te) * 8.0 - num / den;
}

ExtendedScalar phi(double k, double x) {
  require(k >= 1.0 && std::isfinite(k), "phi: k must be >= 1");
  require(x > 0.0 && std::isfinite(x), "phi: x must be positive");
  const ExtendedScalar xe = x;
  return xe / dd_log1p(xe / k) - k;
}

const RationalPoly& p1_polynomial() {
  static const RationalPoly p = [] {
    std::vector<Rational> c(14);
    c[0] = -60060;
    c[2] = 15202;
    c[4] = -5460;
    c[6] = 3003;
    c[8] = -2860;
    c[10] = 6006;
    c[12] = -60060;
    c[13] = 360360;
    return RationalPoly(std::move(c));
  }();
  return p;
}

const RationalPoly& p2_polynomial() {
  static const RationalPoly p = RationalPoly::monomial(720720, 14);
  return p;
}

const RationalPoly& eq18_polynomial() {
  static const RationalPoly e = [] {
    const RationalPoly cubic{Rational(1, 100), 1, 4, 8};
    const RationalPoly linear{Rational(1, 3), 2};
    return cubic.pow(2) * p1_polynomial().pow(3) - p2_polynomial().pow(3) * linear.pow(3);
  }();
  return e;
}

Rational eq18_value(const Rational& x) {
  require(x >= 1, "eq18_sign: x must be >= 1");
  return eq18_polynomial()(x);
}

int eq18_sign(const Rational& x) { return sign_of(eq18_value(x)); }

std::span<const PsiTailTerm> psi_tail_terms() {
  static const std::array<PsiTailTerm, 8> terms = {{
      {1, Rational(1, 2)},
      {2, Rational(1, 12)},
      {4, Rational(-1, 120)},
      {6, Rational(1, 252)},
      {8, Rational(-1, 240)},
      {10, Rational(1, 132)},
      {12, Rational(-691, 32760)},
      {14, Rational(1, 12)},
  }};
  return terms;
}

ExtendedScalar psi_tail_rhs(double x) {
  require(x >= 1.0 && std::isfinite(x), "psi_tail_check: x must be >= 1");
  const ExtendedScalar inv = ExtendedScalar(1.0) / x;
  ExtendedScalar sum = 0.0;
  for (const auto& term : psi_tail_terms()) {
    ExtendedScalar power = 1.0;
    for (int i = 0; i < term.power; ++i) power *= inv;
    sum += to_extended(term.coefficient) * power;
  }
  return sum;
}

ExtendedScalar psi_tail_slack(double x) {
  const ExtendedScalar rhs = psi_tail_rhs(x);
  const ExtendedScalar lhs = dd_ln(x) - digamma_ref(x);
  return rhs - lhs;
}

bool psi_tail_check(double x) { return psi_tail_slack(x).hi() >= -ORACLE_EPS; }

ExtendedScalar theta_cap(double x) {
  require(x > 0.0 && std::isfinite(x), "theta_cap: x must be positive");
  const ExtendedScalar xe = x;
  const ExtendedScalar quad = xe * xe + xe / 3.0 + ExtendedScalar(1.0) / 18.0;
  return lgamma_ref(xe + 1.0) - xe * dd_ln(xe) + xe - half_log_two_pi() -
         dd_ldexp(dd_ln(quad), -2);
}

ExtendedScalar theta_cap_prime(double x) {
  require(x > 0.0 && std::isfinite(x), "theta_cap_prime: x must be positive");
  const ExtendedScalar xe = x;
  const ExtendedScalar rational = (xe * 18.0 + 3.0) / ((xe * 36.0 + 12.0) * xe + 2.0);
  return digamma_ref(xe + 1.0) - dd_ln(xe) - rational;
}

const RationalPoly& p_polynomial() {
  static const RationalPoly p{625, 9816, 42516, 63936, 38556, 7776};
  return p;
}

const RationalPoly& q_polynomial() {
  static const RationalPoly q = [] {
    const RationalPoly x{0, 1};
    const RationalPoly one_plus_x{1, 1};
    const RationalPoly a{1, 6, 18};
    const RationalPoly b{25, 42, 18};
    return x * one_plus_x.pow(2) * a.pow(2) * b.pow(2);
  }();
  return q;
}

SignPair pq_positivity(const Rational& x) {
  return {sign_of(p_polynomial()(x)), sign_of(q_polynomial()(x))};
}

bool theta_second_difference_identity(const Rational& x) {
  require(x > 0, "theta_second_difference_identity: x must be positive");
  const Rational x1 = x + 1;
  const Rational lhs = Rational(-1) / (x1 * x1) + Rational(1) / (x * x1) +
                       theta_second_rational_part(x1) - theta_second_rational_part(x);
  return lhs * q_polynomial()(x) == p_polynomial()(x);
}

const QuadratureRule& gauss_legendre_64() {
  static const QuadratureRule rule = [] {
    constexpr int n = 64;
    // P_n(t) and P_{n-1}(t) by the three-term recurrence.
    auto legendre = [](const ExtendedScalar& t, ExtendedScalar& pn, ExtendedScalar& pn1) {
      ExtendedScalar p0 = 1.0;
      ExtendedScalar p1 = t;
      for (int k = 1; k < n; ++k) {
        const ExtendedScalar p2 =
            (t * p1 * static_cast<double>(2 * k + 1) - p0 * static_cast<double>(k)) /
            static_cast<double>(k + 1);
        p0 = p1;
        p1 = p2;
      }
      pn = p1;
      pn1 = p0;
    };

    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double pi = constants::kPi.hi();
    for (int i = 0; i < n / 2; ++i) {
      ExtendedScalar t = std::cos(pi * (i + 0.75) / (n + 0.5));
      ExtendedScalar pn, pn1, dp;
      for (int iter = 0; iter < 100; ++iter) {
        legendre(t, pn, pn1);
        dp = (t * pn - pn1) * static_cast<double>(n) / (t * t - 1.0);
        const ExtendedScalar step = pn / dp;
        t -= step;
        if (std::fabs(step.hi()) < 1e-34) break;
      }
      legendre(t, pn, pn1);
      dp = (t * pn - pn1) * static_cast<double>(n) / (t * t - 1.0);
      const ExtendedScalar w = ExtendedScalar(2.0) / ((ExtendedScalar(1.0) - t * t) * dp * dp);
      r.nodes[i] = t;
      r.weights[i] = w;
      r.nodes[n - 1 - i] = -t;
      r.weights[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

ExtendedScalar raabe_check(double x) {
  require(x > 0.0 && std::isfinite(x), "raabe_check: x must be positive");
  const QuadratureRule& rule = gauss_legendre_64();
  const ExtendedScalar mid = ExtendedScalar(x) + 0.5;
  ExtendedScalar integral = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const ExtendedScalar u = mid + dd_ldexp(rule.nodes[i], -1);
    integral += rule.weights[i] * lgamma_ref(u);
  }
  integral = dd_ldexp(integral, -1);
  const ExtendedScalar xe = x;
  const ExtendedScalar closed = xe * dd_ln(xe) - xe + half_log_two_pi();
  return abs(integral - closed);
}

ExtendedScalar stirling_gap(double x) {
  require(x > 0.0 && std::isfinite(x), "stirling_gap: x must be positive");
  const ExtendedScalar xe = x;
  return xe * dd_ln(xe) - xe + half_log_two_pi() - lgamma_ref(xe);
}

PartialSum stirling_gap_series(double x, std::int64_t terms) {
  require(x >= 1.0 && std::isfinite(x), "stirling_gap_series: x must be >= 1");
  require(terms >= 1, "stirling_gap_series: need at least one term");
  // Compensated sum of (x - 1 + theta(k)) / (k (k + x - 1 + theta(k))).
  double sum = -constants::kEulerGamma.hi();
  double comp = -constants::kEulerGamma.lo();
  for (std::int64_t k = 1; k <= terms; ++k) {
    const ExtendedScalar shift = ExtendedScalar(x - 1.0) + theta(k, x);
    const double kd = static_cast<double>(k);
    const double term = (shift / (kd * (shift + kd))).hi();
    const double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return {0.5 * (sum + comp), 0.5 * (x - 2.0 / 3.0) / static_cast<double>(terms)};
}

}  // namespace gamma_enclose::proofcheck
