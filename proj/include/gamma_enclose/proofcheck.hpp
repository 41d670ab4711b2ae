#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gamma_enclose/extprec.hpp"
#include "gamma_enclose/rational_poly.hpp"
#include "gamma_enclose/special.hpp"

namespace gamma_enclose::proofcheck {

// --- Intermediate-value parameter of the log-gamma Stirling gap -------------

/// theta(k) = 1/(2((x+k) log1p(1/(x+k-1)) - 1)) - (x+k-1); lies in (0, 1/3)
/// and increases with k toward 1/3.
ExtendedScalar theta(std::int64_t k, double x);

/// f(u) = 1/(2((u+1) log1p(1/u) - 1)) - u, so theta(k) = f(x + k - 1).
ExtendedScalar f_fn(double u);

/// h(t) = t^2 log1p(t) - t^3 + 2((t+1) log1p(t) - t)^2. Negative for t > 0;
/// h(t) = -t^6/36 + 2t^7/45 + O(t^8) near 0.
ExtendedScalar h_fn(double t);

/// g(t) = 8 log1p(t) - (6t^3 + 12t^2 + 8t)/(t+1)^2 = (1+t) h'''(t).
ExtendedScalar g_fn(double t);

/// Mean-value parameter phi(k) = x/log1p(x/k) - k, 0 < phi < x, increasing
/// in k toward x/2.
ExtendedScalar phi(double k, double x);

// --- Quartic sharpness polynomial --------------------------------------------

/// 360360 x^13 - 60060 x^12 + 6006 x^10 - 2860 x^8 + 3003 x^6 - 5460 x^4
/// + 15202 x^2 - 60060.
const RationalPoly& p1_polynomial();
/// 720720 x^14.
const RationalPoly& p2_polynomial();
/// (8x^3 + 4x^2 + x + 1/100)^2 p1^3 - p2^3 (2x + 1/3)^3.
const RationalPoly& eq18_polynomial();

Rational eq18_value(const Rational& x);
/// Exact sign of eq18_polynomial at x >= 1.
int eq18_sign(const Rational& x);

// --- Digamma tail inequality --------------------------------------------------

struct PsiTailTerm {
  int power;  // coefficient multiplies x^{-power}
  Rational coefficient;
};

/// Terms of ln x - psi(x) < 1/(2x) + 1/(12x^2) - 1/(120x^4) + ... + 1/(12x^14).
std::span<const PsiTailTerm> psi_tail_terms();

ExtendedScalar psi_tail_rhs(double x);
/// rhs(x) - (ln x - psi(x)).
ExtendedScalar psi_tail_slack(double x);
/// True iff ln x - psi(x) <= rhs(x) + ORACLE_EPS. Requires x >= 1.
bool psi_tail_check(double x);

// --- Global quartic bound -------------------------------------------------------

/// Theta(x) = log Gamma(x+1) - x log x + x - 1/2 log 2pi - 1/4 log(x^2 + x/3 + 1/18).
ExtendedScalar theta_cap(double x);
/// Theta'(x) = psi(x+1) - log x - (18x + 3)/(36x^2 + 12x + 2).
ExtendedScalar theta_cap_prime(double x);

const RationalPoly& p_polynomial();
const RationalPoly& q_polynomial();

struct SignPair {
  int p = 0;
  int q = 0;
};
SignPair pq_positivity(const Rational& x);

/// Checks exactly that Theta''(x+1) - Theta''(x) = p(x)/q(x) at x > 0, using
/// psi'(x+2) - psi'(x+1) = -1/(x+1)^2 so only rational terms remain.
bool theta_second_difference_identity(const Rational& x);

// --- Raabe integral ----------------------------------------------------------------

struct QuadratureRule {
  std::vector<ExtendedScalar> nodes;    // on [-1, 1]
  std::vector<ExtendedScalar> weights;  // sum to 2
};

/// 64-point Gauss-Legendre rule computed in two-term arithmetic.
const QuadratureRule& gauss_legendre_64();

/// |int_x^{x+1} log Gamma(u) du - (x log x - x + 1/2 log 2pi)|.
ExtendedScalar raabe_check(double x);

// --- Stirling gap as a digamma-like series ------------------------------------------

/// x log x - x + 1/2 log 2pi - log Gamma(x).
ExtendedScalar stirling_gap(double x);

/// 1/2 (-gamma + sum_{k=1}^{K} [1/k - 1/(k + x - 1 + theta(k))]) for x >= 1.
/// The omitted tail is positive and below `tail`.
PartialSum stirling_gap_series(double x, std::int64_t terms);

}  // namespace gamma_enclose::proofcheck
