#pragma once

#include <cstdint>

#include "gamma_enclose/extprec.hpp"

namespace gamma_enclose {

/// Worst-case absolute error of the reference evaluator on the containment
/// domain. Every "with margin" comparison uses this value.
inline constexpr double ORACLE_EPS = 1e-25;

/// Parameters of the reference log-gamma / digamma evaluator.
///
/// Arguments below `shift_target` are raised by the recurrence before the
/// Stirling series with `series_terms` Bernoulli terms is applied. The
/// constructor-style factory `make()` rejects configurations whose first
/// omitted series term exceeds 1e-29 at the shifted argument.
struct OracleConfig {
  double shift_target = 24.0;
  int series_terms = 12;
  ExtendedScalar euler_gamma = constants::kEulerGamma;

  static OracleConfig make(double shift_target, int series_terms);

  /// Magnitude of the first omitted term of either asymptotic series
  /// (log-gamma or digamma) at y = shift_target.
  [[nodiscard]] double truncation_bound() const;

  /// Throws DomainError unless shift_target >= 10, 6 <= series_terms <= 12
  /// and truncation_bound() <= 1e-29.
  void validate() const;
};

const OracleConfig& default_oracle_config();

/// Bernoulli number B_{2n} for 1 <= n <= 13, as a two-term value.
const ExtendedScalar& bernoulli_even(int n);

/// 0.5 * ln(2 pi).
const ExtendedScalar& half_log_two_pi();

/// log Gamma(x) for x > 0.
ExtendedScalar lgamma_ref(const ExtendedScalar& x,
                          const OracleConfig& config = default_oracle_config());

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
ExtendedScalar digamma_ref(const ExtendedScalar& x,
                           const OracleConfig& config = default_oracle_config());

/// A truncated slowly-converging series together with a bound on the
/// magnitude of the omitted tail.
struct PartialSum {
  double value = 0.0;
  double tail = 0.0;
};

/// -gamma x + sum_{k=1}^{K} [x/k - log(1 + x/k)] ~ log Gamma(x + 1), x > -1.
/// Non-decreasing in K; the omitted tail is non-negative.
PartialSum lgamma_series_partial(double x, std::int64_t terms);

/// -gamma + sum_{k=1}^{K} [1/k - 1/(k + x)] ~ psi(x + 1), x > -1.
/// For x > 0 the omitted tail is positive and close to `tail` = x/K.
PartialSum digamma_series_partial(double x, std::int64_t terms);

}  // namespace gamma_enclose
