#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gamma_enclose/extprec.hpp"
#include "gamma_enclose/special.hpp"

namespace gamma_enclose {

enum class FamilyId {
  kAB2005,
  kBatirDelta,
  kQuarticSharp,
  kQuarticGlobal,
  kCubicRef2,
  kDigammaArg,
  kFactorial,
};

/// Static description of one bound family. All families bound
/// log Gamma(x + 1); those stated for Gamma(x) are shifted by ln x.
struct BoundFamily {
  FamilyId id;
  std::string_view name;  // kebab-case CLI name
  double domain_min;
  bool domain_min_inclusive;
  bool integer_domain;
  bool strict_lower;
  bool strict_upper;
  std::vector<double> lower_equality_points;
  std::vector<double> upper_equality_points;

  [[nodiscard]] bool contains(double x) const;
};

std::span<const BoundFamily> all_families();
const BoundFamily& family(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// Log-space enclosure [lo, hi] of log Gamma(x + 1).
struct Enclosure {
  ExtendedScalar lo;
  ExtendedScalar hi;
  double x = 0.0;
  FamilyId family = FamilyId::kAB2005;

  [[nodiscard]] ExtendedScalar width() const { return hi - lo; }
};

/// Constants of the quartic, global and factorial families.
///
/// `alpha_lo` and `beta_lo` are the sharp lower constants 18^{1/4} and
/// e (18/25)^{1/4}; they are attained at x = 0 and n = 1. The closed forms
/// (18^{1/4}/sqrt(2 pi) = 0.821728..., (e/sqrt(2 pi)) (18/25)^{1/4} =
/// 0.998936...) that circulate for the same inequalities are kept as
/// `published_alpha_lo` / `published_beta_lo`: they give valid but weaker
/// lower bounds.
struct Constants {
  ExtendedScalar a_star_lo;  // e^4/(4 pi^2) - 4/3
  ExtendedScalar a_star_hi;  // 1/18
  ExtendedScalar alpha_lo;
  ExtendedScalar alpha_hi;  // sqrt(2 pi)
  ExtendedScalar beta_lo;
  ExtendedScalar beta_hi;  // sqrt(2 pi)
  ExtendedScalar published_alpha_lo;
  ExtendedScalar published_beta_lo;

  // Natural logs of the multiplicative constants, computed from closed
  // forms rather than by taking ln of the values above.
  ExtendedScalar log_alpha_lo;
  ExtendedScalar log_alpha_hi;
  ExtendedScalar log_beta_lo;
  ExtendedScalar log_beta_hi;
};

const Constants& constants_table();

/// delta*(x) = 1 / (2 ((x+1) log(1 + 1/x) - 1)), the improved argument of
/// the upper digamma bound. Satisfies x < delta*(x) < x + 1/3.
ExtendedScalar delta_star(double x);

/// Switch-over point to the asymptotic form of delta_star.
inline constexpr double kDeltaStarAsymptoticFrom = 1e12;

ExtendedScalar delta_star_asymptotic(double x);

Enclosure enclose_lgamma(FamilyId id, double x);
Enclosure enclose_factorial(std::int64_t n);

/// ln n! from the exact big-integer factorial (n <= kExactFactorialMax).
ExtendedScalar ln_factorial_exact(std::int64_t n);
inline constexpr std::int64_t kExactFactorialMax = 20000;

struct TightnessRecord {
  double x = 0.0;
  FamilyId family = FamilyId::kAB2005;
  ExtendedScalar log_lower;
  ExtendedScalar log_upper;
  ExtendedScalar log_ref;
  ExtendedScalar gap_lower;  // log_ref - log_lower
  ExtendedScalar gap_upper;  // log_upper - log_ref
  ExtendedScalar width;

  [[nodiscard]] bool contained(double margin = ORACLE_EPS) const {
    return gap_lower.hi() >= -margin && gap_upper.hi() >= -margin;
  }
};

/// Enclosure plus reference value. The factorial family is referenced
/// against the exact big-integer ln n!, all others against lgamma_ref.
TightnessRecord tightness(FamilyId id, double x);

}  // namespace gamma_enclose
