#pragma once

#include <cfloat>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "gamma_enclose/errors.hpp"

namespace gamma_enclose {

/// Two-term extended-precision real: the unevaluated sum hi + lo of two
/// binary64 values, kept normalized so that |lo| <= ulp(hi)/2.
///
/// This carries about 106 significant bits (~32 decimal digits), which is
/// what the reference evaluator needs to certify enclosures with a 1e-25
/// margin. NaN and infinities are rejected at construction; every arithmetic
/// operation throws RangeError instead of producing a non-finite or
/// subnormal leading component.
class ExtendedScalar {
 public:
  constexpr ExtendedScalar() noexcept = default;

  // Exact conversion from binary64. Implicit so that mixed expressions such
  // as `x + 1.0` read naturally.
  ExtendedScalar(double value) : hi_(value), lo_(0.0) {  // NOLINT
    if (!std::isfinite(value)) {
      throw DomainError("ExtendedScalar: non-finite value");
    }
  }

  /// Builds hi + lo from two arbitrary finite doubles, renormalizing.
  static ExtendedScalar from_parts(double hi, double lo);

  /// Exact for |n| < 2^106.
  static ExtendedScalar from_integer(std::int64_t n);

  [[nodiscard]] constexpr double hi() const noexcept { return hi_; }
  [[nodiscard]] constexpr double lo() const noexcept { return lo_; }
  [[nodiscard]] constexpr double to_double() const noexcept { return hi_; }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return hi_ == 0.0; }
  [[nodiscard]] constexpr int sign() const noexcept {
    return hi_ > 0.0 ? 1 : (hi_ < 0.0 ? -1 : 0);
  }

  // Normalization makes lexicographic (hi, lo) order the numeric order.
  friend constexpr bool operator==(const ExtendedScalar&,
                                   const ExtendedScalar&) = default;
  friend constexpr std::partial_ordering operator<=>(
      const ExtendedScalar&, const ExtendedScalar&) = default;

  friend ExtendedScalar operator-(const ExtendedScalar& a) noexcept {
    ExtendedScalar r;
    r.hi_ = -a.hi_;
    r.lo_ = -a.lo_;
    return r;
  }

 private:
  struct Unchecked {};
  constexpr ExtendedScalar(double hi, double lo, Unchecked) noexcept
      : hi_(hi), lo_(lo) {}

  friend ExtendedScalar detail_finish(double s, double e);
  friend ExtendedScalar dd_ldexp(const ExtendedScalar& a, int exp);

  double hi_ = 0.0;
  double lo_ = 0.0;
};

namespace eft {

// Error-free transformations. Each returns the rounded result and writes
// the exact rounding error to `err`.

inline double two_sum(double a, double b, double& err) noexcept {
  const double s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

// Requires |a| >= |b| (or a == 0).
inline double quick_two_sum(double a, double b, double& err) noexcept {
  const double s = a + b;
  err = b - (s - a);
  return s;
}

#if defined(__FMA__) || defined(FP_FAST_FMA)
inline double two_prod(double a, double b, double& err) noexcept {
  const double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}
#else
inline void split(double a, double& hi, double& lo) noexcept {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  constexpr double kThreshold = 6.69692879491417e+299;
  if (a > kThreshold || a < -kThreshold) {
    a *= 3.7252902984619140625e-09;  // 2^-28
    const double t = kSplitter * a;
    hi = t - (t - a);
    lo = a - hi;
    hi *= 268435456.0;  // 2^28
    lo *= 268435456.0;
  } else {
    const double t = kSplitter * a;
    hi = t - (t - a);
    lo = a - hi;
  }
}

inline double two_prod(double a, double b, double& err) noexcept {
  const double p = a * b;
  double ah, al, bh, bl;
  split(a, ah, al);
  split(b, bh, bl);
  err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
  return p;
}
#endif

}  // namespace eft

// Normalizes (s, e) with |e| small relative to s, flushes a subnormal
// trailing term, and enforces the finite/non-subnormal range contract.
inline ExtendedScalar detail_finish(double s, double e) {
  double lo;
  const double hi = eft::quick_two_sum(s, e, lo);
  if (!std::isfinite(hi)) {
    throw RangeError("extended-precision overflow");
  }
  if (hi != 0.0 && std::fabs(hi) < DBL_MIN) {
    throw RangeError("extended-precision underflow");
  }
  if (std::fabs(lo) < DBL_MIN) lo = 0.0;
  return ExtendedScalar(hi, lo, ExtendedScalar::Unchecked{});
}

inline ExtendedScalar ExtendedScalar::from_parts(double hi, double lo) {
  if (!std::isfinite(hi) || !std::isfinite(lo)) {
    throw DomainError("ExtendedScalar: non-finite component");
  }
  double e;
  const double s = eft::two_sum(hi, lo, e);
  return detail_finish(s, e);
}

/// Accurate two-term addition (relative error ~2^-104 even under
/// cancellation).
inline ExtendedScalar dd_add(const ExtendedScalar& a, const ExtendedScalar& b) {
  double e1, e2;
  double s = eft::two_sum(a.hi(), b.hi(), e1);
  const double t = eft::two_sum(a.lo(), b.lo(), e2);
  e1 += t;
  s = eft::quick_two_sum(s, e1, e1);
  e1 += e2;
  return detail_finish(s, e1);
}

inline ExtendedScalar dd_sub(const ExtendedScalar& a, const ExtendedScalar& b) {
  return dd_add(a, -b);
}

inline ExtendedScalar dd_mul(const ExtendedScalar& a, const ExtendedScalar& b) {
  double e;
  const double p = eft::two_prod(a.hi(), b.hi(), e);
  if (!std::isfinite(p)) throw RangeError("extended-precision overflow");
  if (p == 0.0 && a.hi() != 0.0 && b.hi() != 0.0) {
    throw RangeError("extended-precision underflow");
  }
  e += a.hi() * b.lo() + a.lo() * b.hi();
  return detail_finish(p, e);
}

/// Quotient from the binary64 seed a.hi/b.hi refined by two correction
/// steps against the exact residual.
ExtendedScalar dd_div(const ExtendedScalar& a, const ExtendedScalar& b);

ExtendedScalar dd_ln(const ExtendedScalar& a);
ExtendedScalar dd_exp(const ExtendedScalar& a);
ExtendedScalar dd_log1p(const ExtendedScalar& a);

/// Exact scaling by 2^exp (subject to the range contract).
ExtendedScalar dd_ldexp(const ExtendedScalar& a, int exp);

inline ExtendedScalar abs(const ExtendedScalar& a) noexcept {
  return a.hi() < 0.0 ? -a : a;
}

inline ExtendedScalar operator+(const ExtendedScalar& a, const ExtendedScalar& b) {
  return dd_add(a, b);
}
inline ExtendedScalar operator-(const ExtendedScalar& a, const ExtendedScalar& b) {
  return dd_sub(a, b);
}
inline ExtendedScalar operator*(const ExtendedScalar& a, const ExtendedScalar& b) {
  return dd_mul(a, b);
}
inline ExtendedScalar operator/(const ExtendedScalar& a, const ExtendedScalar& b) {
  return dd_div(a, b);
}
inline ExtendedScalar& operator+=(ExtendedScalar& a, const ExtendedScalar& b) {
  return a = dd_add(a, b);
}
inline ExtendedScalar& operator-=(ExtendedScalar& a, const ExtendedScalar& b) {
  return a = dd_sub(a, b);
}
inline ExtendedScalar& operator*=(ExtendedScalar& a, const ExtendedScalar& b) {
  return a = dd_mul(a, b);
}
inline ExtendedScalar& operator/=(ExtendedScalar& a, const ExtendedScalar& b) {
  return a = dd_div(a, b);
}

/// Decimal rendering with `digits` significant digits (at most 32).
std::string to_decimal_string(const ExtendedScalar& x, int digits = 32);

namespace constants {
// Correctly rounded two-term values.
inline const ExtendedScalar kLn2 =
    ExtendedScalar::from_parts(0.6931471805599453, 2.3190468138462996e-17);
inline const ExtendedScalar kPi =
    ExtendedScalar::from_parts(3.141592653589793, 1.2246467991473532e-16);
inline const ExtendedScalar kE =
    ExtendedScalar::from_parts(2.718281828459045, 1.4456468917292502e-16);
inline const ExtendedScalar kEulerGamma =
    ExtendedScalar::from_parts(0.5772156649015329, -4.942915152430645e-18);
}  // namespace constants

}  // namespace gamma_enclose
