#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gamma_enclose {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with exact rational coefficients in ascending degree.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  RationalPoly(std::initializer_list<Rational> coefficients);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int degree);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(int k) const;

  /// Horner evaluation; exact.
  [[nodiscard]] Rational operator()(const Rational& x) const;

  /// p(q(x)).
  [[nodiscard]] RationalPoly compose(const RationalPoly& inner) const;
  [[nodiscard]] RationalPoly pow(unsigned exponent) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// -1, 0 or +1.
int sign_of(const Rational& r);

}  // namespace gamma_enclose
