#include "gamma_enclose/special.hpp"

#include <array>
#include <cmath>
#include <string>

namespace gamma_enclose {

namespace {

struct Fraction {
  double num;
  double den;
};

// B_2 ... B_26. B_26 is only used to bound the first omitted term.
constexpr std::array<Fraction, 13> kBernoulliEven = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
}};

constexpr int kMaxSeriesTerms = 12;

struct SeriesTables {
  // B_2n / (2n (2n - 1)): log-gamma tail coefficients.
  std::array<ExtendedScalar, kBernoulliEven.size()> lgamma{};
  // B_2n / (2n): digamma tail coefficients.
  std::array<ExtendedScalar, kBernoulliEven.size()> digamma{};
  std::array<ExtendedScalar, kBernoulliEven.size()> bernoulli{};
};

const SeriesTables& tables() {
  static const SeriesTables t = [] {
    SeriesTables s;
    for (std::size_t i = 0; i < kBernoulliEven.size(); ++i) {
      const double two_n = 2.0 * static_cast<double>(i + 1);
      const auto& f = kBernoulliEven[i];
      s.bernoulli[i] = ExtendedScalar(f.num) / f.den;
      s.lgamma[i] = ExtendedScalar(f.num) / (f.den * two_n * (two_n - 1.0));
      s.digamma[i] = ExtendedScalar(f.num) / (f.den * two_n);
    }
    return s;
  }();
  return t;
}

void require_positive(const ExtendedScalar& x, const char* who) {
  if (x.hi() <= 0.0) throw DomainError(std::string(who) + ": x must be positive");
}

// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

OracleConfig OracleConfig::make(double shift_target, int series_terms) {
  OracleConfig c;
  c.shift_target = shift_target;
  c.series_terms = series_terms;
  c.validate();
  return c;
}

double OracleConfig::truncation_bound() const {
  const int m = series_terms + 1;
  const double b = std::fabs(kBernoulliEven[m - 1].num / kBernoulliEven[m - 1].den);
  const double two_m = 2.0 * m;
  const double lg = b / (two_m * (two_m - 1.0) * std::pow(shift_target, two_m - 1.0));
  const double dg = b / (two_m * std::pow(shift_target, two_m));
  return std::max(lg, dg);
}

void OracleConfig::validate() const {
  if (!(shift_target >= 10.0) || !std::isfinite(shift_target)) {
    throw DomainError("OracleConfig: shift_target must be >= 10");
  }
  if (series_terms < 6 || series_terms > kMaxSeriesTerms) {
    throw DomainError("OracleConfig: series_terms must be in [6, 12]");
  }
  if (truncation_bound() > 1e-29) {
    throw DomainError("OracleConfig: Stirling truncation bound exceeds 1e-29");
  }
  if (std::fabs((euler_gamma - constants::kEulerGamma).hi()) > 1e-28) {
    throw DomainError("OracleConfig: euler_gamma disagrees with the built-in constant");
  }
}

const OracleConfig& default_oracle_config() {
  static const OracleConfig c = OracleConfig::make(24.0, 12);
  return c;
}

const ExtendedScalar& bernoulli_even(int n) {
  if (n < 1 || n > static_cast<int>(kBernoulliEven.size())) {
    throw DomainError("bernoulli_even: index out of table");
  }
  return tables().bernoulli[n - 1];
}

const ExtendedScalar& half_log_two_pi() {
  static const ExtendedScalar v = dd_ldexp(dd_ln(dd_ldexp(constants::kPi, 1)), -1);
  return v;
}

ExtendedScalar lgamma_ref(const ExtendedScalar& x, const OracleConfig& config) {
  require_positive(x, "lgamma_ref");
  config.validate();

  // log Gamma(x) = log Gamma(x + n) - log(x (x+1) ... (x+n-1)).
  ExtendedScalar y = x;
  ExtendedScalar product = 1.0;
  bool shifted = false;
  while (y < config.shift_target) {
    product *= y;
    y += 1.0;
    shifted = true;
  }

  ExtendedScalar result = (y - 0.5) * dd_ln(y) - y + half_log_two_pi();
  const ExtendedScalar inv = 1.0 / y;
  const ExtendedScalar inv2 = inv * inv;
  ExtendedScalar power = inv;
  const auto& coeff = tables().lgamma;
  for (int n = 0; n < config.series_terms; ++n) {
    const ExtendedScalar term = coeff[n] * power;
    result += term;
    if (std::fabs(term.hi()) < 1e-40 || std::fabs(power.hi()) < 1e-250) break;
    power *= inv2;
  }
  if (shifted) result -= dd_ln(product);
  return result;
}

ExtendedScalar digamma_ref(const ExtendedScalar& x, const OracleConfig& config) {
  require_positive(x, "digamma_ref");
  config.validate();

  // psi(x) = psi(x + n) - sum_{k<n} 1/(x + k).
  ExtendedScalar y = x;
  ExtendedScalar reciprocal_sum = 0.0;
  while (y < config.shift_target) {
    reciprocal_sum += 1.0 / y;
    y += 1.0;
  }

  const ExtendedScalar inv = 1.0 / y;
  ExtendedScalar result = dd_ln(y) - dd_ldexp(inv, -1);
  const ExtendedScalar inv2 = inv * inv;
  ExtendedScalar power = inv2;
  const auto& coeff = tables().digamma;
  for (int n = 0; n < config.series_terms; ++n) {
    const ExtendedScalar term = coeff[n] * power;
    result -= term;
    if (std::fabs(term.hi()) < 1e-40 || std::fabs(power.hi()) < 1e-250) break;
    power *= inv2;
  }
  return result - reciprocal_sum;
}

PartialSum lgamma_series_partial(double x, std::int64_t terms) {
  if (!(x > -1.0) || !std::isfinite(x)) {
    throw DomainError("lgamma_series_partial: x must exceed -1");
  }
  if (terms < 1) throw DomainError("lgamma_series_partial: need at least one term");

  CompensatedSum sum;
  sum.add(-constants::kEulerGamma.hi() * x);
  for (std::int64_t k = 1; k <= terms; ++k) {
    const double r = x / static_cast<double>(k);
    sum.add(r - std::log1p(r));
  }
  const double kk = static_cast<double>(terms);
  const double tail = x >= 0.0 ? x * (x + 1.0) / (2.0 * kk) : x * x / (2.0 * kk * (1.0 + x));
  return {sum.value(), tail};
}

PartialSum digamma_series_partial(double x, std::int64_t terms) {
  if (!(x > -1.0) || !std::isfinite(x)) {
    throw DomainError("digamma_series_partial: x must exceed -1");
  }
  if (terms < 1) throw DomainError("digamma_series_partial: need at least one term");

  CompensatedSum sum;
  sum.add(-constants::kEulerGamma.hi());
  for (std::int64_t k = 1; k <= terms; ++k) {
    const double kd = static_cast<double>(k);
    sum.add(x / (kd * (kd + x)));
  }
  return {sum.value(), std::fabs(x) / static_cast<double>(terms)};
}

}  // namespace gamma_enclose
