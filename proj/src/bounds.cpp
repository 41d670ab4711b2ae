#include "gamma_enclose/bounds.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gamma_enclose {

namespace {

const std::array<BoundFamily, 7>& family_table() {
  static const std::array<BoundFamily, 7> table = {{
      {FamilyId::kAB2005, "ab2005", 0.0, false, false, true, true, {}, {}},
      {FamilyId::kBatirDelta, "batir-delta", 0.0, false, false, true, true, {}, {}},
      {FamilyId::kQuarticSharp, "quartic-sharp", 1.0, true, false, false, true, {1.0}, {}},
      {FamilyId::kQuarticGlobal, "quartic-global", 0.0, true, false, false, true, {0.0}, {}},
      {FamilyId::kCubicRef2, "cubic-ref2", 0.0, true, false, true, true, {}, {}},
      {FamilyId::kDigammaArg, "digamma-arg", 0.0, true, false, false, false, {0.0}, {0.0}},
      {FamilyId::kFactorial, "factorial", 1.0, true, true, false, true, {1.0}, {}},
  }};
  return table;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void check_domain(const BoundFamily& f, double x) {
  const std::string who(f.name);
  if (!std::isfinite(x)) throw DomainError(who + ": x must be finite");
  if (f.domain_min_inclusive ? x < f.domain_min : x <= f.domain_min) {
    throw DomainError(who + ": x below domain_min " + format_number(f.domain_min));
  }
  if (f.integer_domain && x != std::floor(x)) {
    throw DomainError(who + ": x must be an integer");
  }
}

// x ln x - x, with the limit 0 at x = 0.
ExtendedScalar stirling_core(const ExtendedScalar& x) {
  if (x.is_zero()) return 0.0;
  return x * dd_ln(x) - x;
}

// 1/4 ln(x^2 + x/3 + c)
ExtendedScalar quartic_log(const ExtendedScalar& x, const ExtendedScalar& c) {
  return dd_ldexp(dd_ln(x * x + x / 3.0 + c), -2);
}

// 1/6 ln(8x^3 + 4x^2 + x + c)
ExtendedScalar cubic_log(const ExtendedScalar& x, const ExtendedScalar& c) {
  const ExtendedScalar poly = ((x * 8.0 + 4.0) * x + 1.0) * x + c;
  return dd_ln(poly) / 6.0;
}

const ExtendedScalar& half_log_pi() {
  static const ExtendedScalar v = dd_ldexp(dd_ln(constants::kPi), -1);
  return v;
}

const ExtendedScalar& one_third() {
  static const ExtendedScalar v = ExtendedScalar(1.0) / 3.0;
  return v;
}

}  // namespace

bool BoundFamily::contains(double x) const {
  if (!std::isfinite(x)) return false;
  if (domain_min_inclusive ? x < domain_min : x <= domain_min) return false;
  return !integer_domain || x == std::floor(x);
}

std::span<const BoundFamily> all_families() { return family_table(); }

const BoundFamily& family(FamilyId id) {
  return family_table()[static_cast<std::size_t>(id)];
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& f : family_table()) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

const Constants& constants_table() {
  static const Constants c = [] {
    Constants k;
    const ExtendedScalar ln18 = dd_ln(18.0);
    const ExtendedScalar ln25 = dd_ln(25.0);
    const ExtendedScalar pi_sq = constants::kPi * constants::kPi;

    k.a_star_lo = dd_exp(4.0) / (pi_sq * 4.0) - ExtendedScalar(4.0) / 3.0;
    k.a_star_hi = ExtendedScalar(1.0) / 18.0;

    k.log_alpha_lo = dd_ldexp(ln18, -2);
    k.log_alpha_hi = half_log_two_pi();
    k.log_beta_lo = ExtendedScalar(1.0) + dd_ldexp(ln18 - ln25, -2);
    k.log_beta_hi = half_log_two_pi();

    k.alpha_lo = dd_exp(k.log_alpha_lo);
    k.alpha_hi = dd_exp(k.log_alpha_hi);
    k.beta_lo = dd_exp(k.log_beta_lo);
    k.beta_hi = k.alpha_hi;
    k.published_alpha_lo = dd_exp(k.log_alpha_lo - half_log_two_pi());
    k.published_beta_lo = dd_exp(k.log_beta_lo - half_log_two_pi());
    return k;
  }();
  return c;
}

ExtendedScalar delta_star_asymptotic(double x) {
  const ExtendedScalar xe = x;
  const ExtendedScalar inv = 1.0 / xe;
  return xe + one_third() - inv / 18.0 + inv * inv * 7.0 / 270.0;
}

ExtendedScalar delta_star(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("delta_star: x must be positive");
  if (x > kDeltaStarAsymptoticFrom) return delta_star_asymptotic(x);
  const ExtendedScalar xe = x;
  const ExtendedScalar denom = (xe + 1.0) * dd_log1p(1.0 / xe) - 1.0;
  return ExtendedScalar(0.5) / denom;
}

Enclosure enclose_lgamma(FamilyId id, double x) {
  const BoundFamily& f = family(id);
  check_domain(f, x);
  if (id == FamilyId::kFactorial) return enclose_factorial(static_cast<std::int64_t>(x));

  const Constants& k = constants_table();
  const ExtendedScalar xe = x;
  Enclosure e;
  e.x = x;
  e.family = id;

  switch (id) {
    case FamilyId::kAB2005:
    case FamilyId::kBatirDelta: {
      // Bounds on log Gamma(x), moved to log Gamma(x + 1) by adding ln x.
      const ExtendedScalar base = stirling_core(xe) + half_log_two_pi() + dd_ln(xe);
      e.lo = base - dd_ldexp(digamma_ref(xe + one_third()), -1);
      const ExtendedScalar upper_arg = id == FamilyId::kAB2005 ? xe : delta_star(x);
      e.hi = base - dd_ldexp(digamma_ref(upper_arg), -1);
      break;
    }
    case FamilyId::kQuarticSharp: {
      const ExtendedScalar base = stirling_core(xe) + half_log_two_pi();
      e.lo = base + quartic_log(xe, k.a_star_lo);
      e.hi = base + quartic_log(xe, k.a_star_hi);
      break;
    }
    case FamilyId::kQuarticGlobal: {
      const ExtendedScalar base = stirling_core(xe) + quartic_log(xe, k.a_star_hi);
      e.lo = base + k.log_alpha_lo;
      e.hi = base + k.log_alpha_hi;
      break;
    }
    case FamilyId::kCubicRef2: {
      const ExtendedScalar base = stirling_core(xe) + half_log_pi();
      e.lo = base + cubic_log(xe, ExtendedScalar(1.0) / 100.0);
      e.hi = base + cubic_log(xe, ExtendedScalar(1.0) / 30.0);
      break;
    }
    case FamilyId::kDigammaArg: {
      if (xe.is_zero()) {
        // x psi(...) -> 0 on both sides; x / log1p(x) -> 1.
        e.lo = 0.0;
        e.hi = 0.0;
        break;
      }
      e.lo = xe * digamma_ref(xe / dd_log1p(xe));
      e.hi = xe * digamma_ref(dd_ldexp(xe, -1) + 1.0);
      break;
    }
    case FamilyId::kFactorial:
      break;
  }
  return e;
}

Enclosure enclose_factorial(std::int64_t n) {
  if (n < 1) throw DomainError("factorial: n below domain_min 1");
  const Constants& k = constants_table();
  const ExtendedScalar ne = ExtendedScalar::from_integer(n);
  const ExtendedScalar base = stirling_core(ne) + quartic_log(ne, k.a_star_hi);
  Enclosure e;
  e.x = static_cast<double>(n);
  e.family = FamilyId::kFactorial;
  e.lo = base + k.log_beta_lo;
  e.hi = base + k.log_beta_hi;
  return e;
}

ExtendedScalar ln_factorial_exact(std::int64_t n) {
  using boost::multiprecision::cpp_int;
  if (n < 0) throw DomainError("ln_factorial_exact: n must be non-negative");
  if (n > kExactFactorialMax) throw DomainError("ln_factorial_exact: n too large");
  if (n <= 1) return 0.0;

  cpp_int f = 1;
  for (std::int64_t k = 2; k <= n; ++k) f *= k;

  // Keep the leading 106 bits as an exact two-term value; the discarded
  // bits perturb the logarithm by less than 2^-105.
  const auto bits = static_cast<long>(boost::multiprecision::msb(f)) + 1;
  const long shift = bits > 106 ? bits - 106 : 0;
  const cpp_int top = f >> shift;
  const cpp_int low_mask = (cpp_int(1) << 53) - 1;
  const auto upper = static_cast<std::uint64_t>(top >> 53);
  const auto lower = static_cast<std::uint64_t>(top & low_mask);
  const ExtendedScalar mantissa = ExtendedScalar::from_parts(
      std::ldexp(static_cast<double>(upper), 53), static_cast<double>(lower));
  return dd_ln(mantissa) + constants::kLn2 * static_cast<double>(shift);
}

TightnessRecord tightness(FamilyId id, double x) {
  const Enclosure e = enclose_lgamma(id, x);
  TightnessRecord r;
  r.x = e.x;
  r.family = id;
  r.log_lower = e.lo;
  r.log_upper = e.hi;
  if (id == FamilyId::kFactorial && e.x <= static_cast<double>(kExactFactorialMax)) {
    r.log_ref = ln_factorial_exact(static_cast<std::int64_t>(e.x));
  } else {
    r.log_ref = lgamma_ref(ExtendedScalar(e.x) + 1.0);
  }
  r.gap_lower = r.log_ref - r.log_lower;
  r.gap_upper = r.log_upper - r.log_ref;
  r.width = r.log_upper - r.log_lower;
  return r;
}

}  // namespace gamma_enclose
