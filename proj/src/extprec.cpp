#include "gamma_enclose/extprec.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace gamma_enclose {

namespace {

// Below this magnitude the log1p kernel is used; dd_ln(1 + a) would lose
// relative accuracy to the rounding of 1 + a.
constexpr double kLog1pKernelLimit = 0.25;

// ln(DBL_MAX) and ln(DBL_MIN).
constexpr double kExpMaxArg = 709.782712893384;
constexpr double kExpMinArg = -708.3964185322641;

// log(1 + u) = 2 atanh(u / (2 + u)), |u| < kLog1pKernelLimit.
ExtendedScalar log1p_kernel(const ExtendedScalar& u) {
  const ExtendedScalar s = u / (u + 2.0);
  if (std::fabs(s.hi()) < 1e-140) return dd_ldexp(s, 1);
  const ExtendedScalar s2 = s * s;
  ExtendedScalar power = s;
  ExtendedScalar sum = s;
  for (int n = 3; n < 200; n += 2) {
    power *= s2;
    const ExtendedScalar term = power / static_cast<double>(n);
    sum += term;
    if (std::fabs(term.hi()) <= 1e-34 * std::fabs(sum.hi())) break;
  }
  return dd_ldexp(sum, 1);
}

}  // namespace

ExtendedScalar ExtendedScalar::from_integer(std::int64_t n) {
  const double hi = static_cast<double>(n);
  const auto rest = static_cast<__int128>(n) - static_cast<__int128>(hi);
  return from_parts(hi, static_cast<double>(rest));
}

ExtendedScalar dd_ldexp(const ExtendedScalar& a, int exp) {
  return detail_finish(std::ldexp(a.hi(), exp), std::ldexp(a.lo(), exp));
}

ExtendedScalar dd_div(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (b.hi() == 0.0) throw DivisionByZero("extended-precision division by zero");
  const double q1 = a.hi() / b.hi();
  if (!std::isfinite(q1)) throw RangeError("extended-precision overflow");
  ExtendedScalar r = a - b * q1;
  const double q2 = r.hi() / b.hi();
  r -= b * q2;
  const double q3 = r.hi() / b.hi();
  double e;
  const double s = eft::quick_two_sum(q1, q2, e);
  return ExtendedScalar::from_parts(s, e) + q3;
}

ExtendedScalar dd_exp(const ExtendedScalar& a) {
  if (a.hi() > kExpMaxArg) throw RangeError("dd_exp: overflow");
  if (a.hi() < kExpMinArg) throw RangeError("dd_exp: underflow");
  if (a.is_zero()) return 1.0;

  // a = k ln 2 + r with |r| <= ln2/2, then r is scaled by 2^-10 so the
  // Taylor kernel converges in ~10 terms. expm1 is carried through the
  // squarings as s -> 2s + s^2 to keep the small part exact.
  const double k = std::nearbyint(a.hi() / constants::kLn2.hi());
  ExtendedScalar r = dd_ldexp(a - constants::kLn2 * k, -10);

  ExtendedScalar s = r;
  if (std::fabs(r.hi()) > 1e-40) {
    ExtendedScalar term = r;
    for (int n = 2; n < 40; ++n) {
      term = term * r / static_cast<double>(n);
      s += term;
      if (std::fabs(term.hi()) <= 1e-36 * std::fabs(s.hi())) break;
    }
  }
  for (int i = 0; i < 10; ++i) {
    if (std::fabs(s.hi()) > 1e-150) {
      s = dd_ldexp(s, 1) + s * s;
    } else {
      s = dd_ldexp(s, 1);
    }
  }
  return dd_ldexp(s + 1.0, static_cast<int>(k));
}

ExtendedScalar dd_ln(const ExtendedScalar& a) {
  if (a.hi() <= 0.0) throw DomainError("dd_ln: argument must be positive");

  const ExtendedScalar shifted = a - 1.0;
  if (std::fabs(shifted.hi()) < kLog1pKernelLimit) return log1p_kernel(shifted);

  // a = m 2^e keeps the Newton step's e^{-y} inside binary64 range.
  int e = 0;
  std::frexp(a.hi(), &e);
  const ExtendedScalar m = dd_ldexp(a, -e);
  const double y0 = std::log(m.hi());
  // One Newton step on exp(y) = m: y <- y + m e^{-y} - 1.
  const ExtendedScalar y = ExtendedScalar(y0) + (m * dd_exp(-y0) - 1.0);
  return y + constants::kLn2 * static_cast<double>(e);
}

ExtendedScalar dd_log1p(const ExtendedScalar& a) {
  if (a.hi() <= -1.0) throw DomainError("dd_log1p: argument must exceed -1");
  if (std::fabs(a.hi()) < kLog1pKernelLimit) return log1p_kernel(a);
  return dd_ln(a + 1.0);
}

std::string to_decimal_string(const ExtendedScalar& x, int digits) {
  digits = std::clamp(digits, 1, 32);
  if (x.is_zero()) return "0";

  ExtendedScalar r = abs(x);
  int e10 = static_cast<int>(std::floor(std::log10(r.hi())));
  auto pow10 = [](int n) {
    ExtendedScalar p = 1.0;
    ExtendedScalar base = 10.0;
    for (int k = std::abs(n); k > 0; k >>= 1) {
      if (k & 1) p *= base;
      if (k > 1) base *= base;
    }
    return p;
  };
  r = e10 >= 0 ? r / pow10(e10) : r * pow10(-e10);
  if (r >= 10.0) {
    r /= 10.0;
    ++e10;
  } else if (r < 1.0) {
    r *= 10.0;
    --e10;
  }

  std::vector<int> out;
  for (int i = 0; i <= digits; ++i) {
    int d = static_cast<int>(std::floor(r.hi()));
    ExtendedScalar rest = r - static_cast<double>(d);
    if (rest < 0.0) {
      --d;
      rest += 1.0;
    }
    d = std::clamp(d, 0, 9);
    out.push_back(d);
    r = rest * 10.0;
  }
  // Round half up on the extra digit.
  const bool round_up = out.back() >= 5;
  out.pop_back();
  if (round_up) {
    int i = static_cast<int>(out.size()) - 1;
    while (i >= 0 && out[i] == 9) out[i--] = 0;
    if (i >= 0) {
      ++out[i];
    } else {
      out.insert(out.begin(), 1);
      out.pop_back();
      ++e10;
    }
  }

  std::string s = x.sign() < 0 ? "-" : "";
  s += static_cast<char>('0' + out[0]);
  if (out.size() > 1) {
    s += '.';
    for (std::size_t i = 1; i < out.size(); ++i) s += static_cast<char>('0' + out[i]);
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%+03d", e10);
  return s + buf;
}

}  // namespace gamma_enclose
