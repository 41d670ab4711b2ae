#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "gamma_enclose/harness.hpp"
#include "gamma_enclose/proofcheck.hpp"

namespace gamma_enclose::harness {

namespace {

std::vector<double> logspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  const double la = std::log(a);
  const double lb = std::log(b);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  v.front() = a;
  v.back() = b;
  return v;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string name, bool passed, std::string detail) {
    results_.push_back({suite_, std::move(name), passed, std::move(detail)});
  }

  // Runs `body`, turning an escaped exception into a failed check.
  template <typename Body>
  void run(const std::string& name, Body body) {
    try {
      body(name);
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

// --- oracle -----------------------------------------------------------------------

std::vector<CheckResult> oracle_suite() {
  SuiteBuilder s("oracle");

  s.run("functional-equation", [&](const std::string& name) {
    double worst = 0.0;
    for (double x : logspace(1e-3, 1e3, 1000)) {
      const ExtendedScalar xe = x;
      const ExtendedScalar r = lgamma_ref(xe + 1.0) - lgamma_ref(xe) - dd_ln(xe);
      worst = std::max(worst, std::fabs(r.hi()));
    }
    s.add(name, worst <= 1e-25, "max residual " + sci(worst) + " (limit 1e-25, 1000 points)");
  });

  s.run("canonical-product-series", [&](const std::string& name) {
    bool ok = true;
    std::ostringstream os;
    for (double x : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      const PartialSum p = lgamma_series_partial(x, 10'000'000);
      const double diff = std::fabs(lgamma_ref(ExtendedScalar(x) + 1.0).hi() - p.value);
      ok = ok && diff <= 10.0 * p.tail;
      os << "x=" << x << ": " << sci(diff) << "/" << sci(10.0 * p.tail) << " ";
    }
    s.add(name, ok, os.str());
  });

  s.run("digamma-series", [&](const std::string& name) {
    const PartialSum p9 = digamma_series_partial(9.0, 10'000'000);
    const double d10 = std::fabs(digamma_ref(10.0).hi() - (p9.value + p9.tail));
    const PartialSum p05 = digamma_series_partial(0.5, 10'000'000);
    const double d15 = std::fabs(digamma_ref(1.5).hi() - p05.value);
    s.add(name, d10 <= 1e-7 && d15 <= 1e-7,
          "psi(10) diff " + sci(d10) + ", psi(1.5) diff " + sci(d15) + " (limit 1e-7)");
  });

  s.run("digamma-monotone", [&](const std::string& name) {
    bool increasing = true;
    bool gap_positive_decreasing = true;
    ExtendedScalar prev_psi = -1e300;
    ExtendedScalar prev_gap = 1e300;
    for (double x : logspace(1e-3, 1e6, 1000)) {
      const ExtendedScalar psi = digamma_ref(x);
      const ExtendedScalar gap = dd_ln(x) - psi;
      increasing = increasing && psi > prev_psi;
      gap_positive_decreasing = gap_positive_decreasing && gap > 0.0 && gap < prev_gap;
      prev_psi = psi;
      prev_gap = gap;
    }
    s.add(name, increasing && gap_positive_decreasing && prev_gap < 1e-6,
          "ln(1e6) - psi(1e6) = " + sci(prev_gap.hi()));
  });

  s.run("stirling-truncation", [&](const std::string& name) {
    const double b = default_oracle_config().truncation_bound();
    s.add(name, b <= 1e-29, "first omitted term " + sci(b) + " (limit 1e-29)");
  });

  s.run("extprec-round-trip", [&](const std::string& name) {
    double worst = 0.0;
    for (double x : logspace(1e-6, 1e6, 10000)) {
      const ExtendedScalar back = dd_exp(dd_ln(x));
      worst = std::max(worst, std::fabs(((back - x) / x).hi()));
    }
    s.add(name, worst <= 1e-27, "max relative error " + sci(worst) + " (limit 1e-27)");
  });

  return s.take();
}

// --- bounds -----------------------------------------------------------------------

std::vector<CheckResult> bounds_suite() {
  SuiteBuilder s("bounds");
  const Constants& k = constants_table();

  for (const BoundFamily& f : all_families()) {
    s.run("containment-" + std::string(f.name), [&](const std::string& name) {
      std::vector<double> xs;
      if (f.integer_domain) {
        for (int n = 1; n <= 1000; ++n) xs.push_back(n);
      } else {
        xs = logspace(std::max(f.domain_min, 1e-3), 1e3, 10000);
      }
      double worst = 1e300;
      std::size_t bad = 0;
      for (double x : xs) {
        const TightnessRecord r = tightness(f.id, x);
        worst = std::min({worst, r.gap_lower.hi(), r.gap_upper.hi()});
        if (!r.contained()) ++bad;
      }
      s.add(name, bad == 0,
            std::to_string(xs.size()) + " points, min gap " + sci(worst) + ", violations " +
                std::to_string(bad));
    });
  }

  s.run("batir-delta-improves-upper", [&](const std::string& name) {
    bool ok = true;
    for (double x : logspace(1e-3, 1e3, 1000)) {
      ok = ok && enclose_lgamma(FamilyId::kBatirDelta, x).hi <
                     enclose_lgamma(FamilyId::kAB2005, x).hi;
    }
    s.add(name, ok, "upper(batir-delta) < upper(ab2005) on 1000 points");
  });

  s.run("delta-star-sandwich", [&](const std::string& name) {
    bool ok = true;
    for (double x : logspace(1e-3, 1e9, 1000)) {
      const ExtendedScalar d = delta_star(x);
      ok = ok && d > x && d < ExtendedScalar(x) + ExtendedScalar(1.0) / 3.0;
    }
    const double limit =
        (delta_star(1e6) - 1e6 - ExtendedScalar(1.0) / 3.0).hi();
    const double overlap = (delta_star(1e10) - delta_star_asymptotic(1e10)).hi();
    ok = ok && std::fabs(limit) <= 1e-6 && std::fabs(overlap) <= 1e-9;
    s.add(name, ok,
          "delta*(1e6)-1e6-1/3 = " + sci(limit) + ", direct-asymptotic at 1e10 = " +
              sci(overlap));
  });

  s.run("quartic-sharpness", [&](const std::string& name) {
    // phi(x) = exp(4(log Gamma(x+1) - 1/2 ln 2pi - x ln x + x)) - x^2 - x/3
    auto phi_of = [](double x) {
      const ExtendedScalar xe = x;
      const ExtendedScalar log_ratio =
          lgamma_ref(xe + 1.0) - half_log_two_pi() - xe * dd_ln(xe) + xe;
      return dd_exp(dd_ldexp(log_ratio, 2)) - xe * xe - xe / 3.0;
    };
    bool ok = true;
    ExtendedScalar prev = -1.0;
    for (double x : logspace(1.0, 1e6, 1000)) {
      const ExtendedScalar v = phi_of(x);
      ok = ok && v > prev && v >= k.a_star_lo - ORACLE_EPS && v < k.a_star_hi;
      prev = v;
    }
    const double at_one = (phi_of(1.0) - k.a_star_lo).hi();
    const double top = (prev - k.a_star_hi).hi();
    // phi(x) = 1/18 - 2/(405x) + O(x^-2)
    const double ratio = (phi_of(1e3) - k.a_star_hi).hi() / (-2.0 / 405e3);
    ok = ok && top < 0.0 && top > -1e-5 && std::fabs(at_one) <= 1e-20 && ratio > 1.0 / 1.1 &&
         ratio < 1.1;
    s.add(name, ok,
          "phi(1)-a_* = " + sci(at_one) + ", phi(1e6)-1/18 = " + sci(top) +
              ", (phi(1e3)-1/18)/(-2/405e3) = " + format_csv_number(ratio));
  });

  s.run("monotone-widths", [&](const std::string& name) {
    bool ok = true;
    for (FamilyId id : {FamilyId::kQuarticSharp, FamilyId::kCubicRef2}) {
      ExtendedScalar prev = 1e300;
      for (double x : logspace(id == FamilyId::kQuarticSharp ? 1.0 : 1e-3, 1e3, 1000)) {
        const ExtendedScalar w = enclose_lgamma(id, x).width();
        ok = ok && w < prev;
        prev = w;
      }
    }
    s.add(name, ok, "quartic-sharp and cubic-ref2 widths strictly decreasing");
  });

  s.run("factorial-exact", [&](const std::string& name) {
    bool ok = true;
    for (std::int64_t n = 1; n <= 170; ++n) {
      const Enclosure e = enclose_factorial(n);
      const ExtendedScalar exact = ln_factorial_exact(n);
      ok = ok && e.lo <= exact + ORACLE_EPS && exact <= e.hi + ORACLE_EPS;
    }
    const Enclosure one = enclose_factorial(1);
    const double lower_gap = one.lo.hi();
    ok = ok && std::fabs(lower_gap) <= 1e-25;
    s.add(name, ok, "n in [1,170] bracketed; lower at n=1 off by " + sci(lower_gap));
  });

  s.run("equality-points", [&](const std::string& name) {
    const double sharp = tightness(FamilyId::kQuarticSharp, 1.0).gap_lower.hi();
    const double global = tightness(FamilyId::kQuarticGlobal, 0.0).gap_lower.hi();
    const Enclosure dz = enclose_lgamma(FamilyId::kDigammaArg, 0.0);
    const bool ok = std::fabs(sharp) <= 1e-25 && std::fabs(global) <= 1e-25 &&
                    dz.lo.is_zero() && dz.hi.is_zero();
    s.add(name, ok,
          "quartic-sharp@1 gap " + sci(sharp) + ", quartic-global@0 gap " + sci(global));
  });

  s.run("published-constants", [&](const std::string& name) {
    const bool ok = std::fabs(k.a_star_lo.hi() - 0.049653963176) < 1e-12 &&
                    std::fabs(k.published_alpha_lo.hi() - 0.821728) < 5e-7 &&
                    std::fabs(k.alpha_hi.hi() - 2.50663) < 5e-6 &&
                    std::fabs(k.published_beta_lo.hi() - 0.998936) < 5e-7;
    s.add(name, ok,
          "a_*=" + to_decimal_string(k.a_star_lo, 14) +
              " alpha_*(published)=" + to_decimal_string(k.published_alpha_lo, 8) +
              " beta_*(published)=" + to_decimal_string(k.published_beta_lo, 8));
  });

  return s.take();
}

// --- proof --------------------------------------------------------------------------

std::vector<CheckResult> proof_suite() {
  namespace pc = proofcheck;
  SuiteBuilder s("proof");
  const ExtendedScalar third = ExtendedScalar(1.0) / 3.0;

  s.run("theta-range-monotone", [&](const std::string& name) {
    bool ok = true;
    for (double x : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
      ExtendedScalar prev = 0.0;
      for (std::int64_t kk = 1; kk <= 10000; ++kk) {
        const ExtendedScalar t = pc::theta(kk, x);
        ok = ok && t > prev && t < third;
        prev = t;
      }
    }
    const double lim = (pc::theta(100'000'000, 1.0) - third).hi();
    ok = ok && std::fabs(lim) <= 1e-7;
    s.add(name, ok, "k in [1,1e4] x 6 values; theta(1e8)-1/3 = " + sci(lim));
  });

  s.run("theta-delta-star-identity", [&](const std::string& name) {
    double worst = 0.0;
    for (double x : logspace(1e-3, 1e6, 500)) {
      worst = std::max(worst, std::fabs((pc::theta(1, x) + x - delta_star(x)).hi()));
    }
    s.add(name, worst <= 1e-24, "max |theta(1)+x-delta*(x)| = " + sci(worst));
  });

  s.run("f-limit", [&](const std::string& name) {
    const double d = (pc::f_fn(1e8) - third).hi();
    s.add(name, std::fabs(d) <= 1e-7, "f(1e8)-1/3 = " + sci(d));
  });

  s.run("h-negative-g-decreasing", [&](const std::string& name) {
    bool ok = true;
    ExtendedScalar prev_g = 1e300;
    for (double t : logspace(1e-3, 1e2, 1000)) {
      const ExtendedScalar g = pc::g_fn(t);
      ok = ok && pc::h_fn(t) < 0.0 && g < prev_g;
      prev_g = g;
    }
    // h(t) = -t^6/36 + 2t^7/45 - 19t^8/360 + ...
    const double t = 1e-4;
    const double series = -std::pow(t, 6) / 36.0 + 2.0 * std::pow(t, 7) / 45.0;
    const double dev = std::fabs(pc::h_fn(t).hi() - series);
    ok = ok && dev <= std::pow(t, 8);
    s.add(name, ok, "1000 points in [1e-3,1e2]; |h(1e-4) - series| = " + sci(dev));
  });

  s.run("phi-monotone-limits", [&](const std::string& name) {
    bool ok = true;
    for (double x : {0.5, 1.0, 3.0, 10.0}) {
      ExtendedScalar prev = 0.0;
      for (double kk : logspace(1.0, 1e8, 400)) {
        const ExtendedScalar p = pc::phi(kk, x);
        const ExtendedScalar xe = x;
        const ExtendedScalar l = dd_log1p(xe / kk);
        // sqrt(k(k+x)) < x / (ln(k+x) - ln k)
        const bool gl = ExtendedScalar(kk) * (ExtendedScalar(kk) + x) * l * l < xe * xe;
        ok = ok && p > prev && p > 0.0 && p < xe && gl;
        prev = p;
      }
    }
    const double lim = (pc::phi(1e8, 3.0) - 1.5).hi();
    const double at_one = (pc::phi(1.0, 3.0) - (ExtendedScalar(3.0) / dd_ln(4.0) - 1.0)).hi();
    ok = ok && std::fabs(lim) <= 1e-6 && std::fabs(at_one) <= 1e-28;
    s.add(name, ok, "phi(1e8;3)-1.5 = " + sci(lim) + ", phi(1;3)-(3/ln4-1) = " + sci(at_one));
  });

  s.run("eq18-positive", [&](const std::string& name) {
    constexpr int kNodes = 200;
    int negative = 0;
    double first_positive = 0.0;
    for (int i = 0; i < kNodes; ++i) {
      const double node =
          25.5 - 24.5 * std::cos(constants::kPi.hi() * (i + 0.5) / kNodes);
      const int sign = pc::eq18_sign(Rational(node));
      if (sign <= 0) ++negative;
      if (sign > 0 && first_positive == 0.0) first_positive = node;
    }
    s.add(name, negative == 0,
          std::to_string(kNodes - negative) + "/" + std::to_string(kNodes) +
              " Chebyshev nodes in [1,50] positive; smallest positive node " +
              format_csv_number(first_positive));
  });

  s.run("p1-matches-psi-tail", [&](const std::string& name) {
    // p1 = 720720 x^14 (1/x - rhs(x)) as exact polynomials.
    RationalPoly expected = RationalPoly::monomial(720720, 13);
    for (const auto& term : pc::psi_tail_terms()) {
      expected = expected - RationalPoly::monomial(720720 * term.coefficient, 14 - term.power);
    }
    s.add(name, expected == pc::p1_polynomial(), "exact polynomial identity");
  });

  s.run("pq-positive", [&](const std::string& name) {
    bool ok = true;
    for (int i = 1; i <= 400; ++i) {
      const Rational x(i, 4);
      const pc::SignPair sp = pc::pq_positivity(x);
      ok = ok && sp.p > 0 && sp.q > 0 && pc::theta_second_difference_identity(x);
    }
    s.add(name, ok, "x = i/4, i=1..400: p>0, q>0, Theta'' difference = p/q exactly");
  });

  s.run("psi-tail", [&](const std::string& name) {
    bool ok = true;
    double min_slack = 1e300;
    for (double x : logspace(1.0, 1e3, 1000)) {
      ok = ok && pc::psi_tail_check(x);
      min_slack = std::min(min_slack, pc::psi_tail_slack(x).hi());
    }
    s.add(name, ok, "1000 points in [1,1e3]; min slack " + sci(min_slack));
  });

  s.run("raabe-integral", [&](const std::string& name) {
    bool ok = true;
    std::ostringstream os;
    for (double x : {0.5, 1.0, 10.0, 100.0}) {
      const double r = pc::raabe_check(x).hi();
      ok = ok && r <= 1e-20;
      os << "x=" << x << ": " << sci(r) << " ";
    }
    s.add(name, ok, os.str());
  });

  s.run("theta-cap", [&](const std::string& name) {
    bool ok = true;
    ExtendedScalar prev = -1e300;
    ExtendedScalar prev_d = 1e300;
    for (double x : logspace(1e-3, 1e4, 1000)) {
      const ExtendedScalar t = pc::theta_cap(x);
      const ExtendedScalar d = pc::theta_cap_prime(x);
      ok = ok && t < 0.0 && t > prev && d > 0.0 && d < prev_d;
      prev = t;
      prev_d = d;
    }
    const ExtendedScalar zero_limit =
        dd_ldexp(dd_ln(18.0), -2) - half_log_two_pi();
    const double at0 = (pc::theta_cap(1e-8) - zero_limit).hi();
    const ExtendedScalar one_value =
        ExtendedScalar(1.0) - half_log_two_pi() - dd_ldexp(dd_ln(ExtendedScalar(25.0) / 18.0), -2);
    const double at1 = (pc::theta_cap(1.0) - one_value).hi();
    const double big = pc::theta_cap(1e6).hi();
    ok = ok && std::fabs(at0) <= 1e-6 && std::fabs(at1) <= 1e-25 && std::fabs(big) <= 1e-7;
    s.add(name, ok,
          "Theta(1e-8)-Theta(0) = " + sci(at0) + ", Theta(1) err " + sci(at1) +
              ", Theta(1e6) = " + sci(big));
  });

  s.run("stirling-gap-series", [&](const std::string& name) {
    bool ok = true;
    std::ostringstream os;
    for (double x : {1.0, 2.0, 5.0}) {
      const PartialSum p = pc::stirling_gap_series(x, 100'000);
      const double diff = pc::stirling_gap(x).hi() - p.value;
      ok = ok && diff >= -1e-12 && diff <= p.tail;
      os << "x=" << x << ": " << sci(diff) << "/" << sci(p.tail) << " ";
    }
    s.add(name, ok, os.str());
  });

  return s.take();
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  if (suite == Suite::kOracle || suite == Suite::kAll) append(oracle_suite());
  if (suite == Suite::kBounds || suite == Suite::kAll) append(bounds_suite());
  if (suite == Suite::kProof || suite == Suite::kAll) append(proof_suite());
  return out;
}

int cmd_verify(Suite suite, std::ostream& out) {
  const std::vector<CheckResult> results = run_suite(suite);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << ": " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace gamma_enclose::harness
