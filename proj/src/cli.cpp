#include <CLI11.hpp>

#include <cmath>
#include <ostream>
#include <sstream>

#include "gamma_enclose/harness.hpp"

namespace gamma_enclose::harness {

namespace {

void print_record(const TightnessRecord& r, std::string_view ref_label, std::ostream& out) {
  out << "family:    " << family(r.family).name << '\n'
      << "x:         " << format_csv_number(r.x) << '\n'
      << "log_lower: " << to_decimal_string(r.log_lower) << '\n'
      << "log_upper: " << to_decimal_string(r.log_upper) << '\n'
      << ref_label << to_decimal_string(r.log_ref) << '\n'
      << "gap_lower: " << to_decimal_string(r.gap_lower, 6) << '\n'
      << "gap_upper: " << to_decimal_string(r.gap_upper, 6) << '\n'
      << "width:     " << to_decimal_string(r.width, 6) << '\n';
}

std::string exp_or_overflow(const ExtendedScalar& v) {
  try {
    return format_csv_number(dd_exp(v).hi());
  } catch (const RangeError&) {
    return "overflow";
  }
}

int report_containment(const TightnessRecord& r, std::ostream& err) {
  if (r.contained()) return kExitOk;
  err << "error: reference value outside the enclosure beyond ORACLE_EPS\n";
  return kExitFailure;
}

}  // namespace

int cmd_enclose(FamilyId id, double x, bool with_exp, std::ostream& out, std::ostream& err) {
  TightnessRecord r;
  try {
    r = tightness(id, x);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  print_record(r, "log_ref:   ", out);
  if (with_exp) {
    out << "lower:     " << exp_or_overflow(r.log_lower) << '\n'
        << "upper:     " << exp_or_overflow(r.log_upper) << '\n';
  }
  return report_containment(r, err);
}

int cmd_factorial(std::int64_t n, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: factorial: n below domain_min 1\n";
    return kExitFailure;
  }
  TightnessRecord r;
  try {
    r = tightness(FamilyId::kFactorial, static_cast<double>(n));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  // Above the exact range the reference is the series oracle.
  print_record(r, n <= kExactFactorialMax ? "ln_n!:     " : "log_ref:   ", out);
  return report_containment(r, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified log-space enclosures of the gamma function", "gamma-enclose"};
  app.require_subcommand(1);

  std::string family_name;
  double x = 0.0;
  bool with_exp = false;
  auto* enclose = app.add_subcommand("enclose", "Enclose log Gamma(x+1) with one bound family");
  enclose->add_option("--family", family_name, "Bound family")->required();
  enclose->add_option("--x", x, "Argument")->required();
  enclose->add_flag("--exp", with_exp, "Also print the exponentiated bounds");

  std::vector<std::string> sweep_families;
  SweepConfig config;
  std::string spacing = "log";
  auto* sweep = app.add_subcommand("sweep", "Write a tightness CSV over a grid");
  sweep->add_option("--family", sweep_families, "Family name, repeatable, or 'all'")
      ->required();
  sweep->add_option("--x-min", config.x_min, "Smallest argument")->required();
  sweep->add_option("--x-max", config.x_max, "Largest argument")->required();
  sweep->add_option("--points", config.points, "Grid size")->capture_default_str();
  sweep->add_option("--spacing", spacing, "linear or log")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  sweep->add_option("--output", config.output_path, "CSV path")->required();
  sweep->add_option("--threads", config.threads, "Worker threads (0 = auto)");

  std::string suite_name = "all";
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", suite_name, "oracle, bounds, proof or all")
      ->check(CLI::IsMember({"oracle", "bounds", "proof", "all"}))
      ->capture_default_str();

  std::int64_t n = 0;
  auto* fact = app.add_subcommand("factorial", "Enclose ln n!");
  fact->add_option("--n", n, "Positive integer")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto lookup = [&](const std::string& name) -> std::optional<FamilyId> {
    auto id = parse_family(name);
    if (!id) err << "usage error: unknown family '" << name << "'\n";
    return id;
  };

  try {
    if (*enclose) {
      const auto id = lookup(family_name);
      if (!id) return kExitUsage;
      return cmd_enclose(*id, x, with_exp, out, err);
    }
    if (*sweep) {
      for (const auto& name : sweep_families) {
        if (name == "all") {
          for (const auto& f : all_families()) config.families.push_back(f.id);
          continue;
        }
        const auto id = lookup(name);
        if (!id) return kExitUsage;
        config.families.push_back(*id);
      }
      config.spacing = spacing == "linear" ? Spacing::kLinear : Spacing::kLogarithmic;
      return cmd_sweep(config, err);
    }
    if (*verify) {
      const Suite suite = suite_name == "oracle"   ? Suite::kOracle
                          : suite_name == "bounds" ? Suite::kBounds
                          : suite_name == "proof"  ? Suite::kProof
                                                   : Suite::kAll;
      return cmd_verify(suite, out);
    }
    return cmd_factorial(n, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gamma_enclose::harness
