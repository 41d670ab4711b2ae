#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "gamma_enclose/harness.hpp"

namespace gamma_enclose::harness {

namespace {

bool accepts_x_min(const BoundFamily& f, double x_min) {
  return f.domain_min_inclusive ? x_min >= f.domain_min : x_min > f.domain_min;
}

}  // namespace

void SweepConfig::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw UsageError("sweep: x range must be finite");
  }
  if (!(x_min < x_max)) throw UsageError("sweep: x_min must be below x_max");
  if (points < 2) throw UsageError("sweep: need at least 2 points");
  if (spacing == Spacing::kLogarithmic && x_min <= 0.0) {
    throw UsageError("sweep: logarithmic spacing needs x_min > 0");
  }
  if (families.empty()) throw UsageError("sweep: no families selected");
}

std::vector<double> sweep_grid(const SweepConfig& config) {
  config.validate();
  const std::size_t n = config.points;
  std::vector<double> grid(n);
  const double last = static_cast<double>(n - 1);
  if (config.spacing == Spacing::kLinear) {
    const double span = config.x_max - config.x_min;
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = config.x_min + span * (static_cast<double>(i) / last);
    }
  } else {
    const double a = std::log(config.x_min);
    const double b = std::log(config.x_max);
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = std::exp(a + (b - a) * (static_cast<double>(i) / last));
    }
  }
  grid.front() = config.x_min;
  grid.back() = config.x_max;
  return grid;
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GAMMA_ENCLOSE_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
      throw UsageError("GAMMA_ENCLOSE_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const SweepConfig& config, const PointEvaluator& evaluate) {
  const std::vector<double> grid = sweep_grid(config);

  struct Task {
    FamilyId id;
    double x;
  };
  std::vector<Task> tasks;
  SweepResult result;
  for (FamilyId id : config.families) {
    const BoundFamily& f = family(id);
    if (!accepts_x_min(f, config.x_min)) {
      std::ostringstream os;
      os << "warning: skipping " << f.name << ": x_min " << format_csv_number(config.x_min)
         << " outside domain (domain_min " << f.domain_min << ")";
      result.warnings.push_back(os.str());
      continue;
    }
    for (double x : grid) tasks.push_back({id, f.integer_domain ? std::round(x) : x});
  }

  result.rows.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        result.rows[i] = evaluate(tasks[i].id, tasks[i].x);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::min<std::size_t>(resolve_thread_count(config.threads),
                                                 std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const auto& row : result.rows) {
    if (!row.contained()) ++result.violations;
  }
  return result;
}

std::string format_csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_csv_row(const TightnessRecord& r) {
  std::string s;
  s += format_csv_number(r.x);
  s += ',';
  s += family(r.family).name;
  for (const ExtendedScalar* v : {&r.log_lower, &r.log_upper, &r.log_ref, &r.gap_lower,
                                  &r.gap_upper, &r.width}) {
    s += ',';
    s += format_csv_number(v->hi());
  }
  return s;
}

void write_csv(std::ostream& out, const std::vector<TightnessRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << format_csv_row(r) << '\n';
}

int cmd_sweep(const SweepConfig& config, std::ostream& log, const PointEvaluator& evaluate) {
  config.validate();
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    log << "error: cannot write " << config.output_path << '\n';
    return kExitFailure;
  }

  const SweepResult result = run_sweep(config, evaluate);
  for (const auto& w : result.warnings) log << w << '\n';
  write_csv(file, result.rows);
  file.flush();
  if (!file) {
    log << "error: write to " << config.output_path << " failed\n";
    return kExitFailure;
  }

  log << "wrote " << result.rows.size() << " rows to " << config.output_path << '\n';
  if (result.violations > 0) {
    log << "error: " << result.violations << " containment violation(s) beyond ORACLE_EPS\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace gamma_enclose::harness
