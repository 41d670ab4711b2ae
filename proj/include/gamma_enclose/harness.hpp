#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gamma_enclose/bounds.hpp"

namespace gamma_enclose::harness {

inline constexpr std::string_view kCsvHeader =
    "x,family,log_lower,log_upper,log_ref,gap_lower,gap_upper,width";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain, I/O or containment failure
inline constexpr int kExitUsage = 2;

enum class Spacing { kLinear, kLogarithmic };

struct SweepConfig {
  std::vector<FamilyId> families;
  double x_min = 1.0;
  double x_max = 100.0;
  std::size_t points = 100;
  Spacing spacing = Spacing::kLogarithmic;
  std::string output_path;
  // 0 = use GAMMA_ENCLOSE_THREADS or the hardware concurrency.
  unsigned threads = 0;

  /// Throws UsageError on x_min >= x_max, points < 2, non-finite bounds or a
  /// logarithmic grid reaching x <= 0.
  void validate() const;
};

/// Grid points in ascending order; both endpoints are hit exactly.
std::vector<double> sweep_grid(const SweepConfig& config);

/// Parallelism cap from GAMMA_ENCLOSE_THREADS (positive integer), else the
/// hardware concurrency. Throws UsageError on a malformed value.
unsigned resolve_thread_count(unsigned requested);

using PointEvaluator = std::function<TightnessRecord(FamilyId, double)>;

struct SweepResult {
  std::vector<TightnessRecord> rows;  // family major, x minor
  std::vector<std::string> warnings;
  std::size_t violations = 0;
};

/// Evaluates every (family, x) pair, possibly in parallel. Rows come back
/// in deterministic order regardless of the thread count. A family whose
/// domain does not contain x_min is skipped with a warning. The factorial
/// family is evaluated at round(x).
SweepResult run_sweep(const SweepConfig& config, const PointEvaluator& evaluate = tightness);

/// 17 significant digits, '.' decimal point.
std::string format_csv_number(double v);
std::string format_csv_row(const TightnessRecord& r);
void write_csv(std::ostream& out, const std::vector<TightnessRecord>& rows);

/// Runs the sweep and writes the CSV to config.output_path. Returns 0 iff
/// the file was written and every row satisfied the containment contract.
int cmd_sweep(const SweepConfig& config, std::ostream& log,
              const PointEvaluator& evaluate = tightness);

// --- verification suites -------------------------------------------------------

enum class Suite { kOracle, kBounds, kProof, kAll };

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // measured margin or failure description
};

std::vector<CheckResult> run_suite(Suite suite);
int cmd_verify(Suite suite, std::ostream& out);

// --- point reports -----------------------------------------------------------------

int cmd_enclose(FamilyId id, double x, bool with_exp, std::ostream& out, std::ostream& err);
int cmd_factorial(std::int64_t n, std::ostream& out, std::ostream& err);

/// Full command-line entry point: `gamma-enclose <subcommand> ...`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gamma_enclose::harness
