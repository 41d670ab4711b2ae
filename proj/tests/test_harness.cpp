#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gamma_enclose/errors.hpp"
#include "gamma_enclose/harness.hpp"

using namespace gamma_enclose;
using namespace gamma_enclose::harness;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<const char*> args) {
  args.insert(args.begin(), "gamma-enclose");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::filesystem::path temp_csv(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("grid") {
  SweepConfig c;
  c.families = {FamilyId::kAB2005};
  c.x_min = 1.0;
  c.x_max = 100.0;
  c.points = 3;
  const auto g = sweep_grid(c);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == 1.0);
  CHECK(g[1] == doctest::Approx(10.0));
  CHECK(g[2] == 100.0);
  c.spacing = Spacing::kLinear;
  CHECK(sweep_grid(c)[1] == 50.5);
  c.points = 1;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.points = 2;
  c.x_max = 1.0;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.spacing = Spacing::kLogarithmic;
  CHECK_THROWS_AS(c.validate(), UsageError);
}

TEST_CASE("csv formatting") {
  CHECK(format_csv_number(0.1) == "0.10000000000000001");
  CHECK(format_csv_number(24.0) == "24");
  const TightnessRecord r = tightness(FamilyId::kAB2005, 4.0);
  const std::string row = format_csv_row(r);
  CHECK(row.rfind("4,ab2005,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 7);
}

TEST_CASE("sweep rows, order and thread independence") {
  SweepConfig c;
  for (const auto& f : all_families()) c.families.push_back(f.id);
  c.x_min = 1.0;
  c.x_max = 100.0;
  c.points = 100;
  c.threads = 1;
  const SweepResult one = run_sweep(c);
  CHECK(one.rows.size() == 700);
  CHECK(one.violations == 0);
  CHECK(one.warnings.empty());
  CHECK(one.rows.front().family == FamilyId::kAB2005);
  CHECK(one.rows.back().family == FamilyId::kFactorial);
  CHECK(one.rows.back().x == 100.0);

  c.threads = 8;
  const SweepResult many = run_sweep(c);
  std::ostringstream a, b;
  write_csv(a, one.rows);
  write_csv(b, many.rows);
  CHECK(a.str() == b.str());
}

TEST_CASE("skipped family leaves a header-only file") {
  SweepConfig c;
  c.families = {FamilyId::kQuarticSharp};
  c.x_min = 0.1;
  c.x_max = 0.5;
  c.points = 10;
  c.output_path = temp_csv("gamma_enclose_skip.csv").string();
  std::ostringstream log;
  CHECK(cmd_sweep(c, log) == kExitOk);
  CHECK(slurp(c.output_path) == std::string(kCsvHeader) + "\n");
  CHECK(log.str().find("warning: skipping quartic-sharp") != std::string::npos);
}

TEST_CASE("injected violation forces a nonzero exit") {
  SweepConfig c;
  c.families = {FamilyId::kAB2005};
  c.x_min = 1.0;
  c.x_max = 2.0;
  c.points = 5;
  c.output_path = temp_csv("gamma_enclose_bad.csv").string();
  auto broken = [](FamilyId id, double x) {
    TightnessRecord r = tightness(id, x);
    if (x == 2.0) r.gap_upper = -1e-20;
    return r;
  };
  std::ostringstream log;
  CHECK(cmd_sweep(c, log, broken) == kExitFailure);
  CHECK(lines(slurp(c.output_path)).size() == 6);

  auto tiny = [](FamilyId id, double x) {
    TightnessRecord r = tightness(id, x);
    r.gap_lower = -1e-26;
    return r;
  };
  CHECK(cmd_sweep(c, log, tiny) == kExitOk);
}

TEST_CASE("thread count from the environment") {
  CHECK(resolve_thread_count(3) == 3);
  setenv("GAMMA_ENCLOSE_THREADS", "2", 1);
  CHECK(resolve_thread_count(0) == 2);
  setenv("GAMMA_ENCLOSE_THREADS", "two", 1);
  CHECK_THROWS_AS(resolve_thread_count(0), UsageError);
  setenv("GAMMA_ENCLOSE_THREADS", "0", 1);
  CHECK_THROWS_AS(resolve_thread_count(0), UsageError);
  unsetenv("GAMMA_ENCLOSE_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
}

TEST_CASE("cli: enclose") {
  Run r = cli({"enclose", "--family", "ab2005", "--x", "4", "--exp"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lower:     23.97") != std::string::npos);
  CHECK(r.out.find("upper:     25.08") != std::string::npos);

  r = cli({"enclose", "--family", "quartic-sharp", "--x", "0.5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("x below domain_min 1") != std::string::npos);

  r = cli({"enclose", "--family", "bogus", "--x", "1"});
  CHECK(r.code == 2);

  r = cli({"enclose", "--family", "ab2005", "--x", "abc"});
  CHECK(r.code == 2);

  r = cli({"enclose", "--family", "ab2005", "--x", "500", "--exp"});
  CHECK(r.code == 0);
  CHECK(r.out.find("overflow") != std::string::npos);

  r = cli({});
  CHECK(r.code == 2);
}

TEST_CASE("cli: factorial") {
  Run r = cli({"factorial", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ln_n!:     1.5104412573075515") != std::string::npos);
  CHECK(cli({"factorial", "--n", "0"}).code == 1);
  CHECK(cli({"factorial", "--n", "ten"}).code == 2);
}

TEST_CASE("cli: sweep") {
  const auto path = temp_csv("gamma_enclose_cli.csv");
  Run r = cli({"sweep", "--family", "factorial", "--x-min", "1", "--x-max", "170", "--points",
               "170", "--spacing", "linear", "--output", path.string().c_str()});
  CHECK(r.code == 0);
  const auto rows = lines(slurp(path));
  REQUIRE(rows.size() == 171);
  CHECK(rows[0] == kCsvHeader);
  CHECK(rows[1].rfind("1,factorial,", 0) == 0);
  CHECK(rows[170].rfind("170,factorial,", 0) == 0);

  r = cli({"sweep", "--family", "ab2005", "--x-min", "1", "--x-max", "2", "--output",
           "/nonexistent-dir/x.csv"});
  CHECK(r.code == 1);
  r = cli({"sweep", "--family", "ab2005", "--x-min", "2", "--x-max", "1", "--output",
           path.string().c_str()});
  CHECK(r.code == 2);
  r = cli({"sweep", "--family", "ab2005", "--x-min", "1", "--x-max", "2", "--spacing", "cubic",
           "--output", path.string().c_str()});
  CHECK(r.code == 2);
}

TEST_CASE("cli: verify oracle suite") {
  Run r = cli({"verify", "--suite", "oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS oracle/functional-equation") != std::string::npos);
  CHECK(cli({"verify", "--suite", "nope"}).code == 2);
}
