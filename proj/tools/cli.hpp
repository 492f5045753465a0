#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ddist::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadInput = 2,
  kBudget = 3,
  kNotSlabs = 4,
  kVerifyFailed = 5,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a over the components printed with 12 fixed decimals, as 16 hex digits.
std::string checksum(std::span<const double> values);

struct BenchRecord {
  std::string algo;
  std::string measure;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::string kind;
  std::size_t profile = 0;
  long long degeneracy = -1;  // -1 when not computed
  double millis = 0.0;
  std::string checksum;
};

inline constexpr const char* kBenchHeader =
    "algo,measure,n,d,seed,kind,profile,degeneracy,millis,checksum";

std::string to_csv(const BenchRecord& r);

struct BenchConfig {
  std::string suite;
  std::size_t min_n = 1024;
  std::size_t max_n = 1 << 16;
  std::size_t d = 2;
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
};

/// Prints the CSV header and one record per run to `out`. The scaling
/// suite also reports its fitted log-log slope on `err`.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream& out,
                                   std::ostream& err);

/// Least-squares slope of log(millis) against log(n), on the median time per n.
double fitted_slope(std::span<const BenchRecord> records);

}  // namespace ddist::cli
