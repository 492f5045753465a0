#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "cli.hpp"
#include "ddist/adaptive.hpp"
#include "ddist/errors.hpp"
#include "ddist/geom.hpp"
#include "ddist/sdc.hpp"

namespace ddist::cli {

namespace {

// Intersection graphs of large random instances are dense; past this size
// the degeneracy column is left at -1.
constexpr std::size_t kDegeneracyColumnLimit = 2048;

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

BenchRecord describe(const Instance& instance, std::string algo, std::string kind,
                     std::uint64_t seed, bool with_degeneracy) {
  BenchRecord r;
  r.algo = std::move(algo);
  r.measure = "dd";
  r.n = instance.size();
  r.d = instance.dim();
  r.seed = seed;
  r.kind = std::move(kind);
  r.profile = profile(instance).profile;
  if (with_degeneracy) {
    r.degeneracy = static_cast<long long>(
        degeneracy_ordering(intersection_graph(instance)).degeneracy);
  }
  return r;
}

std::vector<std::size_t> doubling(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> ns;
  for (std::size_t n = std::min(lo, hi); n <= hi; n *= 2) ns.push_back(n);
  return ns;
}

}  // namespace

std::string to_csv(const BenchRecord& r) {
  char millis[32];
  std::snprintf(millis, sizeof millis, "%.3f", r.millis);
  return r.algo + ',' + r.measure + ',' + std::to_string(r.n) + ',' + std::to_string(r.d) + ',' +
         std::to_string(r.seed) + ',' + r.kind + ',' + std::to_string(r.profile) + ',' +
         std::to_string(r.degeneracy) + ',' + millis + ',' + r.checksum;
}

double fitted_slope(std::span<const BenchRecord> records) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const auto& r : records) by_n[r.n].push_back(r.millis);
  if (by_n.size() < 2) throw InputError("slope needs at least two distinct n");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [n, times] : by_n) {
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(std::max(median, 1e-3));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(by_n.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream& out,
                                   std::ostream& err) {
  std::vector<BenchRecord> records;
  auto emit = [&](BenchRecord r) {
    out << to_csv(r) << '\n' << std::flush;
    records.push_back(std::move(r));
  };
  out << kBenchHeader << '\n';

  if (config.suite == "scaling") {
    for (std::size_t n : doubling(config.min_n, config.max_n)) {
      for (std::size_t rep = 0; rep < config.repeats; ++rep) {
        const std::uint64_t seed = config.seed + rep;
        const auto instance = generate(GeneratorKind::uniform, n, config.d, seed);
        auto r = describe(instance, "sdc", "uniform", seed, n <= kDegeneracyColumnLimit);
        DepthDistribution dd;
        r.millis = time_ms([&] { dd = sdc_depth_distribution(instance); });
        r.checksum = checksum(dd.values());
        emit(std::move(r));
      }
    }
    if (doubling(config.min_n, config.max_n).size() >= 2) {
      err << "slope " << fitted_slope(records) << '\n';
    }
  } else if (config.suite == "profile") {
    for (std::size_t p : {1024, 256, 64, 16}) {
      if (p > config.max_n) continue;
      for (std::size_t rep = 0; rep < config.repeats; ++rep) {
        const std::uint64_t seed = config.seed + rep;
        const auto instance = generate_with_profile(config.max_n, config.d, p, seed);
        auto r = describe(instance, "profile", "grouped", seed,
                          config.max_n <= kDegeneracyColumnLimit);
        DepthDistribution dd;
        r.millis = time_ms([&] { dd = dd_profile(instance); });
        r.checksum = checksum(dd.values());
        emit(std::move(r));
      }
    }
  } else if (config.suite == "degeneracy") {
    for (std::size_t n : doubling(config.min_n, config.max_n)) {
      for (std::size_t rep = 0; rep < config.repeats; ++rep) {
        const std::uint64_t seed = config.seed + rep;
        const auto instance = generate(GeneratorKind::cubes, n, config.d, seed);
        for (const char* algo : {"sdc", "degeneracy"}) {
          auto r = describe(instance, algo, "cubes", seed, true);
          DepthDistribution dd;
          r.millis = time_ms([&] {
            dd = r.algo == "sdc" ? sdc_depth_distribution(instance) : dd_degeneracy(instance);
          });
          r.checksum = checksum(dd.values());
          emit(std::move(r));
        }
      }
    }
  } else {
    throw InputError("--suite: unknown suite '" + config.suite + "'");
  }
  return records;
}

}  // namespace ddist::cli
