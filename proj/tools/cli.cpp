#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ddist/adaptive.hpp"
#include "ddist/errors.hpp"
#include "ddist/geom.hpp"
#include "ddist/measures.hpp"
#include "ddist/mmreduce.hpp"
#include "ddist/oracle.hpp"
#include "ddist/sdc.hpp"

namespace ddist::cli {

namespace {

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(flag + ": cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("--out: cannot write '" + path + "'");
}

struct SlabSplit {
  std::vector<AxisBox> slabs;
  std::size_t covering = 0;
};

// Boxes covering the domain become a depth shift; disjoint boxes are ignored.
SlabSplit split_slabs(const Instance& instance) {
  SlabSplit split;
  for (std::size_t k = 0; k < instance.size(); ++k) {
    const auto& b = instance.boxes()[k];
    if (!clip(b, instance.domain())) continue;
    const auto axis = slab_axis(b, instance.domain());
    if (!axis) throw SlabPreconditionError("box " + std::to_string(k) + " is not a slab of the domain");
    if (axis->full_cover()) {
      ++split.covering;
    } else {
      split.slabs.push_back(b);
    }
  }
  return split;
}

MeasureReport compute(const Instance& instance, const std::string& algo,
                      const std::string& measure) {
  const bool want_dd = measure == "dd" || measure == "all";
  const bool want_klee = measure == "klee" || measure == "all";
  const bool want_depth = measure == "maxdepth" || measure == "all";
  MeasureReport report;

  if (algo == "slab") {
    const auto split = split_slabs(instance);
    const auto& gamma = instance.domain();
    if (want_dd) {
      DepthDistribution dd(instance.size());
      dd_accumulate(dd, dd_slabs(split.slabs, gamma), split.covering);
      report.dd = dd;
    }
    if (want_klee) report.klee = split.covering > 0 ? volume(gamma) : klee_slabs(split.slabs, gamma);
    if (want_depth) report.max_depth = split.covering + maxdepth_slabs(split.slabs, gamma);
  } else if (algo == "oracle") {
    if (want_dd) report.dd = oracle_dd(instance);
    if (want_klee) report.klee = oracle_klee(instance);
    if (want_depth) report.max_depth = oracle_max_depth(instance);
  } else if (algo == "profile") {
    if (want_dd) report.dd = dd_profile(instance);
    if (want_klee) report.klee = klee_profile(instance);
    if (want_depth) report.max_depth = maxdepth_profile(instance);
  } else if (algo == "degeneracy") {
    if (want_dd) report.dd = dd_degeneracy(instance);
    if (want_klee) report.klee = klee_degeneracy(instance);
    if (want_depth) report.max_depth = maxdepth_degeneracy(instance);
  } else {
    if (want_dd) report.dd = sdc_depth_distribution(instance);
    if (want_klee) report.klee = sdc_klee(instance);
    if (want_depth) report.max_depth = sdc_max_depth(instance);
  }
  return report;
}

std::vector<double> report_values(const MeasureReport& report) {
  std::vector<double> values;
  if (report.dd) values.assign(report.dd->values().begin(), report.dd->values().end());
  if (report.klee) values.push_back(*report.klee);
  if (report.max_depth) values.push_back(static_cast<double>(*report.max_depth));
  return values;
}

}  // namespace

std::string checksum(std::span<const double> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[64];
  for (double x : values) {
    // -0 prints with a sign, so it is folded into 0 first.
    const int len = std::snprintf(buf, sizeof buf, "%.12f,", x == 0.0 ? 0.0 : x);
    for (int i = 0; i < len; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depth distribution of axis-aligned boxes", "ddist"};
  app.require_subcommand(1);

  std::string in_path, out_path, algo = "sdc", measure = "all";
  bool print_checksum = false;
  auto* compute_cmd = app.add_subcommand("compute", "Compute measures of an instance file");
  compute_cmd->add_option("--in", in_path, "Instance JSON")->required();
  compute_cmd->add_option("--algo", algo)
      ->check(CLI::IsMember({"sdc", "oracle", "profile", "degeneracy", "slab"}));
  compute_cmd->add_option("--measure", measure)->check(CLI::IsMember({"dd", "klee", "maxdepth", "all"}));
  compute_cmd->add_option("--out", out_path, "Output file (default stdout)");
  compute_cmd->add_flag("--checksum", print_checksum, "Also print the output checksum on stderr");

  std::string kind = "uniform";
  std::size_t n = 0, d = 0, profile_p = 0;
  std::uint64_t seed = 1;
  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded random instance");
  generate_cmd->add_option("--kind", kind)
      ->check(CLI::IsMember({"uniform", "slabs", "cubes", "containing-chain"}));
  generate_cmd->add_option("--n", n)->required();
  generate_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", seed);
  generate_cmd->add_option("--profile", profile_p, "Build groups of this many boxes along axis 0")
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--out", out_path);

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time algorithms on generated instances");
  bench_cmd->add_option("--suite", bench.suite)
      ->required()
      ->check(CLI::IsMember({"scaling", "profile", "degeneracy"}));
  bench_cmd->add_option("--min-n", bench.min_n)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-n", bench.max_n)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--d", bench.d)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeats", bench.repeats)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed);

  std::string a_path, b_path, engine = "sdc";
  bool verify = false;
  auto* mm_cmd = app.add_subcommand("mm", "Multiply matrices through the box gadget");
  mm_cmd->add_option("--a", a_path)->required();
  mm_cmd->add_option("--b", b_path)->required();
  mm_cmd->add_option("--engine", engine)->check(CLI::IsMember({"sdc", "oracle"}));
  mm_cmd->add_flag("--verify", verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*compute_cmd) {
      const Instance instance = read_instance(read_file(in_path, "--in"));
      const auto report = compute(instance, algo, measure);
      write_output(out_path, to_json(report), out);
      if (print_checksum) err << "checksum " << checksum(report_values(report)) << '\n';
    } else if (*generate_cmd) {
      const Instance instance = profile_p > 0 ? generate_with_profile(n, d, profile_p, seed)
                                              : generate(parse_generator_kind(kind), n, d, seed);
      write_output(out_path, write_instance(instance), out);
    } else if (*bench_cmd) {
      run_bench(bench, out, err);
    } else if (*mm_cmd) {
      const auto a = read_matrix_csv(read_file(a_path, "--a"));
      const auto b = read_matrix_csv(read_file(b_path, "--b"));
      const auto result = product_via_dd(
          a, b, engine == "oracle" ? ReductionEngine::oracle : ReductionEngine::sdc);
      out << write_matrix_csv(result.product);
      err << "depth map: row_stride=" << result.map.row_stride
          << " col_stride=" << result.map.col_stride << " offset=" << result.map.offset << '\n';
      if (verify) {
        const double e = max_relative_error(result.product, direct_product(a, b));
        err << "max relative error: " << e << '\n';
        if (!(e <= 1e-6)) return kVerifyFailed;
      }
    }
  } catch (const SlabPreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kNotSlabs;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace ddist::cli
