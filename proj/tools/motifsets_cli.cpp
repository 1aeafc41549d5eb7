// motifsets command-line tool. Subcommands write benchmark data, report motif
// sets found in a file, and sweep the algorithms over a radius grid.
//
// Exit codes: 0 success, 1 runtime failure (generation, failed sweep cells),
// 2 usage error, 3 I/O error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "motifsets/discovery.hpp"
#include "motifsets/io.hpp"
#include "motifsets/sweep.hpp"
#include "motifsets/synth.hpp"

namespace fs = std::filesystem;
using namespace motifsets;

namespace {

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;
constexpr int kIoError = 3;

struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// "3..5" or "4"
IndexRange parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidParameter("cannot parse range '" + text + "'");
  }
}

// "5..25" (unit step), "5..25:0.5", or "5,10,15"
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const auto colon = text.find(':', dots);
      const double lo = std::stod(text.substr(0, dots));
      const double hi = std::stod(text.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
      const double step = colon == std::string::npos ? 1.0 : std::stod(text.substr(colon + 1));
      if (!(step > 0.0) || hi < lo) throw InvalidParameter("empty radius grid '" + text + "'");
      for (std::size_t k = 0;; ++k) {
        const double r = lo + step * static_cast<double>(k);
        if (r > hi + 1e-9 * step) break;
        out.push_back(r);
      }
    } else {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        out.push_back(std::stod(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
  } catch (const InvalidParameter&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidParameter("cannot parse radius grid '" + text + "'");
  }
  for (const double r : out) {
    if (!(r > 0.0)) throw InvalidParameter("radii must be positive");
  }
  return out;
}

std::string dataset_id(std::size_t shapes, std::uint64_t seed) {
  return "synth-s" + std::to_string(shapes) + "-seed" + std::to_string(seed);
}

struct SynthOptions {
  std::size_t shapes = 1;
  std::string instances = "3..5";
  std::string length = "500..1000";
  std::size_t n = 29;
  double amplitude = 10.0;
  std::uint64_t seed = 0;

  SynthConfig config(std::uint64_t dataset_seed) const {
    SynthConfig c;
    const auto lengths = parse_range(length);
    const auto counts = parse_range(instances);
    c.min_length = lengths.lo;
    c.max_length = lengths.hi;
    c.shape_count = shapes;
    c.min_instances = counts.lo;
    c.max_instances = counts.hi;
    c.shape_length = n;
    c.amplitude = amplitude;
    c.seed = dataset_seed;
    c.validate();
    return c;
  }
};

void add_synth_options(CLI::App& cmd, SynthOptions& opts) {
  cmd.add_option("--shapes", opts.shapes, "Number of shape classes (1 or 2)");
  cmd.add_option("--instances", opts.instances, "Instances per shape, e.g. 3..5");
  cmd.add_option("--length", opts.length, "Series length range, e.g. 500..1000");
  cmd.add_option("--n", opts.n, "Shape length");
  cmd.add_option("--amplitude", opts.amplitude, "Shape amplitude");
  cmd.add_option("--seed", opts.seed, "Seed (first seed when generating several)");
}

std::vector<SyntheticDataset> load_collection(const fs::path& dir) {
  std::vector<fs::path> truths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.size() > 11 && name.ends_with(".truth.json")) truths.push_back(entry.path());
  }
  std::sort(truths.begin(), truths.end());
  std::vector<SyntheticDataset> out;
  for (const auto& truth_path : truths) {
    auto name = truth_path.filename().string();
    name.resize(name.size() - 11);
    out.push_back({read_series(dir / (name + ".txt")), read_ground_truth(truth_path)});
  }
  if (out.empty()) throw IoError("no '*.truth.json' datasets in '" + dir.string() + "'");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact discovery of time-series motif sets"};
  app.require_subcommand(1);

  // generate
  SynthOptions gen;
  std::size_t gen_count = 1;
  std::string gen_dir = ".";
  auto* generate_cmd = app.add_subcommand("generate", "Write planted-shape datasets and ground-truth sidecars");
  add_synth_options(*generate_cmd, gen);
  generate_cmd->add_option("--count", gen_count, "Number of datasets (seeds seed, seed+1, ...)");
  generate_cmd->add_option("--out-dir", gen_dir, "Output directory");

  // discover
  std::string dataset_path;
  std::string algorithm_name;
  DiscoveryParams params;
  std::string report_path;
  bool no_timing = false;
  auto* discover_cmd = app.add_subcommand("discover", "Find motif sets in a dataset file");
  discover_cmd->add_option("dataset", dataset_path, "Dataset file (one value per line, or one CSV row)")->required();
  discover_cmd->add_option("--algorithm", algorithm_name, "scan-mk | cluster-mk | set-finder")->required();
  discover_cmd->add_option("--n", params.window, "Window width")->required();
  discover_cmd->add_option("--r", params.radius, "Radius")->required();
  discover_cmd->add_option("--q", params.references, "Reference windows for the pair finder");
  discover_cmd->add_option("--seed", params.seed, "Seed for reference selection");
  discover_cmd->add_option("--output", report_path, "Report file (default: stdout)");
  discover_cmd->add_flag("--no-timing", no_timing, "Omit elapsed_ms so reruns are byte-identical");

  // sweep
  std::string sweep_dir;
  std::size_t sweep_generate = 0;
  SynthOptions sweep_synth;
  std::string sweep_algorithms = "scan-mk,cluster-mk,set-finder";
  std::string sweep_grid;
  std::vector<std::string> sweep_metrics;
  SweepConfig sweep_config;
  std::string sweep_output;
  std::string ttest_output;
  auto* sweep_cmd = app.add_subcommand("sweep", "Score algorithms over a radius grid on a dataset collection");
  auto* dir_opt = sweep_cmd->add_option("--datasets", sweep_dir, "Directory of generated datasets");
  auto* gen_opt = sweep_cmd->add_option("--generate", sweep_generate, "Generate this many datasets instead");
  dir_opt->excludes(gen_opt);
  add_synth_options(*sweep_cmd, sweep_synth);
  sweep_cmd->add_option("--algorithms", sweep_algorithms, "Comma-separated algorithm list");
  sweep_cmd->add_option("--r", sweep_grid, "Radius grid: 5..25, 5..25:0.5 or 5,10,15")->required();
  sweep_cmd->add_option("--metric", sweep_metrics, "sensitivity | precision | matching_score (repeatable)");
  sweep_cmd->add_option("--window", sweep_config.window, "Window width (default: shape length of the data)");
  sweep_cmd->add_option("--q", sweep_config.references, "Reference windows for the pair finder");
  sweep_cmd->add_option("--threads", sweep_config.threads, "Worker threads");
  sweep_cmd->add_option("--output", sweep_output, "Summary CSV (default: stdout)");
  sweep_cmd->add_option("--ttest-output", ttest_output, "Pairwise t-test CSV (default: <output>.ttest.csv)");

  // profile
  std::size_t profile_days = 28;
  std::uint64_t profile_seed = 1;
  std::string profile_path;
  auto* profile_cmd = app.add_subcommand("profile", "Write a household electricity-style usage profile");
  profile_cmd->add_option("--days", profile_days, "Days of 15-minute readings");
  profile_cmd->add_option("--seed", profile_seed, "Seed");
  profile_cmd->add_option("--output", profile_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*generate_cmd) {
      fs::create_directories(gen_dir);
      for (std::size_t k = 0; k < gen_count; ++k) {
        const auto seed = gen.seed + k;
        const auto data = generate(gen.config(seed));
        const auto id = dataset_id(gen.shapes, seed);
        write_series(fs::path(gen_dir) / (id + ".txt"), data.series);
        write_ground_truth(fs::path(gen_dir) / (id + ".truth.json"), data.truth);
        std::cout << id << '\n';
      }
      return 0;
    }

    if (*discover_cmd) {
      const Algorithm algorithm = algorithm_from_string(algorithm_name);
      params.validate();
      const auto series = read_series(dataset_path);
      const auto started = std::chrono::steady_clock::now();
      DiscoveryReport report{std::string(to_string(algorithm)), params, discover(algorithm, series, params), {}};
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - started;
      if (!no_timing) report.elapsed_ms = elapsed.count();
      const auto text = format_report(report);
      if (report_path.empty()) {
        std::cout << text;
      } else {
        write_text(report_path, text);
      }
      return 0;
    }

    if (*sweep_cmd) {
      std::vector<SyntheticDataset> datasets;
      if (!sweep_dir.empty()) {
        datasets = load_collection(sweep_dir);
      } else if (sweep_generate > 0) {
        for (std::size_t k = 0; k < sweep_generate; ++k) {
          datasets.push_back(generate(sweep_synth.config(sweep_synth.seed + k)));
        }
      } else {
        throw InvalidParameter("sweep needs --datasets DIR or --generate COUNT");
      }
      sweep_config.algorithms.clear();
      std::size_t pos = 0;
      while (pos <= sweep_algorithms.size()) {
        const auto comma = sweep_algorithms.find(',', pos);
        sweep_config.algorithms.push_back(algorithm_from_string(
            sweep_algorithms.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      sweep_config.radii = parse_grid(sweep_grid);
      for (const auto& m : sweep_metrics) sweep_config.metrics.push_back(sweep_metric_from_string(m));
      if (sweep_cmd->count("--window") == 0) sweep_config.window = datasets.front().truth.shape_length;
      sweep_config.seed = sweep_synth.seed;

      const auto result = run_sweep(datasets, sweep_config);
      const auto summary = sweep_csv(result);
      const auto tests = comparisons_csv(result);
      if (sweep_output.empty()) {
        std::cout << summary;
      } else {
        write_text(sweep_output, summary);
        if (ttest_output.empty()) {
          ttest_output = (fs::path(sweep_output).parent_path() / fs::path(sweep_output).stem()).string() + ".ttest.csv";
        }
      }
      if (!ttest_output.empty()) write_text(ttest_output, tests);
      const bool failed = std::any_of(result.rows.begin(), result.rows.end(), [](const SweepRow& r) { return r.failed; });
      if (failed) {
        std::cerr << "motifsets: some sweep cells failed\n";
        return kRuntimeError;
      }
      return 0;
    }

    if (*profile_cmd) {
      write_series(profile_path, household_profile(profile_days, profile_seed));
      return 0;
    }
  } catch (const InvalidParameter& e) {
    std::cerr << "motifsets: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    std::cerr << "motifsets: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "motifsets: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "motifsets: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
