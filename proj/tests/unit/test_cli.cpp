#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <string>

#include "motifsets/io.hpp"
#include "support/run.hpp"

namespace fs = std::filesystem;
using namespace motifsets;

namespace {

const std::string cli = MOTIFSETS_CLI_PATH;

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("generate writes a dataset and its ground truth") {
  const auto dir = run::scratch("cli_generate");
  CHECK(run::status(cli + " generate --shapes 1 --instances 3..5 --n 29 --seed 7 --out-dir " + quoted(dir)) == 0);
  CHECK(fs::exists(dir / "synth-s1-seed7.txt"));
  CHECK(fs::exists(dir / "synth-s1-seed7.truth.json"));
  const auto truth = read_ground_truth(dir / "synth-s1-seed7.truth.json");
  CHECK(truth.shape_length == 29);
  fs::remove_all(dir);
}

TEST_CASE("usage errors exit with 2") {
  const auto dir = run::scratch("cli_usage");
  CHECK(run::status(cli + " generate --n 0 --out-dir " + quoted(dir)) == 2);
  CHECK(run::status(cli + " generate --instances 5..3 --out-dir " + quoted(dir)) == 2);
  CHECK(run::status(cli + " frobnicate") == 2);
  CHECK(run::status(cli) == 2);
  write_text(dir / "s.txt", "1\n2\n3\n4\n5\n6\n7\n8\n");
  CHECK(run::status(cli + " discover " + quoted(dir / "s.txt") + " --algorithm scan-mk --n 2 --r -1") == 2);
  CHECK(run::status(cli + " discover " + quoted(dir / "s.txt") + " --algorithm k-means --n 2 --r 1") == 2);
  CHECK(run::status(cli + " discover " + quoted(dir / "s.txt") + " --algorithm scan-mk --n 20 --r 1") == 2);
  fs::remove_all(dir);
}

TEST_CASE("unreadable input exits with 3") {
  CHECK(run::status(cli + " discover /nonexistent/x.txt --algorithm set-finder --n 4 --r 0.5") == 3);
  CHECK(run::status(cli + " sweep --datasets /nonexistent --r 5") == 3);
}

TEST_CASE("discover is byte-identical across reruns without timing") {
  const auto dir = run::scratch("cli_discover");
  REQUIRE(run::status(cli + " generate --seed 3 --out-dir " + quoted(dir)) == 0);
  const auto data = dir / "synth-s1-seed3.txt";
  for (const std::string algorithm : {"scan-mk", "cluster-mk", "set-finder"}) {
    const std::string base = cli + " discover " + quoted(data) + " --algorithm " + algorithm + " --n 29 --r 12 --no-timing";
    REQUIRE(run::status(base + " --output " + quoted(dir / "a.json")) == 0);
    REQUIRE(run::status(base + " --output " + quoted(dir / "b.json")) == 0);
    CHECK(read_text(dir / "a.json") == read_text(dir / "b.json"));
    const auto report = parse_report(read_text(dir / "a.json"));
    CHECK(report.algorithm == algorithm);
    CHECK_FALSE(report.elapsed_ms.has_value());
  }
  REQUIRE(run::status(cli + " discover " + quoted(data) + " --algorithm set-finder --n 29 --r 12 --output " + quoted(dir / "t.json")) == 0);
  CHECK(parse_report(read_text(dir / "t.json")).elapsed_ms.has_value());
  fs::remove_all(dir);
}

TEST_CASE("sweep writes a summary and a comparison table") {
  const auto dir = run::scratch("cli_sweep");
  REQUIRE(run::status(cli + " sweep --generate 2 --r 5..25 --metric sensitivity --output " + quoted(dir / "s.csv")) == 0);
  const auto summary = read_text(dir / "s.csv");
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 64);
  CHECK(fs::exists(dir / "s.ttest.csv"));

  REQUIRE(run::status(cli + " sweep --generate 1 --r 10 --output " + quoted(dir / "m.csv")) == 0);
  CHECK(read_text(dir / "m.ttest.csv") == "algorithm_a,algorithm_b,r,metric,mean_a,mean_b,t,df,p_value,significant\n");

  REQUIRE(run::status(cli + " generate --shapes 2 --count 2 --seed 5 --out-dir " + quoted(dir / "two")) == 0);
  REQUIRE(run::status(cli + " sweep --datasets " + quoted(dir / "two") + " --r 5..18 --output " + quoted(dir / "t.csv")) == 0);
  const auto two = read_text(dir / "t.csv");
  CHECK(two.find("matching_score") != std::string::npos);
  CHECK(two.find("precision") == std::string::npos);
  CHECK(std::count(two.begin(), two.end(), '\n') == 1 + 3 * 14);

  CHECK(run::status(cli + " sweep --generate 1 --r 5 --window 5000 --output " + quoted(dir / "f.csv")) == 1);
  CHECK(read_text(dir / "f.csv").find("failed") != std::string::npos);
  CHECK(run::status(cli + " sweep --generate 1 --r 9..5") == 2);
  fs::remove_all(dir);
}

TEST_CASE("profile writes a series of whole days") {
  const auto dir = run::scratch("cli_profile");
  REQUIRE(run::status(cli + " profile --days 3 --output " + quoted(dir / "p.txt")) == 0);
  CHECK(read_series(dir / "p.txt").size() == 3 * 96);
  fs::remove_all(dir);
}
