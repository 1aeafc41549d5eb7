#include "motifsets/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace motifsets {

namespace {

using nlohmann::json;

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string(what) + ": " + e.what());
  }
}

std::vector<std::size_t> to_one_based(const std::vector<std::size_t>& starts) {
  std::vector<std::size_t> out(starts);
  for (auto& s : out) ++s;
  return out;
}

std::vector<std::size_t> from_one_based(const json& array, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& item : array) {
    const auto value = item.get<long long>();
    if (value < 1) throw IoError(std::string(what) + ": indexes are 1-based");
    out.push_back(static_cast<std::size_t>(value - 1));
  }
  return out;
}

}  // namespace

TimeSeries parse_series(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto token_end = text.find_first_of(",\n\r\t ", pos);
    const auto token = text.substr(pos, token_end == std::string_view::npos ? std::string_view::npos : token_end - pos);
    if (!token.empty()) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw IoError("dataset: cannot parse value '" + std::string(token) + "'");
      }
      values.push_back(value);
    }
    if (token_end == std::string_view::npos) break;
    pos = token_end + 1;
  }
  if (values.empty()) throw IoError("dataset: no values");
  try {
    return TimeSeries(std::move(values));
  } catch (const InvalidParameter& e) {
    throw IoError(std::string("dataset: ") + e.what());
  }
}

std::string format_series(const TimeSeries& series) {
  std::string out;
  for (const double v : series.values()) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

TimeSeries read_series(const std::filesystem::path& path) { return parse_series(read_text(path)); }

void write_series(const std::filesystem::path& path, const TimeSeries& series) {
  write_text(path, format_series(series));
}

std::string format_ground_truth(const GroundTruth& truth) {
  json shapes = json::array();
  for (const auto& shape : truth.shapes) {
    shapes.push_back({{"kind", std::string(to_string(shape.kind))}, {"starts", to_one_based(shape.starts)}});
  }
  return json{{"n", truth.shape_length}, {"shapes", shapes}}.dump(2) + "\n";
}

GroundTruth parse_ground_truth(std::string_view text) {
  const auto doc = parse_json(text, "ground truth");
  try {
    GroundTruth truth;
    truth.shape_length = doc.at("n").get<std::size_t>();
    for (const auto& shape : doc.at("shapes")) {
      truth.shapes.push_back({shape_kind_from_string(shape.at("kind").get<std::string>()),
                              from_one_based(shape.at("starts"), "ground truth")});
    }
    return truth;
  } catch (const json::exception& e) {
    throw IoError(std::string("ground truth: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw IoError(std::string("ground truth: ") + e.what());
  }
}

GroundTruth read_ground_truth(const std::filesystem::path& path) { return parse_ground_truth(read_text(path)); }

void write_ground_truth(const std::filesystem::path& path, const GroundTruth& truth) {
  write_text(path, format_ground_truth(truth));
}

std::string format_report(const DiscoveryReport& report) {
  json sets = json::array();
  for (const auto& set : report.sets) {
    json entry{{"members", to_one_based(set.members)},
               {"representative", set.representative},
               {"cardinality", set.cardinality()}};
    if (set.pair_distance) entry["pair_distance"] = *set.pair_distance;
    sets.push_back(std::move(entry));
  }
  json doc{{"algorithm", report.algorithm},
           {"params",
            {{"n", report.params.window},
             {"r", report.params.radius},
             {"q", report.params.references},
             {"seed", report.params.seed}}},
           {"sets", sets}};
  if (report.elapsed_ms) doc["elapsed_ms"] = *report.elapsed_ms;
  return doc.dump(2) + "\n";
}

DiscoveryReport parse_report(std::string_view text) {
  const auto doc = parse_json(text, "report");
  try {
    DiscoveryReport report;
    report.algorithm = doc.at("algorithm").get<std::string>();
    const auto& params = doc.at("params");
    report.params.window = params.at("n").get<std::size_t>();
    report.params.radius = params.at("r").get<double>();
    report.params.references = params.at("q").get<std::size_t>();
    report.params.seed = params.at("seed").get<std::uint64_t>();
    for (const auto& entry : doc.at("sets")) {
      MotifSet set;
      set.members = from_one_based(entry.at("members"), "report");
      set.representative = entry.at("representative").get<std::vector<double>>();
      if (entry.contains("pair_distance")) set.pair_distance = entry.at("pair_distance").get<double>();
      if (entry.at("cardinality").get<std::size_t>() != set.members.size()) {
        throw IoError("report: cardinality does not match member count");
      }
      report.sets.push_back(std::move(set));
    }
    if (doc.contains("elapsed_ms")) report.elapsed_ms = doc.at("elapsed_ms").get<double>();
    return report;
  } catch (const json::exception& e) {
    throw IoError(std::string("report: ") + e.what());
  }
}

}  // namespace motifsets
