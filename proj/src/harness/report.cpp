#include "smoothlab/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "smoothlab/core/errors.hpp"

namespace smoothlab::harness {

Stats summarize(std::span<const double> values) {
  Stats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  if (s.count > 1) s.std_error = std::sqrt(ss / static_cast<double>(s.count - 1) / static_cast<double>(s.count));
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t mid = s.count / 2;
  s.median = s.count % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return s;
}

Flag at_least(std::string tag, std::string claim, double value, double threshold, std::string detail) {
  return {std::move(tag), std::move(claim), value, threshold, ">=", value >= threshold, std::move(detail)};
}

Flag at_most(std::string tag, std::string claim, double value, double threshold, std::string detail) {
  return {std::move(tag), std::move(claim), value, threshold, "<=", value <= threshold, std::move(detail)};
}

bool ExperimentReport::all_passed() const {
  return std::all_of(flags.begin(), flags.end(), [](const Flag& f) { return f.passed; });
}

nlohmann::json to_json(const Flag& f) {
  return {{"tag", f.tag},   {"claim", f.claim},     {"value", f.value}, {"threshold", f.threshold},
          {"relation", f.relation}, {"passed", f.passed}, {"detail", f.detail}};
}

nlohmann::json to_json(const ExperimentReport& r) {
  nlohmann::json flags = nlohmann::json::array();
  for (const auto& f : r.flags) flags.push_back(to_json(f));
  nlohmann::json plots = nlohmann::json::array();
  for (const auto& p : r.plots) plots.push_back(p.name);
  return {{"kind", r.kind},         {"config", r.config},   {"results", r.results},
          {"flags", flags},         {"all_passed", r.all_passed()}, {"records", r.records},
          {"plots", plots},         {"seconds", r.seconds}};
}

namespace {

std::string cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw ConfigError("cannot write '" + p.string() + "'");
  out << text;
}

}  // namespace

std::string records_csv(const std::vector<nlohmann::json>& records, const std::vector<std::string>& leading) {
  std::vector<std::string> keys;
  for (const auto& k : leading) {
    for (const auto& r : records) {
      if (r.contains(k)) {
        keys.push_back(k);
        break;
      }
    }
  }
  for (const auto& r : records) {
    for (const auto& [k, v] : r.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "") << (r.contains(keys[i]) ? cell(r.at(keys[i])) : "");
    }
    os << "\n";
  }
  return os.str();
}

void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir / "plotdata");
  write_file(out_dir / "report.json", to_json(report).dump(2) + "\n");
  write_file(out_dir / "summary.csv",
             records_csv(report.records, {"check", "T", "sigma", "n", "trial", "seed", "learner_loss", "comparator_loss",
                                          "regret", "error", "bound"}));

  std::vector<nlohmann::json> regret_rows;
  for (const auto& r : report.records) {
    if (!r.contains("regret")) continue;
    regret_rows.push_back({{"seed", r.value("seed", nlohmann::json())},
                           {"T", r.value("T", nlohmann::json())},
                           {"learner_loss", r.value("learner_loss", nlohmann::json())},
                           {"comparator_loss", r.value("comparator_loss", nlohmann::json())},
                           {"regret", r.at("regret")}});
  }
  if (!regret_rows.empty()) write_file(out_dir / "regret.csv", records_csv(regret_rows, {"seed", "T", "learner_loss", "comparator_loss", "regret"}));

  for (const auto& p : report.plots) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y,band\n";
    for (std::size_t i = 0; i < p.x.size(); ++i) os << p.x[i] << "," << p.y[i] << "," << p.band[i] << "\n";
    write_file(out_dir / "plotdata" / (p.name + ".csv"), os.str());
  }
}

}  // namespace smoothlab::harness
