#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace smoothlab::harness {

struct Stats {
  std::size_t count = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(count)
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
};

Stats summarize(std::span<const double> values);

// A pass/fail check computed from recorded data only.
struct Flag {
  std::string tag;    // short name of the claim being checked
  std::string claim;  // the inequality, in words
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<=", ">=", "==", "in"
  bool passed = false;
  std::string detail;
};

Flag at_least(std::string tag, std::string claim, double value, double threshold, std::string detail = {});
Flag at_most(std::string tag, std::string claim, double value, double threshold, std::string detail = {});

// (x, y, band) rows for one figure.
struct PlotSeries {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<double> x, y, band;
};

struct ExperimentReport {
  std::string kind;
  nlohmann::json config;
  std::vector<nlohmann::json> records;  // flat per-trial rows
  nlohmann::json results = nlohmann::json::object();
  std::vector<Flag> flags;
  std::vector<PlotSeries> plots;
  double seconds = 0.0;

  bool all_passed() const;
};

nlohmann::json to_json(const Flag& flag);
nlohmann::json to_json(const ExperimentReport& report);

// report.json, summary.csv (one row per record), regret.csv for records with
// regret columns, plotdata/<series>.csv.
void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir);

// Records as CSV over the union of keys: `leading` keys first (when
// present), then the rest alphabetically.
std::string records_csv(const std::vector<nlohmann::json>& records, const std::vector<std::string>& leading = {});

}  // namespace smoothlab::harness
