#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smoothlab/core/errors.hpp"
#include "smoothlab/harness/config.hpp"
#include "smoothlab/harness/experiments.hpp"
#include "smoothlab/harness/report.hpp"

namespace fs = std::filesystem;
using namespace smoothlab;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFlagFailed = 1;
constexpr int kConfigError = 2;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> threads;
  std::optional<std::size_t> dump_bundles;
  std::string out = "out";
  std::string bundle;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

harness::ExperimentConfig resolve(const Options& o, const std::string& kind, bool config_required) {
  json j = json::object();
  if (!o.config.empty()) {
    j = read_json(o.config);
  } else if (config_required) {
    throw ConfigError("--config is required for this subcommand");
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (!j.contains("kind")) j["kind"] = kind;
  if (j.at("kind") != kind) {
    throw ConfigError("field 'kind': config is '" + j.at("kind").dump() + "' but the subcommand runs '" + kind + "'");
  }
  if (o.seed) j["seed"] = *o.seed;
  if (o.trials) j["trials"] = *o.trials;
  if (o.threads) j["threads"] = *o.threads;
  if (o.dump_bundles) j["dump_bundles"] = *o.dump_bundles;
  return harness::parse_config(j);
}

void print_flags(const harness::ExperimentReport& r) {
  for (const auto& f : r.flags) {
    std::cout << (f.passed ? "PASS " : "FAIL ") << f.tag << ": " << f.value << " " << f.relation << " " << f.threshold;
    if (!f.detail.empty()) std::cout << " [" << f.detail << "]";
    std::cout << "\n";
  }
  std::cout << (r.all_passed() ? "all flags passed" : "some flags failed") << " (" << r.seconds << " s)\n";
}

int run(const Options& o, const std::string& kind, bool config_required) {
  const auto config = resolve(o, kind, config_required);
  std::vector<harness::TrialBundle> bundles;
  const auto report = harness::run_experiment(config, &bundles);
  const fs::path out(o.out);
  harness::write_report(report, out);
  if (!bundles.empty()) {
    fs::create_directories(out / "bundles");
    for (const auto& b : bundles) {
      std::ofstream f(out / "bundles" / ("trial_T" + std::to_string(b.horizon) + "_" + std::to_string(b.trial) + ".json"));
      f << harness::to_json(b).dump() << "\n";
    }
  }
  print_flags(report);
  std::cout << "wrote " << (out / "report.json").string() << "\n";
  return report.all_passed() ? kPass : kFlagFailed;
}

int replay(const Options& o) {
  if (o.bundle.empty()) throw ConfigError("replay needs a bundle file");
  const auto b = harness::trial_bundle_from_json(read_json(o.bundle));
  const auto r = harness::replay(b);
  if (r.identical) {
    std::cout << "replay identical: learner loss " << r.replayed.learner_loss << ", regret " << r.replayed.regret()
              << "\n";
    return kPass;
  }
  std::cout << "replay differs: " << r.difference << "\n";
  return kFlagFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothed online classification experiments"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Experiment config (JSON)");
    sub->add_option("--seed", o.seed, "Base seed override");
    sub->add_option("--trials", o.trials, "Trial count override");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    sub->add_option("--out", o.out, "Output directory")->capture_default_str();
  };
  auto* regret = app.add_subcommand("run-regret", "Regret experiment");
  add_common(regret);
  regret->add_option("--dump-bundles", o.dump_bundles, "Serialize the first N trials for replay");
  auto* pac = app.add_subcommand("run-pac-curve", "PAC learning curve of the compression learner");
  add_common(pac);
  auto* suff = app.add_subcommand("run-sufficiency", "Cover learner against the regret upper bound");
  add_common(suff);
  auto* comp = app.add_subcommand("verify-compression", "Round-trip random realizable samples");
  add_common(comp);
  auto* entropy = app.add_subcommand("entropy-suite", "Brute-force metric-entropy checks");
  add_common(entropy);
  auto* rep = app.add_subcommand("replay", "Replay a serialized trial bundle");
  rep->add_option("bundle,--bundle", o.bundle, "Bundle file written by run-regret")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*regret) return run(o, "regret", true);
    if (*pac) return run(o, "pac_curve", true);
    if (*suff) return run(o, "sufficiency", true);
    if (*comp) return run(o, "compression", false);
    if (*entropy) return run(o, "entropy_suite", false);
    if (*rep) return replay(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed config: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}
