#include "smoothlab/harness/config.hpp"

#include <cmath>
#include <fstream>

#include "smoothlab/core/errors.hpp"
#include "smoothlab/core/json_io.hpp"

namespace smoothlab::harness {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* name, T fallback) {
  if (!j.contains(name)) return fallback;
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("field '") + name + "' has the wrong type");
  }
}

ExperimentKind parse_kind(const std::string& s) {
  if (s == "regret") return ExperimentKind::Regret;
  if (s == "pac_curve") return ExperimentKind::PacCurve;
  if (s == "sufficiency") return ExperimentKind::Sufficiency;
  if (s == "entropy_suite") return ExperimentKind::EntropySuite;
  if (s == "compression") return ExperimentKind::Compression;
  throw ConfigError("field 'kind': unknown experiment kind '" + s + "'");
}

void require_one_of(const std::string& value, std::initializer_list<const char*> allowed, const char* name) {
  for (const char* a : allowed) {
    if (value == a) return;
  }
  throw ConfigError(std::string("field '") + name + "': unknown value '" + value + "'");
}

void check_eps(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) throw ConfigError(std::string("field '") + name + "' must not be empty");
  for (double e : grid) {
    if (!(e > 0.0 && e <= 1.0)) throw ConfigError(std::string("field '") + name + "' values must lie in (0, 1]");
  }
}

void check_sigma(double s, const char* name) {
  if (!(s > 0.0 && s <= 1.0)) throw ConfigError(std::string("field '") + name + "' must lie in (0, 1]");
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Regret: return "regret";
    case ExperimentKind::PacCurve: return "pac_curve";
    case ExperimentKind::Sufficiency: return "sufficiency";
    case ExperimentKind::EntropySuite: return "entropy_suite";
    case ExperimentKind::Compression: return "compression";
  }
  return "unknown";
}

std::vector<double> Defaults::eps_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 8; ++k) g.push_back(std::ldexp(1.0, -k));
  return g;
}

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  c.kind = parse_kind(json_io::require(j, "kind").get<std::string>());
  c.seed = field<std::uint64_t>(j, "seed", c.seed);
  c.trials = field<std::size_t>(j, "trials", c.trials);
  if (c.trials == 0) throw ConfigError("field 'trials' must be at least 1");
  if (j.contains("T")) {
    const auto& t = j.at("T");
    c.horizons = t.is_array() ? field<std::vector<std::size_t>>(j, "T", {}) : std::vector{field<std::size_t>(j, "T", 0)};
    if (c.horizons.empty()) throw ConfigError("field 'T' must not be empty");
    for (auto h : c.horizons) {
      if (h == 0) throw ConfigError("field 'T' must be positive");
    }
  }
  c.sigma = field<double>(j, "sigma", c.sigma);
  check_sigma(c.sigma, "sigma");
  c.sigmas = field<std::vector<double>>(j, "sigmas", c.sigmas);
  if (c.sigmas.empty()) throw ConfigError("field 'sigmas' must not be empty");
  for (double s : c.sigmas) check_sigma(s, "sigmas");
  c.delta = field<double>(j, "delta", c.delta);
  if (!(c.delta > 0.0 && c.delta < 1.0)) throw ConfigError("field 'delta' must lie in (0, 1)");
  c.eps_grid = field<std::vector<double>>(j, "eps_grid", c.eps_grid);
  check_eps(c.eps_grid, "eps_grid");
  c.n_grid = field<std::vector<std::size_t>>(j, "n_grid", c.n_grid);
  if (c.n_grid.empty()) throw ConfigError("field 'n_grid' must not be empty");
  for (auto n : c.n_grid) {
    if (n == 0) throw ConfigError("field 'n_grid' values must be positive");
  }
  if (j.contains("domain")) {
    try {
      c.domain = json_io::measure_from_json(j.at("domain"));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("field 'domain': ") + e.what());
    }
  }

  if (j.contains("class")) {
    const auto& k = j.at("class");
    c.cls.family = field<std::string>(k, "family", c.cls.family);
    require_one_of(c.cls.family, {"separation", "thresholds", "constants", "indicators", "rational_indicators"},
                   "class.family");
    c.cls.side = field<std::uint32_t>(k, "side", c.cls.side);
    c.cls.count = field<std::size_t>(k, "count", c.cls.count);
    c.cls.experts = field<std::size_t>(k, "experts", c.cls.experts);
    c.cls.sequence_length = field<std::size_t>(k, "sequence_length", c.cls.sequence_length);
    if (c.cls.side == 0) throw ConfigError("field 'class.side' must be positive");
    if (c.cls.count == 0) throw ConfigError("field 'class.count' must be positive");
    if (c.cls.experts == 0) throw ConfigError("field 'class.experts' must be positive");
    if (c.cls.sequence_length == 0) throw ConfigError("field 'class.sequence_length' must be positive");
  }
  if (j.contains("adversary")) {
    const auto& a = j.at("adversary");
    c.adversary.kind = field<std::string>(a, "kind", c.adversary.kind);
    require_one_of(c.adversary.kind,
                   {"separation", "coinflip", "realizable", "random_labels", "alternating", "switching", "noisy"},
                   "adversary.kind");
    if (a.contains("process")) {
      try {
        c.adversary.process = adversaries::process_spec_from_json(a.at("process"));
      } catch (const ConfigError& e) {
        throw ConfigError(std::string("field 'adversary.process': ") + e.what());
      }
    }
    c.adversary.noise = field<double>(a, "noise", c.adversary.noise);
    if (!(c.adversary.noise >= 0.0 && c.adversary.noise <= 1.0)) {
      throw ConfigError("field 'adversary.noise' must lie in [0, 1]");
    }
  }
  if (j.contains("learner")) {
    const auto& l = j.at("learner");
    c.learner.kind = l.is_string() ? l.get<std::string>() : field<std::string>(l, "kind", c.learner.kind);
    require_one_of(c.learner.kind, {"prefix_guess", "random_guess", "cover_rewa", "memorize_constant"},
                   "learner.kind");
  }
  c.seeds_per_stream = field<std::size_t>(j, "seeds_per_stream", c.seeds_per_stream);
  if (c.seeds_per_stream == 0) throw ConfigError("field 'seeds_per_stream' must be at least 1");
  c.holdout = field<std::size_t>(j, "holdout", c.holdout);
  if (j.contains("complexity")) {
    const auto& k = j.at("complexity");
    c.complexity_n_grid = field<std::vector<std::size_t>>(k, "n_grid", c.complexity_n_grid);
    c.complexity_trials = field<std::size_t>(k, "trials", c.complexity_trials);
    if (c.complexity_n_grid.empty() || c.complexity_trials == 0) {
      throw ConfigError("field 'complexity' needs a nonempty n_grid and trials >= 1");
    }
  }
  c.lemma_instances = field<std::size_t>(j, "lemma_instances", c.lemma_instances);
  c.threads = field<std::size_t>(j, "threads", c.threads);
  c.dump_bundles = field<std::size_t>(j, "dump_bundles", c.dump_bundles);
  if (j.contains("thresholds")) {
    const auto& t = j.at("thresholds");
    c.thresholds.lower_fraction = field<double>(t, "lower_fraction", c.thresholds.lower_fraction);
    c.thresholds.grid_fraction = field<double>(t, "grid_fraction", c.thresholds.grid_fraction);
    c.thresholds.coinflip_low = field<double>(t, "coinflip_low", c.thresholds.coinflip_low);
    c.thresholds.coinflip_high = field<double>(t, "coinflip_high", c.thresholds.coinflip_high);
    c.thresholds.se_allowance = field<double>(t, "se_allowance", c.thresholds.se_allowance);
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["T"] = c.horizons;
  j["sigma"] = c.sigma;
  j["sigmas"] = c.sigmas;
  j["delta"] = c.delta;
  j["eps_grid"] = c.eps_grid;
  j["n_grid"] = c.n_grid;
  j["domain"] = json_io::to_json(c.domain);
  j["class"] = {{"family", c.cls.family},
                {"side", c.cls.side},
                {"count", c.cls.count},
                {"experts", c.cls.experts},
                {"sequence_length", c.cls.sequence_length}};
  j["adversary"] = {{"kind", c.adversary.kind},
                    {"process", adversaries::to_json(c.adversary.process)},
                    {"noise", c.adversary.noise}};
  j["learner"] = {{"kind", c.learner.kind}};
  j["seeds_per_stream"] = c.seeds_per_stream;
  j["holdout"] = c.holdout;
  j["complexity"] = {{"n_grid", c.complexity_n_grid}, {"trials", c.complexity_trials}};
  j["lemma_instances"] = c.lemma_instances;
  j["threads"] = c.threads;
  j["dump_bundles"] = c.dump_bundles;
  j["thresholds"] = {{"lower_fraction", c.thresholds.lower_fraction},
                     {"grid_fraction", c.thresholds.grid_fraction},
                     {"coinflip_low", c.thresholds.coinflip_low},
                     {"coinflip_high", c.thresholds.coinflip_high},
                     {"se_allowance", c.thresholds.se_allowance}};
  return j;
}

}  // namespace smoothlab::harness
