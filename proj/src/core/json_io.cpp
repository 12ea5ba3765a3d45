#include "smoothlab/core/json_io.hpp"

#include <ostream>

#include "smoothlab/core/errors.hpp"

namespace smoothlab::json_io {

namespace {

template <typename T>
T get_as(const json& j, const char* field) {
  try {
    return require(j, field).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + field + "': " + e.what());
  }
}

SequencePtr sequence_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("field 'seq' must be an array");
  std::vector<Instance> items;
  items.reserve(j.size());
  for (const auto& e : j) items.push_back(instance_from_json(e));
  try {
    return make_sequence(std::move(items));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("field 'seq': ") + e.what());
  }
}

json sequence_to_json(const InstanceSequence& seq) {
  json arr = json::array();
  for (const auto& x : seq.items()) arr.push_back(to_json(x));
  return arr;
}

}  // namespace

const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) throw ConfigError(std::string("missing field '") + field + "'");
  return j.at(field);
}

json to_json(const Instance& x) {
  if (x.is_dyadic()) return json{{"dyadic", x.numerator()}};
  return json{{"grid", x.index()}, {"m", x.side()}};
}

Instance instance_from_json(const json& j) {
  try {
    if (j.contains("dyadic")) return Instance::dyadic(get_as<std::uint64_t>(j, "dyadic"));
    return Instance::grid(get_as<std::uint64_t>(j, "grid"), get_as<std::uint32_t>(j, "m"));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  }
}

json to_json(const Label& y) {
  switch (y.kind()) {
    case Label::Kind::Bit:
      return json{{"bit", y.bit_value() ? 1 : 0}};
    case Label::Kind::Nat:
      return json{{"nat", y.nat_value()}};
    case Label::Kind::Anchored:
      return json{{"seq", sequence_to_json(y.sequence())},
                  {"payload", y.is_star() ? std::string("*") : bits_to_string(y.prefix())}};
  }
  return {};
}

Label label_from_json(const json& j) {
  if (j.contains("bit")) {
    const int b = get_as<int>(j, "bit");
    if (b != 0 && b != 1) throw ConfigError("field 'bit' must be 0 or 1");
    return Label::bit(b == 1);
  }
  if (j.contains("nat")) return Label::nat(get_as<std::uint64_t>(j, "nat"));
  auto seq = sequence_from_json(require(j, "seq"));
  const auto payload = get_as<std::string>(j, "payload");
  if (payload == "*") return Label::anchored_star(std::move(seq));
  try {
    return Label::anchored(std::move(seq), bits_from_string(payload));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("field 'payload': ") + e.what());
  }
}

json to_json(const BaseMeasure& mu) {
  if (mu.is_unit()) return json{{"kind", "uniform_unit"}};
  return json{{"kind", "uniform_grid"}, {"m", mu.side()}};
}

BaseMeasure measure_from_json(const json& j) {
  const auto kind = get_as<std::string>(j, "kind");
  if (kind == "uniform_unit") return BaseMeasure::uniform_unit();
  if (kind == "uniform_grid") return BaseMeasure::uniform_grid(get_as<std::uint32_t>(j, "m"));
  throw ConfigError("field 'kind': unknown base measure '" + kind + "'");
}

json to_json(const SmoothDistribution& d) {
  json pieces = json::array();
  for (const auto& p : d.pieces()) pieces.push_back(json{{"first", p.first}, {"last", p.last}, {"mass", p.mass}});
  return json{{"domain", to_json(d.domain())}, {"pieces", pieces}};
}

SmoothDistribution distribution_from_json(const json& j) {
  const auto mu = measure_from_json(require(j, "domain"));
  std::vector<DensityPiece> pieces;
  for (const auto& p : require(j, "pieces")) {
    pieces.push_back({get_as<std::uint64_t>(p, "first"), get_as<std::uint64_t>(p, "last"), get_as<double>(p, "mass")});
  }
  try {
    return SmoothDistribution(mu, std::move(pieces));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("field 'pieces': ") + e.what());
  }
}

json to_json(const SmoothProcess& p) {
  json ds = json::array();
  for (const auto& d : p.distributions()) ds.push_back(to_json(d));
  return json{{"base", to_json(p.base())}, {"sigma", p.sigma()}, {"distributions", ds}};
}

SmoothProcess process_from_json(const json& j) {
  std::vector<SmoothDistribution> ds;
  for (const auto& d : require(j, "distributions")) ds.push_back(distribution_from_json(d));
  return SmoothProcess(measure_from_json(require(j, "base")), get_as<double>(j, "sigma"), std::move(ds));
}

json to_json(const LabeledStream& s) {
  json pairs = json::array();
  for (const auto& [x, y] : s.pairs) pairs.push_back(json{{"x", to_json(x)}, {"y", to_json(y)}});
  return json{{"T", s.horizon()}, {"pairs", pairs}};
}

LabeledStream stream_from_json(const json& j) {
  LabeledStream s;
  for (const auto& p : require(j, "pairs")) {
    s.pairs.push_back({instance_from_json(require(p, "x")), label_from_json(require(p, "y"))});
  }
  if (j.contains("T") && get_as<std::size_t>(j, "T") != s.horizon()) {
    throw ConfigError("field 'T' does not match the number of pairs");
  }
  return s;
}

json to_json(const RegretReport& r) {
  json j{{"seed", r.seed},
         {"T", r.horizon},
         {"learner_loss", r.learner_loss},
         {"per_round_losses", r.per_round_losses}};
  if (r.comparator_loss) {
    j["comparator_loss"] = *r.comparator_loss;
    j["regret"] = r.regret();
  } else {
    j["comparator_loss"] = nullptr;
    j["regret"] = nullptr;
  }
  return j;
}

RegretReport report_from_json(const json& j) {
  RegretReport r;
  r.seed = get_as<std::uint64_t>(j, "seed");
  r.horizon = get_as<std::size_t>(j, "T");
  r.learner_loss = get_as<std::int64_t>(j, "learner_loss");
  if (!require(j, "comparator_loss").is_null()) r.comparator_loss = get_as<std::int64_t>(j, "comparator_loss");
  r.per_round_losses = get_as<std::vector<std::uint8_t>>(j, "per_round_losses");
  return r;
}

json to_json(const classes::Hypothesis& h) {
  using namespace classes;
  json j{{"class", to_string(h.family())}};
  if (const auto* s = h.get_if<SeparationHypothesis>()) {
    j["seq"] = sequence_to_json(s->sequence());
    j["theta"] = bits_to_string(s->theta());
  } else if (const auto* ind = h.get_if<IndicatorHypothesis>()) {
    json support = json::array();
    if (ind->rational_support()) {
      for (const auto& q : ind->rationals()) support.push_back(json::array({q.num, q.den}));
      j["rational_support"] = support;
    } else {
      for (const auto& x : ind->instances()) support.push_back(to_json(x));
      j["support"] = support;
    }
  } else if (const auto* c = h.get_if<ConstantHypothesis>()) {
    j["value"] = c->value;
  } else if (const auto* t = h.get_if<ThresholdHypothesis>()) {
    j["cutoff"] = to_json(t->cutoff);
  }
  return j;
}

classes::Hypothesis hypothesis_from_json(const json& j) {
  using namespace classes;
  const auto family = get_as<std::string>(j, "class");
  try {
    if (family == "separation") {
      return SeparationHypothesis(sequence_from_json(require(j, "seq")),
                                  bits_from_string(get_as<std::string>(j, "theta")));
    }
    if (family == "indicator") {
      if (j.contains("rational_support")) {
        std::vector<Rational> qs;
        for (const auto& q : j.at("rational_support")) {
          qs.push_back(make_rational(q.at(0).get<std::int64_t>(), q.at(1).get<std::int64_t>()));
        }
        return IndicatorHypothesis::over_rationals(std::move(qs));
      }
      std::vector<Instance> xs;
      for (const auto& x : require(j, "support")) xs.push_back(instance_from_json(x));
      return IndicatorHypothesis::over_instances(std::move(xs));
    }
    if (family == "constant") return ConstantHypothesis{get_as<std::uint64_t>(j, "value")};
    if (family == "threshold") return ThresholdHypothesis{instance_from_json(require(j, "cutoff"))};
  } catch (const DomainError& e) {
    throw ConfigError("hypothesis '" + family + "': " + e.what());
  } catch (const json::exception& e) {
    throw ConfigError("hypothesis '" + family + "': " + e.what());
  }
  throw ConfigError("field 'class': unknown hypothesis family '" + family + "'");
}

void write_csv_header(std::ostream& out) { out << "seed,T,learner_loss,comparator_loss,regret\n"; }

void write_csv_row(std::ostream& out, const RegretReport& r) {
  out << r.seed << ',' << r.horizon << ',' << r.learner_loss << ',';
  if (r.comparator_loss) {
    out << *r.comparator_loss << ',' << r.regret();
  } else {
    out << ',';
  }
  out << '\n';
}

}  // namespace smoothlab::json_io
