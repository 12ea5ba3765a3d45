#pragma once

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/game.hpp"
#include "smoothlab/core/measure.hpp"

// JSON forms of the domain values. Dyadic numerators are written as plain
// unsigned 64-bit JSON integers. Every *_from_json throws ConfigError naming
// the offending field on malformed input.
namespace smoothlab::json_io {

using nlohmann::json;

json to_json(const Instance& x);
Instance instance_from_json(const json& j);

json to_json(const Label& y);
Label label_from_json(const json& j);

json to_json(const BaseMeasure& mu);
BaseMeasure measure_from_json(const json& j);

json to_json(const SmoothDistribution& d);
SmoothDistribution distribution_from_json(const json& j);

json to_json(const SmoothProcess& p);
SmoothProcess process_from_json(const json& j);

json to_json(const LabeledStream& s);
LabeledStream stream_from_json(const json& j);

json to_json(const RegretReport& r);
RegretReport report_from_json(const json& j);

json to_json(const classes::Hypothesis& h);
classes::Hypothesis hypothesis_from_json(const json& j);

// Flat record: seed,T,learner_loss,comparator_loss,regret.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RegretReport& r);

// Typed field access with field-named diagnostics.
const json& require(const json& j, const char* field);

}  // namespace smoothlab::json_io
