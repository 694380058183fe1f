#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "scenetemp/baseline.hpp"
#include "scenetemp/curves.hpp"
#include "scenetemp/mtm.hpp"
#include "scenetemp/stm.hpp"

namespace scenetemp {

// Model files are JSON documents with full double precision. Readers throw
// SchemaMismatch on parse failures or missing/mistyped keys; `origin` names
// the input in error messages.

void write_lm_json(std::ostream& out, const LinearModel& model);
LinearModel read_lm_json(std::istream& in, const std::string& origin);

void write_mtm_json(std::ostream& out, const MtmModel& model);
MtmModel read_mtm_json(std::istream& in, const std::string& origin);

// The STM document carries the measurement-day date alongside the ratio
// list so a loaded model can align offsets to prediction dates; readers
// accept documents without it (the ratios then anchor wherever the caller
// says).
void write_stm_json(std::ostream& out, const StmModel& model);
StmModel read_stm_json(std::istream& in, const std::string& origin);

// Curve CSV: header "date,a0,a1,a2", one row per day. Malformed rows are
// collected and reported together, as in `ingest`.
void write_curves_csv(std::ostream& out, const std::vector<DailyCurve>& curves);
std::vector<DailyCurve> read_curves_csv(std::istream& in,
                                        const std::string& origin);

// Flat "key = value" config text: blank lines and full-line # comments are
// skipped, keys may not repeat. Throws BadConfig with the offending line
// number.
std::map<std::string, std::string> parse_config(std::istream& in,
                                                const std::string& origin);

}  // namespace scenetemp
