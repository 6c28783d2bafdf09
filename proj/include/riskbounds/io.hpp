#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "riskbounds/bandit.hpp"
#include "riskbounds/bounds.hpp"
#include "riskbounds/distribution.hpp"
#include "riskbounds/parallel.hpp"

namespace riskbounds {

/// One numeric value per line; blank lines are skipped. With header = true the
/// first nonblank line is ignored. Throws DataError on anything unparsable.
std::vector<double> read_samples_csv(std::istream& in, bool header = false);
std::vector<double> read_samples_csv_file(const std::string& path, bool header = false);

/// {"bounds":{"a":...,"b":...},"atoms":[{"x":...,"p":...},...]}
std::string distribution_to_json(const DiscreteDistribution& d);
DiscreteDistribution distribution_from_json(const std::string& text);

/// {"method","distance","radius","point","lcb","ucb"} plus an "extras" object.
std::string result_to_json(const ConfidenceResult& r, const std::string& risk_label);

/// Instance file:
///   {"bounds":{"a":0,"b":1},"risk":"cvar:0.25","horizon":10000,"seed":1,
///    "arms":[{"family":"truncnormal","params":{"mu":0.3,"sigma":0.1}}, ...]}
/// Families and params: dirac{x}, uniform{lo,hi}, beta{A,B}, truncnormal{mu,sigma},
/// discrete{atoms:[{x,p},...]}. bounds may also be a two-element array.
BanditInstance parse_instance(const std::string& text);
BanditInstance load_instance_file(const std::string& path);

/// round,arm,loss,cum_regret with 1-based rounds and 0-based arms.
void write_trace_csv(std::ostream& out, const RegretTrace& trace);

/// n,seed,method,lcb,ucb,raw_lcb,raw_ucb,point,true_risk,covered
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace riskbounds
