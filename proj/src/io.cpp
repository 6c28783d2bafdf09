#include "riskbounds/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "riskbounds/catalog.hpp"
#include "riskbounds/error.hpp"

namespace riskbounds {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const std::size_t first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const std::size_t last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_value(const std::string& tok, std::size_t line) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw DataError("line " + std::to_string(line) + ": '" + tok + "' is not a finite number");
  }
  return v;
}

SupportBounds bounds_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw DataError("bounds array must have two entries");
    return SupportBounds(j[0].get<double>(), j[1].get<double>());
  }
  return SupportBounds(j.at("a").get<double>(), j.at("b").get<double>());
}

std::vector<Atom> atoms_from_json(const json& j) {
  std::vector<Atom> atoms;
  for (const json& a : j) atoms.push_back({a.at("x").get<double>(), a.at("p").get<double>()});
  return atoms;
}

ArmSpec arm_from_json(const json& j, const SupportBounds& bounds) {
  const std::string family = j.at("family").get<std::string>();
  const json& p = j.contains("params") ? j.at("params") : json::object();
  if (family == "dirac") return ArmSpec(DiracArm{p.at("x").get<double>()}, bounds);
  if (family == "uniform") return ArmSpec(UniformArm{p.at("lo").get<double>(), p.at("hi").get<double>()}, bounds);
  if (family == "beta") return ArmSpec(BetaArm{p.at("A").get<double>(), p.at("B").get<double>()}, bounds);
  if (family == "truncnormal") {
    return ArmSpec(TruncNormalArm{p.at("mu").get<double>(), p.at("sigma").get<double>()}, bounds);
  }
  if (family == "discrete") return ArmSpec(DiscreteArm{DiscreteDistribution(atoms_from_json(p.at("atoms")), bounds)}, bounds);
  throw DataError("unknown arm family '" + family + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::vector<double> read_samples_csv(std::istream& in, bool header) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  bool skip = header;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string tok = trim(line);
    if (tok.empty()) continue;
    if (skip) {
      skip = false;
      continue;
    }
    out.push_back(parse_value(tok, lineno));
  }
  return out;
}

std::vector<double> read_samples_csv_file(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open sample file '" + path + "'");
  return read_samples_csv(in, header);
}

std::string distribution_to_json(const DiscreteDistribution& d) {
  json j;
  j["bounds"] = {{"a", d.bounds().a()}, {"b", d.bounds().b()}};
  j["atoms"] = json::array();
  for (const Atom& a : d.atoms()) j["atoms"].push_back({{"x", a.x}, {"p", a.p}});
  return j.dump();
}

DiscreteDistribution distribution_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    return DiscreteDistribution(atoms_from_json(j.at("atoms")), bounds_from_json(j.at("bounds")));
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed distribution JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("invalid distribution: ") + e.what());
  }
}

std::string result_to_json(const ConfidenceResult& r, const std::string& risk_label) {
  json j;
  j["method"] = std::string(to_string(r.method));
  j["distance"] = std::string(to_string(r.distance));
  j["risk"] = risk_label;
  j["radius"] = r.radius_used;
  j["point"] = r.point_estimate;
  j["lcb"] = r.lcb;
  j["ucb"] = r.ucb;
  json extras;
  extras["raw_lcb"] = r.raw_lcb;
  extras["raw_ucb"] = r.raw_ucb;
  if (r.lipschitz) extras["lipschitz"] = *r.lipschitz;
  if (r.lower_extreme) extras["lower_extreme"] = json::parse(distribution_to_json(*r.lower_extreme));
  if (r.upper_extreme) extras["upper_extreme"] = json::parse(distribution_to_json(*r.upper_extreme));
  j["extras"] = extras;
  return j.dump();
}

BanditInstance parse_instance(const std::string& text) {
  try {
    const json j = json::parse(text);
    const SupportBounds bounds = bounds_from_json(j.at("bounds"));
    std::vector<ArmSpec> arms;
    for (const json& a : j.at("arms")) arms.push_back(arm_from_json(a, bounds));
    const RiskMeasure rm = parse_risk(j.at("risk").get<std::string>(), bounds);
    const auto horizon = j.at("horizon").get<std::size_t>();
    const auto seed = j.value("seed", std::uint64_t{0});
    return BanditInstance(bounds, std::move(arms), horizon, rm, seed);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed instance JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("invalid instance: ") + e.what());
  }
}

BanditInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void write_trace_csv(std::ostream& out, const RegretTrace& trace) {
  out << "round,arm,loss,cum_regret\n";
  for (std::size_t t = 0; t < trace.chosen.size(); ++t) {
    out << t + 1 << ',' << trace.chosen[t] << ',' << format_double(trace.loss[t]) << ','
        << format_double(trace.cumulative_regret[t]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n,seed,method,lcb,ucb,raw_lcb,raw_ucb,point,true_risk,covered\n";
  for (const SweepRow& r : rows) {
    out << r.n << ',' << r.seed << ',' << to_string(r.method) << ',' << format_double(r.lcb) << ','
        << format_double(r.ucb) << ',' << format_double(r.raw_lcb) << ',' << format_double(r.raw_ucb) << ','
        << format_double(r.point) << ',' << format_double(r.truth) << ',' << (r.covered ? 1 : 0) << '\n';
  }
}

}  // namespace riskbounds
