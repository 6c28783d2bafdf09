#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "riskbounds/arms.hpp"
#include "riskbounds/bandit.hpp"
#include "riskbounds/bounds.hpp"
#include "riskbounds/catalog.hpp"
#include "riskbounds/concentration.hpp"
#include "riskbounds/error.hpp"
#include "riskbounds/io.hpp"
#include "riskbounds/parallel.hpp"

namespace rb = riskbounds;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;
constexpr int kData = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

rb::SupportBounds parse_bounds(const std::string& s) {
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--bounds expects a,b");
  try {
    return rb::SupportBounds(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--bounds: ") + e.what());
  }
}

std::vector<rb::BoundMethod> parse_methods(const std::string& s) {
  if (s == "all") return {rb::BoundMethod::Dist, rb::BoundMethod::LLC, rb::BoundMethod::GLC};
  return {rb::parse_method(s)};
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const double v = std::stod(tok);
    if (!(v >= 1.0) || v != std::floor(v)) throw UsageError("sample sizes must be positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw UsageError("sample sizes must be increasing");
  }
  if (out.empty()) throw UsageError("--ns is empty");
  return out;
}

rb::RadiusRule rule_for(const std::string& flag, rb::Distance d) {
  return flag.empty() ? rb::default_rule(d) : rb::parse_radius_rule(flag);
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
void emit(const std::string& path, Fn fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw rb::DataError("cannot write '" + path + "'");
  fn(out);
}

struct CommonOpts {
  std::string bounds = "0,1";
  std::string risk;
  std::string distance = "sup";
  std::string method = "dist";
  double delta = 0.05;
  std::string radius;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_bounds_required) {
  auto* b = cmd->add_option("--bounds", o.bounds, "support bounds a,b");
  if (with_bounds_required) b->required();
  cmd->add_option("--risk", o.risk, "risk measure, e.g. cvar:0.05, erm:1, srm-power:2")->required();
  cmd->add_option("--distance", o.distance, "sup|w1");
  cmd->add_option("--method", o.method, "dist|llc|glc|all");
  cmd->add_option("--delta", o.delta, "confidence level delta");
  cmd->add_option("--radius", o.radius, "dkw|fact22|scaled-dkw (default: dkw for sup, scaled-dkw for w1)");
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

int cmd_ci(const CommonOpts& o, const std::string& input, bool header) {
  const rb::SupportBounds bounds = parse_bounds(o.bounds);
  const rb::RiskMeasure rm = rb::parse_risk(o.risk, bounds);
  const rb::Distance dist = rb::parse_distance(o.distance);
  const std::vector<rb::BoundMethod> methods = parse_methods(o.method);
  const std::vector<double> xs = rb::read_samples_csv_file(input, header);
  if (xs.empty()) throw rb::DataError("sample file '" + input + "' holds no values");
  const rb::DiscreteDistribution edf = rb::from_samples(xs, bounds);
  const double c = rb::radius(rule_for(o.radius, dist), dist, xs.size(), o.delta, bounds);
  std::vector<std::string> lines;
  if (methods.size() > 1) {
    const rb::MethodComparison cmp = rb::compare_methods(edf, rm, dist, c);
    for (const auto& r : cmp.results) lines.push_back(rb::result_to_json(r, rm.label()));
    for (const auto& s : cmp.skipped) std::cerr << "skipped " << s << '\n';
  } else {
    lines.push_back(rb::result_to_json(rb::bound_with_radius(edf, rm, dist, methods.front(), c), rm.label()));
  }
  emit(o.out, [&](std::ostream& os) {
    for (const auto& l : lines) os << l << '\n';
  });
  return kOk;
}

int cmd_sweep(const CommonOpts& o, const std::string& dist_spec, const std::string& ns, std::size_t seeds,
              std::uint64_t seed) {
  rb::SupportBounds bounds = parse_bounds(o.bounds);
  rb::SweepConfig cfg{rb::parse_arm(dist_spec, bounds), rb::parse_risk(o.risk, bounds)};
  cfg.distance = rb::parse_distance(o.distance);
  cfg.methods = parse_methods(o.method);
  cfg.rule = rule_for(o.radius, cfg.distance);
  cfg.ns = parse_sizes(ns);
  cfg.seeds = seeds;
  cfg.delta = o.delta;
  cfg.seed = seed;
  for (rb::BoundMethod m : cfg.methods) {
    if (!rb::supported(cfg.risk, cfg.distance, m)) {
      throw rb::UnsupportedCombination(std::string(rb::to_string(m)) + " is unsupported for " + cfg.risk.label() +
                                       " under " + std::string(rb::to_string(cfg.distance)));
    }
  }
  const double truth = rb::true_risk(cfg.arm, cfg.risk);
  const auto rows = rb::sweep_parallel(cfg, truth);
  emit(o.out, [&](std::ostream& os) { rb::write_sweep_csv(os, rows); });
  return kOk;
}

int cmd_coverage(const CommonOpts& o, const std::string& dist_spec, std::size_t n, std::size_t trials,
                 std::uint64_t seed) {
  const rb::SupportBounds bounds = parse_bounds(o.bounds);
  rb::CoverageConfig cfg{rb::parse_arm(dist_spec, bounds), rb::parse_risk(o.risk, bounds)};
  cfg.distance = rb::parse_distance(o.distance);
  const auto methods = parse_methods(o.method);
  if (methods.size() != 1) throw UsageError("coverage takes a single --method");
  cfg.method = methods.front();
  cfg.rule = rule_for(o.radius, cfg.distance);
  cfg.n = n;
  cfg.delta = o.delta;
  cfg.trials = trials;
  cfg.seed = seed;
  const double truth = rb::true_risk(cfg.arm, cfg.risk);
  const rb::CoverageSummary s = rb::coverage_parallel(cfg, truth);
  emit(o.out, [&](std::ostream& os) {
    os << "{\"trials\":" << s.trials << ",\"covered\":" << s.covered
       << ",\"fraction\":" << rb::format_double(s.fraction())
       << ",\"target\":" << rb::format_double(std::max(0.0, 1.0 - o.delta))
       << ",\"true_risk\":" << rb::format_double(s.truth) << ",\"mean_width\":" << rb::format_double(s.mean_width)
       << "}\n";
  });
  return kOk;
}

int cmd_bandit(const std::string& instance_path, const std::string& variant, std::size_t seeds,
               const std::string& out_dir, const std::string& out) {
  const rb::BanditInstance inst = rb::load_instance_file(instance_path);
  std::vector<rb::BanditVariant> variants;
  if (variant == "all") {
    variants = {rb::BanditVariant::Dist, rb::BanditVariant::LLC, rb::BanditVariant::GLC};
  } else {
    variants = {rb::parse_variant(variant)};
  }
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  const std::vector<double> risks = rb::arm_risks(inst);
  std::ostringstream summary;
  summary.precision(17);
  summary << "{\"arms\":" << inst.num_arms() << ",\"horizon\":" << inst.horizon << ",\"seeds\":" << seeds
          << ",\"arm_risk\":[";
  for (std::size_t i = 0; i < risks.size(); ++i) summary << (i ? "," : "") << rb::format_double(risks[i]);
  summary << "]";
  if (std::holds_alternative<rb::Cvar>(inst.risk.params())) {
    const double alpha = std::get<rb::Cvar>(inst.risk.params()).alpha;
    if (alpha <= 0.5) summary << ",\"regret_bound\":" << rb::format_double(rb::regret_bound(inst));
  }
  summary << ",\"variants\":{";
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const auto traces = rb::bandit_seeds_parallel(inst, variants[v], seeds);
    const std::string name(rb::to_string(variants[v]));
    std::vector<double> mean(inst.horizon, 0.0), sq(inst.horizon, 0.0);
    std::vector<double> pulls(inst.num_arms(), 0.0);
    for (std::size_t s = 0; s < traces.size(); ++s) {
      for (std::size_t t = 0; t < inst.horizon; ++t) {
        mean[t] += traces[s].cumulative_regret[t];
        sq[t] += traces[s].cumulative_regret[t] * traces[s].cumulative_regret[t];
      }
      for (std::size_t i = 0; i < pulls.size(); ++i) pulls[i] += static_cast<double>(traces[s].pulls[i]);
      if (!out_dir.empty()) {
        std::ofstream f(out_dir + "/trace_" + name + "_seed" + std::to_string(s) + ".csv");
        if (!f) throw rb::DataError("cannot write into '" + out_dir + "'");
        rb::write_trace_csv(f, traces[s]);
      }
    }
    const double k = static_cast<double>(traces.size());
    auto stdev_at = [&](std::size_t t) {
      const double m = mean[t] / k;
      return k > 1 ? std::sqrt(std::max(0.0, (sq[t] - k * m * m) / (k - 1))) : 0.0;
    };
    if (!out_dir.empty()) {
      std::ofstream f(out_dir + "/curve_" + name + ".csv");
      f << "round,mean_regret,stdev_regret\n";
      for (std::size_t t = 0; t < inst.horizon; ++t) {
        f << t + 1 << ',' << rb::format_double(mean[t] / k) << ',' << rb::format_double(stdev_at(t)) << '\n';
      }
    }
    const std::size_t last = inst.horizon - 1;
    summary << (v ? "," : "") << '"' << name << "\":{\"mean_final_regret\":" << rb::format_double(mean[last] / k)
            << ",\"stdev_final_regret\":" << rb::format_double(stdev_at(last)) << ",\"mean_pulls\":[";
    for (std::size_t i = 0; i < pulls.size(); ++i) summary << (i ? "," : "") << rb::format_double(pulls[i] / k);
    summary << "]}";
  }
  summary << "}}\n";
  emit(out, [&](std::ostream& os) { os << summary.str(); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confidence bounds for risk measures and risk-averse bandits"};
  app.require_subcommand(1);

  CommonOpts ci_o, sweep_o, cov_o;
  std::string input;
  bool header = false;
  auto* ci = app.add_subcommand("ci", "confidence interval from a sample file");
  ci->add_option("--input", input, "sample CSV, one value per line")->required();
  ci->add_flag("--header", header, "skip the first line of the sample file");
  add_common(ci, ci_o, true);

  std::string sweep_dist, ns = "100,1000,10000";
  std::size_t sweep_seeds = 20;
  std::uint64_t sweep_seed = 1;
  auto* sweep = app.add_subcommand("sweep", "bound widths over sample sizes (CSV)");
  sweep->add_option("--dist", sweep_dist, "sampling distribution, e.g. beta:2,5")->required();
  sweep->add_option("--ns", ns, "comma-separated increasing sample sizes");
  sweep->add_option("--seeds", sweep_seeds, "seeds per sample size");
  sweep->add_option("--seed", sweep_seed, "base seed");
  add_common(sweep, sweep_o, false);

  std::string cov_dist;
  std::size_t cov_n = 1000, trials = 2000;
  std::uint64_t cov_seed = 1;
  auto* cov = app.add_subcommand("coverage", "empirical coverage of the interval");
  cov->add_option("--dist", cov_dist, "sampling distribution, e.g. beta:2,5")->required();
  cov->add_option("--n", cov_n, "sample size");
  cov->add_option("--trials", trials, "Monte Carlo trials");
  cov->add_option("--seed", cov_seed, "base seed");
  add_common(cov, cov_o, false);

  std::string instance, variant = "all", out_dir, bandit_out;
  std::size_t bandit_seeds = 20;
  auto* bandit = app.add_subcommand("bandit", "CVaR bandit regret experiment");
  bandit->add_option("--instance", instance, "instance JSON")->required();
  bandit->add_option("--variant", variant, "dist|llc|glc|all");
  bandit->add_option("--seeds", bandit_seeds, "number of seeds");
  bandit->add_option("--out-dir", out_dir, "directory for per-seed traces and mean curves");
  bandit->add_option("--out", bandit_out, "summary JSON file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ci) return cmd_ci(ci_o, input, header);
    if (*sweep) return cmd_sweep(sweep_o, sweep_dist, ns, sweep_seeds, sweep_seed);
    if (*cov) return cmd_coverage(cov_o, cov_dist, cov_n, trials, cov_seed);
    if (*bandit) {
      if (bandit_seeds < 1) throw UsageError("--seeds must be >= 1");
      return cmd_bandit(instance, variant, bandit_seeds, out_dir, bandit_out);
    }
  } catch (const rb::UnsupportedCombination& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const rb::NonFiniteConstant& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const rb::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
