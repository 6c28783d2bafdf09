#include <gtest/gtest.h>

#include <sstream>

#include "riskbounds/error.hpp"
#include "riskbounds/io.hpp"

using namespace riskbounds;

TEST(SamplesCsv, HeaderAndBlankLines) {
  std::istringstream in("loss\n1.5\n\n  2\n3e-1\n\n");
  EXPECT_EQ(read_samples_csv(in, true), (std::vector<double>{1.5, 2.0, 0.3}));
}

TEST(SamplesCsv, RejectsBadValues) {
  for (const char* text : {"1\nabc\n", "1\n2 3\n", "nan\n", "inf\n", "1,2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_samples_csv(in), DataError) << text;
  }
  EXPECT_THROW(read_samples_csv_file("/nonexistent/file.csv"), DataError);
}

TEST(DistributionJson, RoundTrip) {
  const SupportBounds b(-1, 2);
  const DiscreteDistribution d({{0.1, 0.3}, {1.0 / 3.0, 0.2}, {2.0, 0.5}}, b);
  EXPECT_EQ(distribution_from_json(distribution_to_json(d)), d);
  EXPECT_THROW(distribution_from_json("{\"bounds\":{\"a\":0}}"), DataError);
  EXPECT_THROW(distribution_from_json("{not json"), DataError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(Instance, ParsesAllFamilies) {
  const auto inst = parse_instance(R"({"bounds":[0,1],"risk":"cvar:0.25","horizon":100,"seed":7,
    "arms":[{"family":"dirac","params":{"x":0.2}},
            {"family":"uniform","params":{"lo":0.1,"hi":0.5}},
            {"family":"beta","params":{"A":2,"B":5}},
            {"family":"truncnormal","params":{"mu":0.3,"sigma":0.1}},
            {"family":"discrete","params":{"atoms":[{"x":0.2,"p":0.5},{"x":0.9,"p":0.5}]}}]})");
  EXPECT_EQ(inst.num_arms(), 5u);
  EXPECT_EQ(inst.horizon, 100u);
  EXPECT_EQ(inst.seed, 7u);
  EXPECT_EQ(inst.arms[2].label(), "beta:2,5");
}

TEST(Instance, Errors) {
  EXPECT_THROW(parse_instance("{"), DataError);
  EXPECT_THROW(parse_instance(R"({"bounds":[0,1],"risk":"cvar:0.25","horizon":10,"arms":[]})"), DataError);
  EXPECT_THROW(parse_instance(R"({"bounds":[0,1],"risk":"cvar:0.25","horizon":10,
    "arms":[{"family":"cauchy","params":{}}]})"),
               DataError);
  EXPECT_THROW(parse_instance(R"({"bounds":[0,1],"risk":"cvar:0.25","horizon":10,
    "arms":[{"family":"dirac","params":{"x":3}}]})"),
               DataError);
  EXPECT_THROW(load_instance_file("/nonexistent.json"), DataError);
}

TEST(TraceCsv, Format) {
  RegretTrace tr;
  tr.chosen = {0, 1};
  tr.loss = {0.5, 0.25};
  tr.instant_regret = {0.0, 0.1};
  tr.cumulative_regret = {0.0, 0.1};
  std::ostringstream out;
  write_trace_csv(out, tr);
  EXPECT_EQ(out.str(), "round,arm,loss,cum_regret\n1,0,0.5,0\n2,1,0.25,0.1\n");
}

TEST(ResultJson, ContainsCoreFields) {
  const SupportBounds b(0, 5);
  const auto d = from_samples(std::vector<double>{1, 2, 3, 4}, b);
  const auto r = bound_with_radius(d, RiskMeasure::cvar(0.5), Distance::Supremum, BoundMethod::Dist, 0.25);
  const auto j = result_to_json(r, "cvar:0.5");
  for (const char* key : {"\"method\"", "\"lcb\"", "\"ucb\"", "\"radius\"", "\"extras\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
}
