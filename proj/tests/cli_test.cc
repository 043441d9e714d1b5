// Copyright 2026 The gridmean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridmean/cli.h"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gridmean/grid_stats.h"

namespace gridmean::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gridmean");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

Rational exact_of(const nlohmann::json& j) {
  return Rational::parse(j.at("numerator").get<std::string>() + "/" +
                         j.at("denominator").get<std::string>());
}

TEST(RangeTest, Parse) {
  EXPECT_EQ(Range::parse("1..4").values(), (std::vector<unsigned long>{1, 2, 3, 4}));
  EXPECT_EQ(Range::parse("0..10:5").values(), (std::vector<unsigned long>{0, 5, 10}));
  EXPECT_EQ(Range::parse("3..8:4").values(), (std::vector<unsigned long>{3, 7}));
  EXPECT_EQ(Range::parse("7").values(), (std::vector<unsigned long>{7}));
  EXPECT_THROW(Range::parse("4..1"), UsageError);
  EXPECT_THROW(Range::parse("1..4:0"), UsageError);
  EXPECT_THROW(Range::parse("a..4"), UsageError);
  EXPECT_THROW(Range::parse("1..-4"), UsageError);
  EXPECT_THROW(Range::parse(""), UsageError);
  EXPECT_THROW(Range::parse("1...4"), UsageError);
}

TEST(CliRatioTest, CuboidJson) {
  const Invocation r = invoke({"--format", "json", "ratio", "cuboid", "--n", "2", "--m", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "{\"kind\":\"ratio.cuboid\",\"parameters\":{\"n\":2,\"m\":2,\"digits\":10},"
            "\"exact\":{\"numerator\":\"4\",\"denominator\":\"9\"},\"decimal\":\"0.4444444444\"}\n");
}

TEST(CliRatioTest, CubeCsv) {
  const Invocation r = invoke({"ratio", "cube", "--n", "2", "--m", "2", "--digits", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "kind,n,m,digits,num,den,decimal\nratio.cube,2,2,4,2,5,0.4000\n");
}

TEST(CliRatioTest, DegenerateGrid) {
  const Invocation r = invoke({"--format", "json", "ratio", "cuboid", "--n", "1", "--m", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(exact_of(nlohmann::json::parse(r.out)["exact"]), Rational(1));
}

TEST(CliLimitTest, Values) {
  auto value = [](const std::string& kind, const std::string& n) {
    const Invocation r = invoke({"--format", "json", "limit", kind, "--n", n});
    EXPECT_EQ(r.code, kExitOk);
    return exact_of(nlohmann::json::parse(r.out)["exact"]);
  };
  EXPECT_EQ(value("cube", "2"), Rational(BigInt(1), BigInt(10)));
  EXPECT_EQ(value("cuboid", "3"), Rational(BigInt(1), BigInt(27)));
  EXPECT_EQ(value("cube", "1"), Rational(BigInt(1), BigInt(3)));
}

TEST(CliEdgeRatioTest, Enclosures) {
  Invocation r = invoke({"--format", "json", "edge-ratio", "--n", "1"});
  ASSERT_EQ(r.code, kExitOk);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(exact_of(j["exact"]), Rational(BigInt(1), BigInt(3)));
  EXPECT_EQ(exact_of(j["gap"]["lo"]), Rational(BigInt(1), BigInt(12)));

  r = invoke({"--format", "json", "edge-ratio", "--n", "2"});
  j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.contains("exact"));
  EXPECT_EQ(j["decimal"], "0.3162277660");
  EXPECT_TRUE(encloses(RootBound{exact_of(j["enclosure"]["lo"]), exact_of(j["enclosure"]["hi"]), 2, 10},
                       Rational(BigInt(1), BigInt(10))));

  r = invoke({"--digits", "4", "--format", "json", "edge-ratio", "--n", "10"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["decimal"], "0.2787");
}

TEST(CliConvergeTest, CuboidTable) {
  const Invocation r = invoke({"--digits", "4", "converge", "cuboid", "--n", "2", "--range", "1..4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "index,num,den,decimal,gap_num,gap_den\n"
            "1,1,1,1.0000,8,9\n"
            "2,4,9,0.4444,1,3\n"
            "3,25,81,0.3086,16,81\n"
            "4,1,4,0.2500,5,36\n");
}

TEST(CliConvergeTest, EdgeRatioFirstRow) {
  const Invocation r = invoke({"converge", "edge-ratio", "--range", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "index,num,den,decimal,gap_num,gap_den,hi_num,hi_den,gap_hi_num,gap_hi_den");
  EXPECT_EQ(rows[1], "1,1,3,0.3333333333,1,12,1,3,1,12");
}

TEST(CliConvergeTest, CentralBinomialRoots) {
  const Invocation r = invoke({"--digits", "3", "converge", "central-binomial", "--range", "1..3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(split(rows[1])[3], "2.000");
  EXPECT_EQ(split(rows[2])[3], "2.449");
  EXPECT_EQ(split(rows[3])[3], "2.714");

  const Invocation odd = invoke({"--digits", "3", "converge", "central-binomial", "--variant", "odd",
                          "--range", "2"});
  EXPECT_EQ(split(lines(odd.out)[1])[3], "3.162");
}

TEST(CliConvergeTest, CsvAndJsonCarryTheSameNumbers) {
  for (const std::string kind : {"cube", "edge-ratio"}) {
    std::vector<std::string> base{"converge", kind, "--n", "3", "--range", "1..12:3"};
    if (kind == "edge-ratio") base = {"converge", kind, "--range", "1..12:3"};
    std::vector<std::string> csv_args = base;
    std::vector<std::string> json_args = base;
    json_args.insert(json_args.begin(), {"--format", "json"});
    const Invocation csv = invoke(csv_args);
    const Invocation json = invoke(json_args);
    ASSERT_EQ(csv.code, kExitOk);
    ASSERT_EQ(json.code, kExitOk);
    const auto csv_lines = lines(csv.out);
    const auto json_lines = lines(json.out);
    ASSERT_EQ(csv_lines.size(), json_lines.size() + 1);
    const auto header = split(csv_lines[0]);
    for (std::size_t i = 0; i < json_lines.size(); ++i) {
      const auto cells = split(csv_lines[i + 1]);
      const auto obj = nlohmann::json::parse(json_lines[i]);
      ASSERT_EQ(obj.size(), header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        const auto& field = obj.at(header[c]);
        EXPECT_EQ(field.is_string() ? field.get<std::string>() : field.dump(), cells[c]);
      }
    }
  }
}

TEST(CliConvergeTest, JobsDoNotChangeOutput) {
  const std::vector<std::string> sweep{"converge", "central-binomial", "--range", "1..60"};
  auto with_jobs = [&](const std::string& jobs) {
    std::vector<std::string> args{"--jobs", jobs};
    args.insert(args.end(), sweep.begin(), sweep.end());
    return invoke(args).out;
  };
  EXPECT_EQ(with_jobs("1"), with_jobs("8"));
}

TEST(CliConvergeTest, ExactFractionsRoundTrip) {
  const Invocation r = invoke({"--format", "json", "converge", "cube", "--n", "4", "--range", "1..9"});
  ASSERT_EQ(r.code, kExitOk);
  unsigned long m = 1;
  for (const auto& line : lines(r.out)) {
    const auto j = nlohmann::json::parse(line);
    const Rational value = Rational::parse(j["num"].get<std::string>() + "/" +
                                           j["den"].get<std::string>());
    EXPECT_EQ(value, r_ratio_sum(GridSpec(4, m)));
    EXPECT_EQ(value.to_string(), Rational(value.numerator(), value.denominator()).to_string());
    ++m;
  }
}

TEST(CliVerifyTest, Suites) {
  Invocation r = invoke({"verify", "prop1", "--range", "0..200"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "suite,cases,passed,failed\nprop1,201,201,0\n");

  r = invoke({"--format", "json", "verify", "oracle"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "oracle");
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["cases"], 18 * 7);

  r = invoke({"verify", "prop2-bounds", "--range", "1..1000"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out)[1], "prop2-bounds,2000,2000,0");

  r = invoke({"verify", "beta", "--range", "0..20"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out)[1], "beta,63,63,0");

  r = invoke({"verify", "all", "--range", "0..30", "--m-range", "1..3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out).size(), 6u);
}

TEST(CliUsageTest, ExitCodeTwo) {
  EXPECT_EQ(invoke({"ratio", "cuboid", "--n", "0", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"ratio", "cuboid", "--n", "-1", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"ratio", "sphere", "--n", "2", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"ratio", "cuboid", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "limit", "cube", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"converge", "cuboid", "--range", "1..4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"converge", "cuboid", "--n", "2", "--range", "4..1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"converge", "edge-ratio", "--range", "0..3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "prop2-ratio", "--range", "0..3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--budget", "100", "verify", "oracle"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--digits", "0", "edge-ratio", "--n", "3"}).code, kExitUsage);
}

TEST(CliUsageTest, HelpIsSuccess) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace gridmean::cli
