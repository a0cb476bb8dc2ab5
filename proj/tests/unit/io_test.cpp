// Copyright 2026 The nilentropy Authors.
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


#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "nilentropy/io.hpp"
#include "printers.hpp"

namespace {

using nilentropy::Endomorphism;
using nilentropy::FormatError;
using nilentropy::GroupSpec;
using nilentropy::LengthMode;
using nilentropy::MalcevVector;

const GroupSpec H(2, 2);

TEST(MalcevJson, RoundTrip) {
  const MalcevVector g{1, -2, 0};
  EXPECT_EQ(nilentropy::to_json(g), "[1,-2,0]");
  EXPECT_EQ(nilentropy::malcev_from_json("[1, -2, 0]"), g);

  MalcevVector big(2);
  big[0] = nilentropy::Integer("123456789012345678901234567890");
  big[1] = -(nilentropy::Integer(1) << 60);
  const std::string text = nilentropy::to_json(big);
  EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
  EXPECT_EQ(nilentropy::malcev_from_json(text), big);
  EXPECT_EQ(nilentropy::malcev_from_json("[9007199254740992, \"-5\"]"),
            (MalcevVector{9007199254740992L, -5}));
}

TEST(MalcevJson, Malformed) {
  EXPECT_THROW(nilentropy::malcev_from_json("[1,"), FormatError);
  EXPECT_THROW(nilentropy::malcev_from_json("{\"a\": 1}"), FormatError);
  EXPECT_THROW(nilentropy::malcev_from_json("[1.5]"), FormatError);
  EXPECT_THROW(nilentropy::malcev_from_json("[\"12a\"]"), FormatError);
}

TEST(GroupJson, RoundTrip) {
  const std::vector<GroupSpec> specs{
      H,
      GroupSpec(3, 4),
      GroupSpec(3, 2, {MalcevVector{0, 0, 0, 1, -1, 0}}),
      GroupSpec(3, 1, {MalcevVector{0, 0, 1}}),
      H.with_generating_set({MalcevVector{1, 0, 0}, MalcevVector{0, 1, 0}, MalcevVector{0, 0, 1}}),
  };
  for (const GroupSpec& spec : specs) {
    const GroupSpec back = nilentropy::group_from_json(nilentropy::to_json(spec));
    EXPECT_EQ(back, spec) << nilentropy::to_json(spec);
    EXPECT_EQ(back.has_default_generating_set(), spec.has_default_generating_set());
  }
  EXPECT_NE(nilentropy::to_json(H).find("\"left-collected\""), std::string::npos);
}

TEST(GroupJson, RelationsByWeight) {
  const GroupSpec expected(3, 2, {MalcevVector{0, 0, 0, 1, -1, 0}});
  const GroupSpec parsed = nilentropy::group_from_json(
      R"({"rank": 3, "class": 2, "relations": {"2": [[1, -1, 0]]}})");
  EXPECT_EQ(parsed, expected);
  EXPECT_EQ(parsed.dimension(), 5u);
}

TEST(GroupJson, Malformed) {
  EXPECT_THROW(nilentropy::group_from_json("{\"rank\": 2"), FormatError);
  EXPECT_THROW(nilentropy::group_from_json(R"({"class": 2})"), FormatError);
  EXPECT_THROW(nilentropy::group_from_json(R"({"rank": "two", "class": 2})"), FormatError);
  EXPECT_THROW(nilentropy::group_from_json(R"({"rank": 2, "class": 2, "convention": "right"})"),
               FormatError);
  EXPECT_THROW(
      nilentropy::group_from_json(R"({"rank": 2, "class": 2, "relations": {"3": [[1]]}})"),
      FormatError);
  EXPECT_THROW(
      nilentropy::group_from_json(R"({"rank": 2, "class": 2, "relations": {"2": [[1, 2]]}})"),
      FormatError);
}

TEST(EndomorphismJson, RoundTrip) {
  const Endomorphism fib(H, {MalcevVector{1, 1, 0}, MalcevVector{1, 0, 0}});
  EXPECT_EQ(nilentropy::endomorphism_from_json(nilentropy::to_json(fib)), fib);
  const Endomorphism from_words = nilentropy::endomorphism_from_json(
      R"({"group": {"rank": 2, "class": 2}, "words": ["x1 x2", "x1"]})");
  EXPECT_EQ(from_words, fib);
  EXPECT_THROW(nilentropy::endomorphism_from_json(R"({"group": {"rank": 2, "class": 2}, "words": [1, 2]})"),
               FormatError);
  EXPECT_THROW(nilentropy::endomorphism_from_json(R"({"group": {"rank": 2, "class": 2}})"), FormatError);
}

TEST(SemidirectJson, Keys) {
  const Endomorphism shear(H, {MalcevVector{1, 0, 0}, MalcevVector{1, 1, 0}});
  const std::string text = nilentropy::to_json(nilentropy::SemidirectSpec(H, shear));
  for (const char* key : {"\"base\"", "\"monodromy\"", "\"class\": 3"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key << " in " << text;
  }
}

TEST(AbelianComparisonJson, Keys) {
  nilentropy::AbelianComparison report;
  report.window = {15, 30};
  const std::string text = nilentropy::to_json(report);
  for (const char* key : {"spectral_radius", "entropy_estimate", "ratio", "window", "residual"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
}

TEST(FormatLength, Examples) {
  EXPECT_EQ(nilentropy::format_length({3, 7.0, std::log(7.0), LengthMode::kExactBfs}), "7");
  EXPECT_EQ(nilentropy::format_length({3, 1.5, std::log(1.5), LengthMode::kKaridi}), "1.5");
  const std::string huge =
      nilentropy::format_length({3, HUGE_VAL, 1000.0 * std::log(10.0), LengthMode::kKaridi});
  EXPECT_EQ(huge, "1e+1000");
}

TEST(GrowthCsv, RoundTrip) {
  const auto series = nilentropy::make_series({1, 2, 3.5, 1e300}, LengthMode::kKaridi);
  std::stringstream out;
  nilentropy::write_growth_csv(out, series);
  EXPECT_EQ(out.str().substr(0, 14), "n,length,mode\n");
  EXPECT_NE(out.str().find("3,3.5,karidi\n"), std::string::npos);
  const auto back = nilentropy::read_growth_csv(out);
  ASSERT_EQ(back.entries.size(), series.entries.size());
  for (std::size_t i = 0; i < back.entries.size(); ++i) {
    EXPECT_EQ(back.entries[i].n, series.entries[i].n);
    EXPECT_NEAR(back.entries[i].length, series.entries[i].length, 1e-11 * series.entries[i].length);
    EXPECT_EQ(back.entries[i].mode, LengthMode::kKaridi);
  }
}

TEST(GrowthCsv, HugeValuesSurvive) {
  nilentropy::GrowthSeries s;
  s.entries.push_back({1, HUGE_VAL, 2000.0, LengthMode::kKaridi});
  std::stringstream io;
  nilentropy::write_growth_csv(io, s);
  const auto back = nilentropy::read_growth_csv(io);
  ASSERT_EQ(back.entries.size(), 1u);
  EXPECT_NEAR(back.entries[0].log_length, 2000.0, 1e-6);
}

TEST(GrowthCsv, Malformed) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return nilentropy::read_growth_csv(in);
  };
  EXPECT_THROW(read("n,len,mode\n1,1,karidi\n"), FormatError);
  EXPECT_THROW(read("n,length,mode\n1,1\n"), FormatError);
  EXPECT_THROW(read("n,length,mode\n1,x,karidi\n"), FormatError);
  EXPECT_THROW(read("n,length,mode\n1,1,geodesic\n"), FormatError);
  EXPECT_THROW(read("n,length,mode\n2,1,karidi\n1,1,karidi\n"), FormatError);
  EXPECT_THROW(read("n,length,mode\n1,-1,karidi\n"), FormatError);
  EXPECT_NO_THROW(read("n,length,mode\n"));
}

TEST(PlotData, Columns) {
  std::ostringstream out;
  nilentropy::write_plot_data(out, nilentropy::make_series({1, 2}, LengthMode::kExactBfs));
  EXPECT_EQ(out.str(), "1 1\n2 2\n");
}

}  // namespace
