// Copyright 2026 The signbase Authors
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

#include "signbase/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "signbase/report.hpp"
#include "signbase/suites.hpp"

namespace signbase::verify {
namespace {

TEST(Verify, NaturalOrder) {
  EXPECT_TRUE(natural_less("d1(n=9)", "d1(n=10)"));
  EXPECT_FALSE(natural_less("d1(n=10)", "d1(n=9)"));
  EXPECT_TRUE(natural_less("a", "b"));
  EXPECT_TRUE(natural_less("x2", "x2a"));
  EXPECT_FALSE(natural_less("x2", "x2"));
}

TEST(Verify, CanonicalOrderIsIndependentOfInputOrder) {
  std::vector<Outcome> v{{"s", "b(n=10)", "c", "", "", true, ""},
                         {"s", "b(n=9)", "c", "", "", true, ""},
                         {"a", "z", "c", "", "", true, ""},
                         {"s", "b(n=9)", "a", "", "", false, ""}};
  auto w = v;
  std::reverse(w.begin(), w.end());
  canonical_order(v);
  canonical_order(w);
  EXPECT_EQ(report::outcomes(v).dump(), report::outcomes(w).dump());
  EXPECT_EQ(v[0].suite, "a");
  EXPECT_EQ(v[1].claim, "a");
  EXPECT_EQ(v[3].instance, "b(n=10)");
}

TEST(Verify, SummaryCounts) {
  std::vector<Outcome> v{{"s", "i", "c", "", "", true, ""}, {"s", "i", "d", "", "", false, "w"}};
  auto const s = summarize(v);
  EXPECT_EQ(s.total, 2U);
  EXPECT_EQ(s.passed, 1U);
  EXPECT_EQ(s.failed, 1U);
}

TEST(Verify, AggregateReportsFirstFailure) {
  Aggregate a;
  a.declare("never");
  a.add("c", true, "i1", "w1");
  a.add("c", false, "i2", "w2", "why");
  a.add("c", false, "i3", "w3", "later");
  std::vector<Outcome> out;
  a.emit(out, "s", "set");
  ASSERT_EQ(out.size(), 2U);
  EXPECT_EQ(out[0].claim, "c");
  EXPECT_FALSE(out[0].pass);
  EXPECT_EQ(out[0].computed, "2 violations in 3 checked; first i2: why");
  EXPECT_EQ(out[0].witness, "w2");
  EXPECT_TRUE(out[1].pass);
  EXPECT_EQ(out[1].computed, "0 violations in 0 checked");
}

TEST(Verify, RangeParsing) {
  EXPECT_EQ(parse_range("6..10"), (std::pair<std::size_t, std::size_t>{6, 10}));
  EXPECT_EQ(parse_range("14"), (std::pair<std::size_t, std::size_t>{14, 14}));
  EXPECT_THROW(parse_range("10..6"), ParameterError);
  EXPECT_THROW(parse_range("a..b"), ParameterError);
  EXPECT_THROW(parse_range("0..3"), ParameterError);
  EXPECT_THROW(run_suite("gaps", {std::pair<std::size_t, std::size_t>{10, 12}, 10, 1}),
               ParameterError);
  EXPECT_THROW(run_suite("nope"), ParameterError);
}

TEST(Verify, GapIntervalsLieBelowTheLargeBases) {
  for (std::size_t n = 14; n <= 17; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      auto const gaps = gap_intervals(n, k);
      EXPECT_EQ(gaps.size(), n % 2 == 0 ? 2U : 3U);
      Int const d1 = 2 * static_cast<Int>(n * n) - 4 * static_cast<Int>(n) +
                     static_cast<Int>(k) + 2;
      for (auto const& g : gaps) {
        EXPECT_LE(g.lo, g.hi);
        EXPECT_LT(g.hi, d1);
      }
    }
  }
}

TEST(Verify, DistinguishedPairs) {
  Cycle odd_pos{{0}, 1}, odd_neg{{1}, -1}, even_neg{{0, 1}, -1}, even_pos{{0, 1}, 1};
  EXPECT_TRUE(distinguished(odd_pos, odd_neg));
  EXPECT_TRUE(distinguished(odd_pos, even_neg));
  EXPECT_TRUE(distinguished(even_neg, odd_neg));
  EXPECT_FALSE(distinguished(odd_pos, even_pos));
  EXPECT_FALSE(distinguished(even_neg, even_neg));
}

TEST(Verify, BatteryOnTwoVertexExample) {
  auto const a = analyze(parse("2\n1 1 +\n1 2 +\n2 1 -\n"));
  auto const checks = lemma_checks(a);
  ASSERT_GE(checks.size(), 3U);
  for (auto const& c : checks) EXPECT_TRUE(c.pass) << c.claim << " " << c.computed;
  EXPECT_EQ(checks[0].claim, claims::kExpBound);
}

TEST(Verify, TinySuitePassesAtOrderTwo) {
  TinyOptions opt;
  opt.n_max = 2;
  opt.samples = 5;
  auto const out = exhaustive_tiny(opt);
  ASSERT_FALSE(out.empty());
  for (auto const& o : out) EXPECT_TRUE(o.pass) << o.instance << " " << o.claim;
  bool counted = false;
  for (auto const& o : out) {
    if (o.claim == "configurations scanned" && o.instance.find("n=2") != std::string::npos) {
      counted = true;
      EXPECT_NE(o.computed.find("81"), std::string::npos) << o.computed;
    }
  }
  EXPECT_TRUE(counted);
}

TEST(Verify, SamplerIsDeterministic) {
  for (std::uint64_t idx = 0; idx < 20; ++idx) {
    auto const a = sample_instance(8, 99, idx);
    auto const b = sample_instance(8, 99, idx);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->graph, b->graph);
    EXPECT_TRUE(is_primitive(a->graph));
    EXPECT_TRUE(find_distinguished_pair(a->catalog));
  }
  EXPECT_NE(sample_instance(8, 99, 0)->graph, sample_instance(8, 100, 0)->graph);
}

TEST(Verify, ParallelMapIgnoresWorkerCount) {
  auto f = [](std::size_t i) { return i * i + 1; };
  EXPECT_EQ(parallel_map(100, f, 1), parallel_map(100, f, 7));
  EXPECT_THROW(parallel_map(10, [](std::size_t i) -> int {
                 if (i >= 3) throw ParameterError("at " + std::to_string(i));
                 return 0;
               }, 4),
               ParameterError);
}

TEST(Verify, SuiteOutputDoesNotDependOnThreads) {
  auto run = [](char const* threads) {
    setenv("SIGNBASE_THREADS", threads, 1);
    auto const j = report::dump(report::outcomes(run_suite(
        "lemmas", {std::pair<std::size_t, std::size_t>{8, 8}, 40, 3})));
    unsetenv("SIGNBASE_THREADS");
    return j;
  };
  EXPECT_EQ(run("1"), run("5"));
}

TEST(Verify, ExponentSuiteSmallRange) {
  auto const out = run_suite("exponents", {std::pair<std::size_t, std::size_t>{6, 7}, {}, 1});
  ASSERT_FALSE(out.empty());
  for (auto const& o : out) EXPECT_TRUE(o.pass) << o.instance << " " << o.claim;
}

}  // namespace
}  // namespace signbase::verify
