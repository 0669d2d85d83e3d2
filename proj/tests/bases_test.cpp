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

#include "signbase/bases.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "signbase/families.hpp"
#include "signbase/oracles.hpp"
#include "signbase/sampler.hpp"

namespace signbase {
namespace {

SignedDigraph two_vertex() { return parse("2\n1 1 +\n1 2 +\n2 1 -\n"); }

TEST(Bases, TwoVertexExample) {
  auto const r = base_report(two_vertex());
  EXPECT_EQ(r.pairwise.cells, (std::vector<std::size_t>{2, 3, 3, 4}));
  EXPECT_EQ(r.per_vertex, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(r.global, 4U);
  EXPECT_EQ(r.stabilization_time, 4U);
  EXPECT_EQ(r.closed_sssd, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(closed_sssd_time(two_vertex(), 1), 4U);
}

TEST(Bases, PowerfulInputIsRejected) {
  auto const g = parse("2\n1 1 -\n1 2 +\n2 1 +\n");
  EXPECT_THROW(base_report(g), PowerfulInput);
  auto const all_positive = underlying_digraph({Family::D1, 6, 0, 0, AllPositive{}});
  EXPECT_THROW(base_report(all_positive), PowerfulInput);
}

TEST(Bases, NonPrimitiveInputIsRejected) {
  EXPECT_THROW(base_report(parse("2\n1 2 +\n2 1 -\n")), NotPrimitive);
}

TEST(Bases, GlobalBaseIsStabilizationTime) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::uint64_t idx = 0; idx < 20; ++idx) {
      auto const s = sample_instance(n, 3, idx);
      ASSERT_TRUE(s);
      auto const r = base_report(s->graph);
      EXPECT_EQ(r.global, r.stabilization_time);
      EXPECT_LE(r.global, base_iteration_cap(n));
    }
  }
}

TEST(Bases, MatchDoubleCoverOracle) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (std::uint64_t idx = 0; idx < 30; ++idx) {
      auto const s = sample_instance(n, 17, idx);
      ASSERT_TRUE(s);
      auto const r = base_report(s->graph);
      auto const c = oracle::cover_bases(s->graph);
      ASSERT_TRUE(c.nonpowerful);
      ASSERT_EQ(r.pairwise, c.pairwise) << to_edge_list(s->graph);
      ASSERT_EQ(r.closed_sssd, c.closed_sssd);
    }
  }
}

TEST(Bases, PowersMatchWalkEnumeration) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::uint64_t idx = 0; idx < 10; ++idx) {
      auto const s = sample_instance(n, 23, idx);
      ASSERT_TRUE(s);
      PowerStream p(s->graph.sign_matrix(), 9);
      while (p.advance()) {
        for (Vertex u = 0; u < n; ++u) {
          auto const row = sssd_oracle_row(s->graph, u, p.exponent());
          for (Vertex v = 0; v < n; ++v) {
            ASSERT_EQ(p.current().at(u, v), row[v]);
          }
        }
      }
    }
  }
  EXPECT_THROW(sssd_oracle(two_vertex(), 0, 0, 0), ParameterError);
  EXPECT_THROW(sssd_oracle_row(two_vertex(), 0, 40, 100), BudgetExceeded);
}

TEST(Bases, BaseAtLeastExponent) {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::uint64_t idx = 0; idx < 15; ++idx) {
      auto const s = sample_instance(n, 29, idx);
      ASSERT_TRUE(s);
      auto const b = base_report(s->graph);
      auto const e = exponent_report(s->graph);
      for (std::size_t c = 0; c < n * n; ++c) {
        ASSERT_GE(b.pairwise.cells[c], e.pairwise.cells[c]);
      }
    }
  }
}

}  // namespace
}  // namespace signbase
