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

#include "signbase/oracles.hpp"

#include <gtest/gtest.h>

#include "signbase/bases.hpp"
#include "signbase/sampler.hpp"

namespace signbase {
namespace {

TEST(Oracles, WalkParitiesAgreeWithDepthFirstEnumeration) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::uint64_t idx = 0; idx < 25; ++idx) {
      auto const s = sample_instance(n, 41, idx);
      ASSERT_TRUE(s);
      if (s->graph.arc_count() > oracle::WalkParities::kMaxArcs) continue;
      oracle::WalkParities w(s->graph, 7);
      std::uint32_t negative = 0;
      for (std::size_t a = 0; a < w.arcs().size(); ++a) {
        if (w.arcs()[a].sign < 0) negative |= std::uint32_t{1} << a;
      }
      for (std::size_t t = 1; t <= 7; ++t) {
        for (Vertex u = 0; u < n; ++u) {
          auto const row = sssd_oracle_row(s->graph, u, t);
          for (Vertex v = 0; v < n; ++v) ASSERT_EQ(w.sign(u, v, t, negative), row[v]);
        }
      }
    }
  }
}

TEST(Oracles, WalkParitiesCoverAllSignings) {
  auto const g = parse("2\n1 1 +\n1 2 +\n2 1 +\n");
  oracle::WalkParities w(g, 4);
  ASSERT_EQ(w.arcs().size(), 3U);
  for (std::uint32_t neg = 0; neg < 8; ++neg) {
    SignedDigraph h(2);
    for (std::size_t a = 0; a < 3; ++a) {
      h.add_arc(w.arcs()[a].from, w.arcs()[a].to, ((neg >> a) & 1U) ? -1 : 1);
    }
    for (std::size_t t = 1; t <= 4; ++t) {
      for (Vertex u = 0; u < 2; ++u) {
        auto const row = sssd_oracle_row(h, u, t);
        for (Vertex v = 0; v < 2; ++v) EXPECT_EQ(w.sign(u, v, t, neg), row[v]);
      }
    }
  }
}

TEST(Oracles, PrimitiveByDefinition) {
  EXPECT_TRUE(oracle::primitive_by_definition(parse("1\n1 1 +\n")));
  EXPECT_FALSE(oracle::primitive_by_definition(parse("1\n")));
  EXPECT_FALSE(oracle::primitive_by_definition(parse("2\n1 2 +\n2 1 +\n")));
  EXPECT_TRUE(oracle::primitive_by_definition(parse("2\n1 1 +\n1 2 +\n2 1 +\n")));
}

TEST(Oracles, CoverDetectsPowerful) {
  auto const powerful = parse("2\n1 1 -\n1 2 +\n2 1 +\n");
  EXPECT_FALSE(oracle::cover_bases(powerful).nonpowerful);
  auto const np = parse("2\n1 1 +\n1 2 +\n2 1 -\n");
  auto const c = oracle::cover_bases(np);
  EXPECT_TRUE(c.nonpowerful);
  EXPECT_EQ(c.pairwise.cells, (std::vector<std::size_t>{2, 3, 3, 4}));
}

}  // namespace
}  // namespace signbase
