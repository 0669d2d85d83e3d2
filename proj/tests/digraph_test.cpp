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

#include "signbase/digraph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "signbase/oracles.hpp"

namespace signbase {
namespace {

SignedDigraph random_digraph(std::size_t n, double density, std::mt19937_64& rng) {
  SignedDigraph g(n);
  std::uniform_real_distribution<double> u(0, 1);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (u(rng) < density) g.add_arc(a, b, (rng() & 1U) ? 1 : -1);
    }
  }
  return g;
}

// All simple cycles as vertex sequences starting at their smallest vertex.
std::set<std::vector<Vertex>> brute_cycles(SignedDigraph const& g) {
  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on(g.order(), false);
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
    for (Vertex w : g.out(v)) {
      if (w == start) out.insert(path);
      if (w > start && !on[w]) {
        on[w] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    on.assign(g.order(), false);
    on[s] = true;
    dfs(dfs, s, s);
  }
  return out;
}

int parse_error_line(std::string const& text) {
  try {
    parse(text);
  } catch (ParseError const& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

TEST(Digraph, ParsesEdgeList) {
  auto const g = parse("# two vertices\n2\n1 1 +\n\n1 2 +\n2 1 -\n");
  EXPECT_EQ(g.order(), 2U);
  EXPECT_EQ(g.arc_count(), 3U);
  EXPECT_EQ(g.sign(0, 0), 1);
  EXPECT_EQ(g.sign(1, 0), -1);
  EXPECT_EQ(g.sign(1, 1), 0);
  EXPECT_EQ(to_edge_list(g), "2\n1 1 +\n1 2 +\n2 1 -\n");
  EXPECT_EQ(parse(to_edge_list(g)), g);
}

TEST(Digraph, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("2 3\n"), 1);
  EXPECT_EQ(parse_error_line("0\n"), 1);
  EXPECT_EQ(parse_error_line("2\n1 2 +\n1 3 +\n"), 3);
  EXPECT_EQ(parse_error_line("2\n1 2\n"), 2);
  EXPECT_EQ(parse_error_line("2\n1 2 *\n"), 2);
  EXPECT_EQ(parse_error_line("# c\n2\n1 2 +\n1 2 -\n"), 4);
  EXPECT_EQ(parse_error_line("2\n-1 2 +\n"), 2);
  EXPECT_EQ(parse_error_line(""), 0);
}

TEST(Digraph, AddArcRejectsDuplicatesAndRange) {
  SignedDigraph g(2);
  g.add_arc(0, 1, 1);
  EXPECT_THROW(g.add_arc(0, 1, -1), DuplicateArc);
  EXPECT_THROW(g.add_arc(0, 2, 1), ParameterError);
  EXPECT_THROW(g.add_arc(1, 0, 0), ParameterError);
}

TEST(Digraph, WalkSignIsProductOfArcSigns) {
  auto const g = parse("2\n1 1 +\n1 2 +\n2 1 -\n");
  auto const w = make_walk(g, {0, 0, 1, 0});
  EXPECT_EQ(w.length, 3U);
  EXPECT_EQ(w.sign, -1);
  EXPECT_THROW(make_walk(g, {1, 1}), ParameterError);
}

TEST(Johnson, MatchesBruteForceEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto const g = random_digraph(2 + trial % 6, 0.35, rng);
    auto const cat = cycle_catalog(g);
    std::set<std::vector<Vertex>> got;
    for (auto const& c : cat.cycles) {
      EXPECT_TRUE(got.insert(c.vertices).second) << "duplicate cycle";
      int s = 1;
      for (std::size_t i = 0; i < c.length(); ++i) {
        s *= g.sign(c.vertices[i], c.vertices[(i + 1) % c.length()]);
      }
      EXPECT_EQ(s, c.sign);
    }
    ASSERT_EQ(got, brute_cycles(g)) << to_edge_list(g);
  }
}

TEST(Johnson, CompleteDigraphCount) {
  // sum over k of C(5,k)(k-1)! plus 5 loops
  SignedDigraph g(5);
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = 0; b < 5; ++b) g.add_arc(a, b, 1);
  }
  EXPECT_EQ(cycle_catalog(g).cycles.size(), 5U + 10 + 20 + 30 + 24);
  EXPECT_THROW(cycle_catalog(g, 50), CycleCapExceeded);
}

TEST(Johnson, CatalogIsCanonical) {
  auto const g = parse("3\n1 2 +\n2 3 -\n3 1 +\n2 1 +\n3 3 -\n");
  auto const cat = cycle_catalog(g);
  ASSERT_EQ(cat.cycles.size(), 3U);
  EXPECT_EQ(cat.cycles[0].vertices, (std::vector<Vertex>{2}));
  EXPECT_EQ(cat.cycles[1].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(cat.cycles[2].vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(cat.cycles[2].sign, -1);
  EXPECT_EQ(cat.lengths, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Primitivity, FourCycleHasPeriodFour) {
  auto const g = parse("4\n1 2 +\n2 3 +\n3 4 +\n4 1 +\n");
  EXPECT_TRUE(is_strongly_connected(g));
  EXPECT_EQ(period(g), 4U);
  EXPECT_FALSE(is_primitive(g));
  try {
    require_primitive(g);
    FAIL() << "expected NotPrimitive";
  } catch (NotPrimitive const& e) {
    EXPECT_NE(std::string(e.what()).find("gcd of cycle lengths = 4"), std::string::npos);
  }
}

TEST(Primitivity, MatchesDefinitionOnAllDigraphsUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t const cells = n * n;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
      SignedDigraph g(n);
      for (std::size_t c = 0; c < cells; ++c) {
        if ((mask >> c) & 1U) g.add_arc(c / n, c % n, 1);
      }
      bool const sc = is_strongly_connected(g);
      ASSERT_EQ(is_primitive(g), oracle::primitive_by_definition(g)) << to_edge_list(g);
      if (sc && g.arc_count() > 0) {
        ASSERT_EQ(period(g), gcd_of(cycle_catalog(g).lengths));
      }
    }
  }
}

TEST(Primitivity, MatchesDefinitionOnRandomOrderFour) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 3000; ++trial) {
    auto const g = random_digraph(4, 0.3, rng);
    ASSERT_EQ(is_primitive(g), oracle::primitive_by_definition(g)) << to_edge_list(g);
  }
}

TEST(Powerful, CertificateExplainsEveryWalkSign) {
  std::mt19937_64 rng(8);
  int powerful = 0;
  int nonpowerful = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto const g = random_digraph(2 + trial % 3, 0.5, rng);
    if (!is_primitive(g)) continue;
    auto const cert = powerful_signature(g);
    auto const pair = find_distinguished_pair(cycle_catalog(g));
    ASSERT_EQ(cert.has_value(), !pair.has_value()) << to_edge_list(g);
    oracle::WalkParities walks(g, 8);
    std::uint32_t negative = 0;
    auto const arcs = walks.arcs();
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (arcs[a].sign < 0) negative |= std::uint32_t{1} << a;
    }
    bool any_ambiguous = false;
    for (std::size_t t = 1; t <= 8; ++t) {
      for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < g.order(); ++v) {
          Sign const s = walks.sign(u, v, t, negative);
          if (cert && s != Sign::Zero) {
            int const want = (t % 2 == 1 ? cert->epsilon : 1) * cert->potential[u] *
                             cert->potential[v];
            ASSERT_EQ(s, sign_of(want));
          }
          any_ambiguous = any_ambiguous || s == Sign::Ambiguous;
        }
      }
    }
    (cert ? powerful : nonpowerful) += 1;
    if (cert) {
      EXPECT_FALSE(any_ambiguous);
    }
  }
  EXPECT_GT(powerful, 20);
  EXPECT_GT(nonpowerful, 20);
}

TEST(Powerful, DistinguishedPairConditions) {
  // loop with a negative 2-cycle; loops of opposite sign; and a negative
  // loop with a positive 2-cycle, which is powerful
  auto const a = parse("2\n1 1 +\n1 2 +\n2 1 -\n");
  auto const pa = find_distinguished_pair(cycle_catalog(a));
  ASSERT_TRUE(pa);
  EXPECT_EQ(pa->condition, 1);
  auto const b = parse("2\n1 1 +\n2 2 -\n1 2 +\n2 1 +\n");
  auto const pb = find_distinguished_pair(cycle_catalog(b));
  ASSERT_TRUE(pb);
  EXPECT_EQ(pb->condition, 2);
  auto const c = parse("2\n1 1 -\n1 2 +\n2 1 +\n");
  EXPECT_FALSE(find_distinguished_pair(cycle_catalog(c)));
}

TEST(Isomorphism, RelabeledCopies) {
  auto const g = parse("3\n1 2 +\n2 3 +\n3 1 +\n3 3 -\n");
  auto const h = parse("3\n2 1 -\n1 3 +\n3 2 +\n1 1 +\n");
  EXPECT_TRUE(are_isomorphic(g, h));
  EXPECT_FALSE(are_isomorphic(g, h, true));
  EXPECT_EQ(canonical_form(g), canonical_form(h));
  auto const k = parse("3\n1 2 +\n2 3 +\n3 1 +\n2 2 +\n1 1 +\n");
  EXPECT_FALSE(are_isomorphic(g, k));
}

}  // namespace
}  // namespace signbase
