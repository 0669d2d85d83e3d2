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

// Canonical report serialization. Vertices are 1-based in every output.
// Object keys are sorted (nlohmann::json stores objects in std::map) and
// cycles are already canonical in the catalog, so equal inputs give
// byte-identical output.

#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "signbase/analysis.hpp"
#include "signbase/verify.hpp"

namespace signbase::report {

using nlohmann::json;

inline constexpr char const* kSchema = "signbase/1";

inline json table(Table const& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.n; ++j) row.push_back(t(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json cycle(Cycle const& c) {
  json vs = json::array();
  for (Vertex v : c.vertices) vs.push_back(v + 1);
  return {{"vertices", vs}, {"length", c.length()}, {"sign", c.sign > 0 ? "+" : "-"}};
}

inline json arcs(SignedDigraph const& g) {
  json a = json::array();
  for (auto const& arc : g.arcs()) {
    a.push_back({arc.from + 1, arc.to + 1, arc.sign > 0 ? "+" : "-"});
  }
  return a;
}

struct Timing {
  double analysis_ms = 0;
};

/// Report body: everything except the input descriptor and timing.
inline json body(Analysis const& a) {
  json j;
  j["order"] = a.graph.order();
  j["arcs"] = arcs(a.graph);
  j["primitive"] = {{"value", true},
                    {"cycle_lengths", a.catalog.lengths},
                    {"cycle_count", a.catalog.cycles.size()},
                    {"gcd", gcd_of(a.catalog.lengths)}};
  json np = {{"value", a.pair.has_value()}};
  if (a.pair) {
    np["distinguished_pair"] = {{"condition", a.pair->condition},
                                {"first", cycle(a.pair->first)},
                                {"second", cycle(a.pair->second)}};
  }
  j["nonpowerful"] = np;
  j["exponents"] = {{"pairwise", table(a.exponents.pairwise)},
                    {"per_vertex", a.exponents.per_vertex},
                    {"ordered", a.exponents.ordered},
                    {"global", a.exponents.global}};
  j["c_walks"] = {{"pairwise", table(a.walks.pairwise)},
                  {"per_vertex", a.walks.eccentricity},
                  {"ordered", a.walks.ordered},
                  {"global", a.walks.global}};
  j["bound"] = {{"frobenius", a.bound.frobenius},
                {"pairwise", table(a.bound.pairwise)},
                {"global", a.bound.global}};
  if (a.bases) {
    auto const& b = *a.bases;
    j["bases"] = {{"pairwise", table(b.pairwise)},
                  {"per_vertex", b.per_vertex},
                  {"ordered", b.ordered},
                  {"global", b.global},
                  {"stabilization_time", b.stabilization_time},
                  {"closed_sssd", b.closed_sssd}};
  }
  return j;
}

inline json analysis(Analysis const& a, std::string const& descriptor,
                     std::optional<Timing> timing = {}) {
  json j = body(a);
  j["schema"] = kSchema;
  j["input"] = descriptor;
  if (timing) j["timing"] = {{"analysis_ms", timing->analysis_ms}};
  return j;
}

inline json outcome(verify::Outcome const& o) {
  return {{"suite", o.suite},       {"instance", o.instance}, {"claim", o.claim},
          {"expected", o.expected}, {"computed", o.computed}, {"pass", o.pass},
          {"witness", o.witness}};
}

inline json outcomes(std::vector<verify::Outcome> const& list) {
  json arr = json::array();
  for (auto const& o : list) arr.push_back(outcome(o));
  auto const s = verify::summarize(list);
  return {{"schema", kSchema},
          {"outcomes", arr},
          {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}}};
}

inline std::string dump(json const& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Text

namespace detail {

inline std::string row(std::vector<std::size_t> const& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string cycle_text(Cycle const& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    s += (i ? " " : "") + std::to_string(c.vertices[i] + 1);
  }
  return s + ") length " + std::to_string(c.length()) + " sign " + (c.sign > 0 ? "+" : "-");
}

inline void table_text(std::ostringstream& os, Table const& t) {
  for (std::size_t i = 0; i < t.n; ++i) {
    os << " ";
    for (std::size_t j = 0; j < t.n; ++j) os << " " << t(i, j);
    os << "\n";
  }
}

}  // namespace detail

inline std::string analysis_text(Analysis const& a, std::string const& descriptor,
                                 std::optional<Timing> timing = {}) {
  std::ostringstream os;
  os << "input: " << descriptor << "\n";
  os << "order: " << a.graph.order() << ", arcs: " << a.graph.arc_count() << "\n";
  os << "primitive: yes (C(S) = {" << detail::row(a.catalog.lengths) << "}, "
     << a.catalog.cycles.size() << " cycles)\n";
  if (a.pair) {
    os << "nonpowerful: yes (condition " << a.pair->condition << ": "
       << detail::cycle_text(a.pair->first) << "; " << detail::cycle_text(a.pair->second)
       << ")\n";
  } else {
    os << "nonpowerful: no\n";
  }
  os << "exp(S) = " << a.exponents.global << "\n";
  os << "exp_S(v_i): " << detail::row(a.exponents.per_vertex) << "\n";
  os << "exp(k): " << detail::row(a.exponents.ordered) << "\n";
  os << "exp_S(v_i, v_j):\n";
  detail::table_text(os, a.exponents.pairwise);
  os << "d(C(S)) = " << a.walks.global << ", phi = " << a.bound.frobenius
     << ", bound = " << a.bound.global << "\n";
  if (a.bases) {
    auto const& b = *a.bases;
    os << "l(S) = " << b.global << "\n";
    os << "l_S(v_i): " << detail::row(b.per_vertex) << "\n";
    os << "l(k): " << detail::row(b.ordered) << "\n";
    os << "l_S(v_i, v_j):\n";
    detail::table_text(os, b.pairwise);
    os << "stabilization time: " << b.stabilization_time << "\n";
    os << "closed SSSD times: " << detail::row(b.closed_sssd) << "\n";
  }
  if (timing) os << "analysis time: " << timing->analysis_ms << " ms\n";
  return os.str();
}

inline std::string outcome_line(verify::Outcome const& o) {
  std::string s = std::string(o.pass ? "PASS" : "FAIL") + "  " + o.suite + "  " +
                  o.instance + "  " + o.claim + "  expected " + o.expected +
                  "  computed " + o.computed;
  if (!o.pass && !o.witness.empty()) s += "  witness " + o.witness;
  return s;
}

}  // namespace signbase::report
