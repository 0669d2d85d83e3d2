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

// Verification harness: closed-form reproduction on the named families,
// inequality checks on every analyzed instance, exhaustive cross-validation
// at tiny orders, and sampling against the gap intervals.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "signbase/analysis.hpp"
#include "signbase/bases.hpp"
#include "signbase/digraph.hpp"
#include "signbase/error.hpp"
#include "signbase/exponents.hpp"
#include "signbase/families.hpp"
#include "signbase/formulas.hpp"
#include "signbase/oracles.hpp"
#include "signbase/parallel.hpp"
#include "signbase/sampler.hpp"

namespace signbase::verify {

struct Outcome {
  std::string suite;
  std::string instance;  // family spec or sample coordinates
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string witness;  // edge list of the instance, set on failure
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

inline Summary summarize(std::vector<Outcome> const& outcomes) {
  Summary s;
  for (auto const& o : outcomes) {
    ++s.total;
    ++(o.pass ? s.passed : s.failed);
  }
  return s;
}

/// String order in which digit runs compare as numbers, so n=9 sorts
/// before n=10.
inline bool natural_less(std::string const& a, std::string const& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i;
      std::size_t j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      auto ta = a.substr(i, i2 - i);
      auto tb = b.substr(j, j2 - j);
      ta.erase(0, std::min(ta.find_first_not_of('0'), ta.size()));
      tb.erase(0, std::min(tb.find_first_not_of('0'), tb.size()));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

/// Canonical report order: suite, then instance, then claim.
inline void canonical_order(std::vector<Outcome>& outcomes) {
  std::stable_sort(outcomes.begin(), outcomes.end(),
                   [](Outcome const& x, Outcome const& y) {
                     if (x.suite != y.suite) return natural_less(x.suite, y.suite);
                     if (x.instance != y.instance) return natural_less(x.instance, y.instance);
                     return natural_less(x.claim, y.claim);
                   });
}

// ---------------------------------------------------------------------------
// Formatting

template <typename T>
std::string list(std::vector<T> const& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

/// One-line edge list, e.g. "2; 1 1 +; 1 2 +; 2 1 -".
inline std::string inline_edges(SignedDigraph const& g) {
  std::string s = std::to_string(g.order());
  for (auto const& a : g.arcs()) {
    s += "; " + std::to_string(a.from + 1) + " " + std::to_string(a.to + 1) +
         (a.sign > 0 ? " +" : " -");
  }
  return s;
}

inline std::vector<Int> as_int(std::vector<std::size_t> const& v) {
  return {v.begin(), v.end()};
}

// ---------------------------------------------------------------------------
// Named instances

inline Variant same_sign_variant(Family f) {
  switch (f) {
    case Family::D1: return Variant::SameSign;
    case Family::D2: return Variant::SameSign;
    case Family::Dki: return Variant::Ski;
    case Family::ScriptL: return Variant::T;
    case Family::F: return Variant::S0;
    case Family::F1: return Variant::S1;
    case Family::F2: return Variant::S2;
    case Family::F3: return Variant::S3;
    case Family::F4: return Variant::S4;
    case Family::F5: return Variant::S5;
    case Family::F6: return Variant::S6;
    case Family::F7: return Variant::S7;
    case Family::FPrime: return Variant::Si;
    case Family::B1: return Variant::Q1;
    case Family::B2: return Variant::Q2;
    case Family::B3: return Variant::Q3;
    case Family::B4: return Variant::Q4;
  }
  return Variant::SameSign;
}

inline bool is_valid(FamilySpec const& s) {
  try {
    validate(s);
    return true;
  } catch (ParameterError const&) {
    return false;
  }
}

/// Every valid parameter tuple of every family at order n, unsigned.
inline std::vector<FamilySpec> underlying_catalogue(std::size_t n) {
  std::vector<FamilySpec> out;
  auto keep = [&](FamilySpec s) {
    if (is_valid(s)) out.push_back(s);
  };
  for (auto const& e : kFamilyNames) {
    FamilySpec s{e.family, n, 0, 0, AllPositive{}};
    if (e.family == Family::Dki) {
      for (std::size_t k = 1; k + 2 <= n; ++k) {
        for (std::size_t i = 1; i <= k + 1; ++i) {
          keep({Family::Dki, n, k, i, AllPositive{}});
        }
      }
    } else if (e.family == Family::FPrime) {
      for (std::size_t i = 2; i + 3 <= n; ++i) {
        keep({Family::FPrime, n, 0, i, AllPositive{}});
      }
    } else {
      keep(s);
    }
  }
  return out;
}

/// The same tuples with their sign-constant preset, plus the split D2.
inline std::vector<FamilySpec> signed_catalogue(std::size_t n) {
  std::vector<FamilySpec> out;
  for (auto s : underlying_catalogue(n)) {
    s.policy = Preset{same_sign_variant(s.family)};
    out.push_back(s);
    if (s.family == Family::D2) {
      s.policy = Preset{Variant::SplitD2};
      out.push_back(s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inequality battery

namespace claims {

inline std::string const kExpBound =
    "exp_S(u,v) <= max(1, d_C(u,v) + phi(C(S)))";
inline std::string const kBaseVsExp =
    "l_S(u) <= exp_S(u) + r(u)";
inline std::string const kBaseStep =
    "l(k) <= l(k-1) + 1";
inline std::string const kGeneralBound =
    "l(k) <= 2n^2-6n+k+4 off D1 and D2";
inline std::string const kInterval =
    "p(2q-1) <= l(S) <= 2p(q-1)+n";
inline std::string const kStructure =
    "large l(k) forces C(S)={p1,p2}, gcd 1, p1+p2>n, sign-constant "
    "classes, distinguished mixed pairs";
inline std::string const kCaseBound =
    "large l(k) <= (2n-1)p1 | (2n-2)p1+k | n+2p1(p2-1)";
inline std::string const kGap =
    "no l(k) inside a gap interval";

/// Claims of the inequality battery, in report order.
inline std::vector<std::string> const kBattery{kExpBound, kBaseVsExp, kBaseStep, kGeneralBound,
                                              kInterval, kStructure, kCaseBound, kGap};

}  // namespace claims

/// Checks run on every analyzed instance. Each is either inapplicable or
/// yields a verdict.
struct Check {
  std::string claim;
  bool applicable = false;
  bool pass = true;
  std::string expected;
  std::string computed;
};

/// Interval of values excluded for l(k) at order n >= 14.
struct GapInterval {
  Int lo;
  Int hi;
};

inline std::vector<GapInterval> gap_intervals(std::size_t order, std::size_t kk) {
  Int const n = static_cast<Int>(order);
  Int const k = static_cast<Int>(kk);
  Int const q = 2 * n * n;
  std::vector<GapInterval> g;
  Int const low_start = k <= n - 2 ? q - 8 * n + 10 + k : q - 8 * n + 9 + k;
  if (n % 2 == 0) {
    g.push_back({low_start, q - 4 * n + k});
  } else {
    g.push_back({q - 6 * n + 5 + k, q - 4 * n + k});
    g.push_back({low_start, q - 6 * n + k + 1});
  }
  g.push_back({q - 9 * n + 13, q - 8 * n + 2 + k});
  return g;
}

inline bool distinguished(Cycle const& a, Cycle const& b) {
  bool const odd_a = a.length() % 2 == 1;
  bool const odd_b = b.length() % 2 == 1;
  if (odd_a && !odd_b && b.sign < 0) return true;
  if (odd_b && !odd_a && a.sign < 0) return true;
  return odd_a && odd_b && a.sign != b.sign;
}

/// True when all cycles of each length share one sign.
inline bool sign_constant_classes(CycleCatalog const& cat) {
  std::map<std::size_t, int> sign;
  for (auto const& c : cat.cycles) {
    auto const [it, fresh] = sign.emplace(c.length(), c.sign);
    if (!fresh && it->second != c.sign) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline SignedDigraph family_graph(Family f, std::size_t n) {
  return underlying_digraph({f, n, 0, 0, AllPositive{}});
}

// l(k) >= (3/2)n^2 - 3n + k + 4, kept in integers.
inline bool large_base(std::size_t n, std::size_t k, std::size_t l) {
  return 2 * l >= 3 * n * n - 6 * n + 2 * k + 8;
}

}  // namespace detail

inline std::vector<Check> lemma_checks(Analysis const& a) {
  std::vector<Check> out;
  auto const& g = a.graph;
  std::size_t const n = g.order();
  auto const& cat = a.catalog;

  {
    // exp counts positive lengths only, while a C(S)-walk may have length 0,
    // so the bound is read as max(1, d_C + phi)
    Check c{claims::kExpBound, true, true, "all pairs", ""};
    for (Vertex u = 0; u < n && c.pass; ++u) {
      for (Vertex v = 0; v < n && c.pass; ++v) {
        if (a.exponents.pairwise(u, v) > std::max<std::size_t>(1, a.bound.pairwise(u, v))) {
          c.pass = false;
          c.computed = "exp(" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                       ")=" + std::to_string(a.exponents.pairwise(u, v)) + " > " +
                       std::to_string(a.bound.pairwise(u, v));
        }
      }
    }
    if (c.pass) {
      c.computed = "exp(S)=" + std::to_string(a.exponents.global) +
                   ", d(C(S))+phi=" + std::to_string(a.bound.global);
    }
    out.push_back(c);
  }
  if (!a.bases) {
    return out;
  }
  auto const& b = *a.bases;
  {
    Check c{claims::kBaseVsExp, true, true, "all vertices", ""};
    for (Vertex u = 0; u < n && c.pass; ++u) {
      std::size_t const rhs = a.exponents.per_vertex[u] + b.closed_sssd[u];
      if (b.per_vertex[u] > rhs) {
        c.pass = false;
        c.computed = "u=" + std::to_string(u + 1) + ": " +
                     std::to_string(b.per_vertex[u]) + " > " + std::to_string(rhs);
      }
    }
    if (c.pass) c.computed = "l=" + list(b.per_vertex);
    out.push_back(c);
  }
  {
    Check c{claims::kBaseStep, true, true, "2 <= k <= n", list(b.ordered)};
    for (std::size_t k = 1; k < n; ++k) {
      if (b.ordered[k] > b.ordered[k - 1] + 1) c.pass = false;
    }
    out.push_back(c);
  }
  if (n >= 6) {
    bool const d12 = are_isomorphic(g, detail::family_graph(Family::D1, n)) ||
                     are_isomorphic(g, detail::family_graph(Family::D2, n));
    if (!d12) {
      Check c{claims::kGeneralBound, true, true, "", list(b.ordered)};
      std::vector<std::size_t> bound;
      for (std::size_t k = 1; k <= n; ++k) {
        bound.push_back(2 * n * n - 6 * n + k + 4);
        if (b.ordered[k - 1] > bound.back()) c.pass = false;
      }
      c.expected = "<= " + list(bound);
      out.push_back(c);
    }
  }
  if (n >= 6 && cat.lengths.size() == 2 && cat.lengths[0] + cat.lengths[1] > n &&
      sign_constant_classes(cat)) {
    std::size_t const p = cat.lengths[0];
    std::size_t const q = cat.lengths[1];
    std::size_t const lo = p * (2 * q - 1);
    std::size_t const hi = 2 * p * (q - 1) + n;
    out.push_back({claims::kInterval, true,
                   lo <= b.global && b.global <= hi,
                   "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                   std::to_string(b.global)});
  }
  if (n >= 6) {
    std::vector<std::size_t> triggered;
    for (std::size_t k = 1; k <= n; ++k) {
      if (detail::large_base(n, k, b.ordered[k - 1])) triggered.push_back(k);
    }
    if (!triggered.empty()) {
      Check s{claims::kStructure,
              true, true, "all conclusions", ""};
      auto const& L = cat.lengths;
      std::string why;
      if (L.size() != 2) {
        why = "|C(S)|=" + std::to_string(L.size());
      } else if (std::gcd(L[0], L[1]) != 1) {
        why = "gcd=" + std::to_string(std::gcd(L[0], L[1]));
      } else if (L[0] + L[1] <= n) {
        why = "p1+p2=" + std::to_string(L[0] + L[1]);
      } else if (!sign_constant_classes(cat)) {
        why = "mixed signs within a length class";
      } else {
        for (auto const* x : cat.of_length(L[0])) {
          for (auto const* y : cat.of_length(L[1])) {
            if (why.empty() && !distinguished(*x, *y)) why = "non-distinguished mixed pair";
          }
        }
      }
      s.pass = why.empty();
      s.computed = s.pass ? "C(S)=" + list(L) : why;
      out.push_back(s);
      if (L.size() == 2) {
        Check c{claims::kCaseBound, true, true, "", ""};
        std::size_t const p1 = L[0];
        std::size_t const p2 = L[1];
        std::vector<std::size_t> bounds;
        std::vector<std::size_t> values;
        for (std::size_t k : triggered) {
          std::size_t bound = 0;
          if (p2 == n) {
            bound = k <= p1 ? (2 * n - 1) * p1 : (2 * n - 2) * p1 + k;
          } else {
            bound = n + 2 * p1 * (p2 - 1);
          }
          bounds.push_back(bound);
          values.push_back(b.ordered[k - 1]);
          if (b.ordered[k - 1] > bound) c.pass = false;
        }
        c.expected = "<= " + list(bounds) + " at k=" + list(triggered);
        c.computed = list(values);
        out.push_back(c);
      }
    }
  }
  if (n >= 14) {
    Check c{claims::kGap, true, true, "outside", ""};
    for (std::size_t k = 1; k <= n && c.pass; ++k) {
      auto const l = static_cast<Int>(b.ordered[k - 1]);
      for (auto const& gi : gap_intervals(n, k)) {
        if (gi.lo <= l && l <= gi.hi) {
          c.pass = false;
          c.computed = "l(" + std::to_string(k) + ")=" + std::to_string(l) + " in [" +
                       std::to_string(gi.lo) + ", " + std::to_string(gi.hi) + "]";
        }
      }
    }
    if (c.pass) c.computed = list(b.ordered);
    out.push_back(c);
  }
  return out;
}

/// Battery verdicts of one instance as outcomes.
inline void append_battery(std::vector<Outcome>& out, std::string const& suite,
                           std::string const& instance, Analysis const& a) {
  for (auto const& c : lemma_checks(a)) {
    if (c.applicable) {
      out.push_back({suite, instance, c.claim, c.expected, c.computed, c.pass,
                     c.pass ? "" : inline_edges(a.graph)});
    }
  }
}

/// Folds per-instance verdicts into one outcome per claim.
class Aggregate {
 public:
  void add(std::string const& claim, bool pass, std::string const& instance,
           std::string const& witness, std::string const& detail = {}) {
    auto& e = entries_[claim];
    ++e.checked;
    if (!pass) {
      if (e.failed == 0) {
        e.first = instance + ": " + detail;
        e.witness = witness;
      }
      ++e.failed;
    }
  }

  void add_battery(Analysis const& a, std::string const& instance) {
    for (auto const& c : lemma_checks(a)) {
      if (c.applicable) {
        add(c.claim, c.pass, instance, inline_edges(a.graph), c.computed);
      }
    }
  }

  /// Makes sure a claim is reported even when nothing was checked.
  void declare(std::string const& claim) { entries_[claim]; }

  /// Adds the tallies of `other`; first failures of `this` take precedence.
  void merge(Aggregate const& other) {
    for (auto const& [claim, o] : other.entries_) {
      auto& e = entries_[claim];
      if (e.failed == 0 && o.failed > 0) {
        e.first = o.first;
        e.witness = o.witness;
      }
      e.checked += o.checked;
      e.failed += o.failed;
    }
  }

  std::size_t checked(std::string const& claim) const {
    auto const it = entries_.find(claim);
    return it == entries_.end() ? 0 : it->second.checked;
  }

  void emit(std::vector<Outcome>& out, std::string const& suite,
            std::string const& instance) const {
    for (auto const& [claim, e] : entries_) {
      std::string computed = std::to_string(e.failed) + " violations in " +
                             std::to_string(e.checked) + " checked";
      if (e.failed > 0) computed += "; first " + e.first;
      out.push_back({suite, instance, claim, "0 violations", computed,
                     e.failed == 0, e.witness});
    }
  }

 private:
  struct Entry {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first;
    std::string witness;
  };
  std::map<std::string, Entry> entries_;
};

// ---------------------------------------------------------------------------
// Formula suites

namespace detail {

inline Outcome compare_rows(std::string suite, std::string instance,
                            std::string claim, std::vector<Int> const& expected,
                            std::vector<Int> const& computed,
                            SignedDigraph const& g) {
  bool const pass = expected == computed;
  return {std::move(suite), std::move(instance), std::move(claim), list(expected),
          list(computed), pass, pass ? "" : inline_edges(g)};
}

inline std::vector<Int> at_vertices(std::vector<std::size_t> const& per_vertex,
                                    std::vector<Vertex> const& vertex) {
  std::vector<Int> out;
  for (Vertex v : vertex) out.push_back(static_cast<Int>(per_vertex[v]));
  return out;
}

inline std::string vertex_claim(std::string const& what,
                                std::vector<Vertex> const& vertex) {
  std::vector<std::size_t> labels;
  for (Vertex v : vertex) labels.push_back(v + 1);
  return what + " at v_sigma(k), sigma=" + list(labels);
}

inline std::vector<std::size_t> order_range(std::size_t lo, std::size_t hi) {
  if (lo == 0 || lo > hi) {
    throw ParameterError("invalid order range " + std::to_string(lo) + ".." +
                         std::to_string(hi));
  }
  std::vector<std::size_t> v;
  for (std::size_t n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

}  // namespace detail

inline std::vector<Outcome> verify_exponent_formulas(std::size_t n_lo,
                                                     std::size_t n_hi) {
  std::string const suite = "exponents";
  std::vector<FamilySpec> specs;
  for (std::size_t n : detail::order_range(n_lo, n_hi)) {
    for (auto const& s : underlying_catalogue(n)) specs.push_back(s);
  }
  auto per = parallel_map(specs.size(), [&](std::size_t idx) {
    auto const& spec = specs[idx];
    std::vector<Outcome> out;
    auto const g = generate(spec);
    auto const a = analyze(g, false);
    std::string const inst = describe(spec);
    if (auto f = exponent_formula(spec)) {
      out.push_back(detail::compare_rows(suite, inst, "exp(k) = " + f->text, f->values,
                                         as_int(a.exponents.ordered), g));
      if (!f->vertex.empty()) {
        out.push_back(detail::compare_rows(
            suite, inst, detail::vertex_claim("exp(k) = " + f->text, f->vertex),
            f->values, detail::at_vertices(a.exponents.per_vertex, f->vertex), g));
      }
    }
    if (spec.family == Family::Dki) {
      // the pair realizing exp(S) meets the bound d_C + phi with equality
      std::size_t const n = spec.n;
      std::size_t const k = spec.k;
      std::size_t const i = spec.i;
      Vertex const from = n - 1;
      Vertex const to = i - 1 < k ? n - k + i - 1 : 0;
      std::size_t const want = i - 1 < k ? n + k - i + (n - 1) * (n - k - 1)
                                         : (n - 1) * (n - k);
      std::string const pair = "(v_" + std::to_string(from + 1) + ", v_" +
                               std::to_string(to + 1) + ")";
      std::vector<Int> expected{static_cast<Int>(want), static_cast<Int>(want),
                                static_cast<Int>(want)};
      std::vector<Int> computed{static_cast<Int>(a.exponents.global),
                                static_cast<Int>(a.exponents.pairwise(from, to)),
                                static_cast<Int>(a.bound.pairwise(from, to))};
      out.push_back(detail::compare_rows(
          suite, inst, "exp(S) = exp" + pair + " = d_C" + pair + " + phi", expected,
          computed, g));
    }
    {
      auto const& e = a.exponents.ordered;
      bool step = true;
      for (std::size_t k = 1; k < e.size(); ++k) step = step && e[k] <= e[k - 1] + 1;
      out.push_back({suite, inst, "exp(k) <= exp(k-1) + 1", "2 <= k <= n", list(e), step,
                     step ? "" : inline_edges(g)});
    }
    append_battery(out, suite, inst, a);
    return out;
  });
  std::vector<Outcome> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  canonical_order(out);
  return out;
}

namespace detail {

// Base-formula outcomes of one signed family instance; shared by the base
// suite and the gap scan.
inline void base_instance(std::vector<Outcome>& out, std::string const& suite,
                          FamilySpec const& spec, Analysis const& a) {
  auto const& g = a.graph;
  std::string const inst = describe(spec);
  auto const& b = *a.bases;
  auto const ordered = as_int(b.ordered);
  auto const* p = std::get_if<Preset>(&spec.policy);
  if (p != nullptr && p->variant == Variant::SplitD2) {
    auto const bound = d2_split_upper_bound(spec.n);
    bool pass = true;
    for (std::size_t k = 0; k < spec.n; ++k) {
      if (ordered[k] > bound.values[k]) pass = false;
    }
    out.push_back({suite, inst, "l(k) <= " + bound.text, "<= " + list(bound.values),
                   list(ordered), pass, pass ? "" : inline_edges(g)});
    return;
  }
  auto const f = base_formula(spec);
  if (!f) return;
  out.push_back(compare_rows(suite, inst, "l(k) = " + f->text, f->values, ordered, g));
  if (!f->vertex.empty()) {
    out.push_back(compare_rows(suite, inst, vertex_claim("l(k) = " + f->text, f->vertex),
                               f->values, at_vertices(b.per_vertex, f->vertex), g));
  }
}

}  // namespace detail

/// `signings` extra random admissible signings per instance test that the
/// values depend only on the sign-class structure.
inline std::vector<Outcome> verify_base_formulas(std::size_t n_lo, std::size_t n_hi,
                                                 std::uint64_t seed = 1,
                                                 std::size_t signings = 2) {
  std::string const suite = "bases";
  std::vector<FamilySpec> specs;
  for (std::size_t n : detail::order_range(n_lo, n_hi)) {
    for (auto const& s : signed_catalogue(n)) specs.push_back(s);
  }
  auto per = parallel_map(specs.size(), [&](std::size_t idx) {
    auto const& spec = specs[idx];
    std::vector<Outcome> out;
    auto const g = generate(spec);
    auto const a = analyze(g);
    std::string const inst = describe(spec);
    detail::base_instance(out, suite, spec, a);
    auto rng = sample_rng(seed, idx);
    auto const variant = std::get<Preset>(spec.policy).variant;
    std::string mismatch;
    for (std::size_t r = 0; r < signings; ++r) {
      auto const alt = random_preset(variant, spec, [&] { return (rng() >> 63) != 0; });
      auto const lb = base_report(alt);
      if (lb.ordered != a.bases->ordered && mismatch.empty()) {
        mismatch = list(lb.ordered) + " for " + inline_edges(alt);
      }
    }
    out.push_back({suite, inst, "l(k) independent of the admissible signing",
                   list(a.bases->ordered), mismatch.empty() ? "same" : mismatch,
                   mismatch.empty(), mismatch.empty() ? "" : inline_edges(g)});
    append_battery(out, suite, inst, a);
    return out;
  });
  std::vector<Outcome> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  canonical_order(out);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive tiny orders

struct TinyOptions {
  std::size_t n_max = 3;           // exhaustive up to this order (<= 3)
  std::size_t max_t = 10;          // walk length for the power check
  std::size_t samples = 200;       // per order in 4..6
  std::uint64_t seed = 1;
  std::size_t walk_budget = kDefaultWalkBudget;
};

namespace detail {

inline std::size_t ipow3(std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

inline std::string const kPowers = "sign-semiring powers match walk enumeration";
inline std::string const kPrimitive = "cycle-gcd primitivity matches the boolean-power definition";
inline std::string const kPowerful =
    "distinguished pair exists iff no switching certificate iff the double cover fills";
inline std::string const kExp = "exponents match the reach-set oracle";
inline std::string const kBase = "bases match the double-cover oracle";
inline std::string const kClosed = "closed SSSD times match the double-cover oracle";

// Cross-checks of one primitive instance that do not involve walk lists.
inline void cross_check(Aggregate& agg, SignedDigraph const& g,
                        std::string const& instance) {
  auto const a = analyze(g);
  auto const w = inline_edges(g);
  bool const pair = a.pair.has_value();
  bool const cert = powerful_signature(g).has_value();
  auto const cover = oracle::cover_bases(g);
  agg.add(kPowerful, pair == !cert && pair == cover.nonpowerful, instance, w,
          "pair=" + std::to_string(pair) + " certificate=" + std::to_string(cert) +
              " cover=" + std::to_string(cover.nonpowerful));
  agg.add(kExp, oracle::walk_exponents(g) == a.exponents.pairwise, instance, w);
  if (pair && cover.nonpowerful) {
    agg.add(kBase, cover.pairwise == a.bases->pairwise, instance, w);
    agg.add(kClosed, cover.closed_sssd == a.bases->closed_sssd, instance, w);
  }
  agg.add_battery(a, instance);
}

}  // namespace detail

inline std::vector<Outcome> exhaustive_tiny(TinyOptions const& opt = {}) {
  std::string const suite = "tiny";
  if (opt.n_max > 3) {
    throw ParameterError("exhaustive enumeration is limited to n <= 3");
  }
  std::vector<Outcome> out;
  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    std::size_t const cells = n * n;
    // one job per underlying digraph; signings are enumerated inside
    auto per = parallel_map(std::size_t{1} << cells, [&](std::size_t support) {
      Aggregate agg;
      SignedDigraph u(n);
      for (std::size_t c = 0; c < cells; ++c) {
        if ((support >> c) & 1U) u.add_arc(c / n, c % n, 1);
      }
      std::size_t const m = u.arc_count();
      std::array<std::size_t, 4> counts{std::size_t{1} << m, 0, 0, 0};
      if (!is_strongly_connected(u)) return std::pair{agg, counts};
      counts[1] = std::size_t{1} << m;
      bool const prim = is_primitive(u, cycle_catalog(u));
      agg.add(detail::kPrimitive, prim == oracle::primitive_by_definition(u),
              "support " + std::to_string(support), inline_edges(u));
      oracle::WalkParities const walks(u, opt.max_t);
      auto const& arcs = walks.arcs();
      for (std::uint32_t neg = 0; neg < (std::uint32_t{1} << m); ++neg) {
        SignedDigraph g(n);
        for (std::size_t a = 0; a < m; ++a) {
          g.add_arc(arcs[a].from, arcs[a].to, ((neg >> a) & 1U) ? -1 : 1);
        }
        std::string const inst = inline_edges(g);
        PowerStream stream(g.sign_matrix(), opt.max_t);
        std::string bad;
        while (stream.advance() && bad.empty()) {
          std::size_t const t = stream.exponent();
          for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < n; ++y) {
              if (bad.empty() && stream.current().at(x, y) != walks.sign(x, y, t, neg)) {
                bad = "t=" + std::to_string(t) + " entry (" + std::to_string(x + 1) +
                      "," + std::to_string(y + 1) + ")";
              }
            }
          }
        }
        agg.add(detail::kPowers, bad.empty(), inst, inst, bad);
        if (prim) {
          ++counts[2];
          detail::cross_check(agg, g, inst);
          if (!powerful_signature(g)) ++counts[3];
        }
      }
      return std::pair{agg, counts};
    });
    Aggregate total;
    std::array<std::size_t, 4> counts{0, 0, 0, 0};
    total.declare(detail::kPowers);
    for (auto const& [agg, c] : per) {
      total.merge(agg);
      for (std::size_t j = 0; j < 4; ++j) counts[j] += c[j];
    }
    std::string const inst = "all signed digraphs (n=" + std::to_string(n) + ")";
    out.push_back({suite, inst, "configurations scanned", "3^" + std::to_string(cells),
                   "scanned=" + std::to_string(counts[0]) +
                       " strongly connected=" + std::to_string(counts[1]) +
                       " primitive=" + std::to_string(counts[2]) +
                       " nonpowerful=" + std::to_string(counts[3]),
                   counts[0] == detail::ipow3(cells), ""});
    total.emit(out, suite, inst);
  }
  // sampled spot checks at n = 4..6, including powerful and non-primitive draws
  for (std::size_t n = 4; n <= 6 && opt.samples > 0; ++n) {
    std::size_t const max_t = n <= 5 ? 12 : 10;
    auto per = parallel_map(opt.samples, [&](std::size_t idx) {
      Aggregate agg;
      auto rng = sample_rng(opt.seed + n, idx);
      auto const g = signbase::detail::draw(n, rng);
      std::string const inst = "draw(n=" + std::to_string(n) + ",seed=" +
                               std::to_string(opt.seed) + ",index=" + std::to_string(idx) + ")";
      std::string bad;
      PowerStream stream(g.sign_matrix(), max_t);
      while (stream.advance() && bad.empty()) {
        std::size_t const t = stream.exponent();
        for (Vertex x = 0; x < n && bad.empty(); ++x) {
          auto const row = sssd_oracle_row(g, x, t, opt.walk_budget);
          for (Vertex y = 0; y < n; ++y) {
            if (bad.empty() && stream.current().at(x, y) != row[y]) {
              bad = "t=" + std::to_string(t) + " entry (" + std::to_string(x + 1) + "," +
                    std::to_string(y + 1) + ")";
            }
          }
        }
      }
      agg.add(detail::kPowers, bad.empty(), inst, inline_edges(g), bad);
      bool const prim = period(g) == 1;
      agg.add(detail::kPrimitive, prim == oracle::primitive_by_definition(g), inst,
              inline_edges(g));
      if (prim) detail::cross_check(agg, g, inst);
      return agg;
    });
    Aggregate merged;
    for (auto const& agg : per) merged.merge(agg);
    merged.emit(out, suite,
                "sampled draws (n=" + std::to_string(n) + ",seed=" +
                    std::to_string(opt.seed) + ",count=" + std::to_string(opt.samples) + ")");
  }
  canonical_order(out);
  return out;
}

// ---------------------------------------------------------------------------
// Random instances

namespace detail {

struct SampleSet {
  std::vector<Analysis> analyses;
  std::vector<std::string> names;
  std::size_t requested = 0;
  std::size_t attempts = 0;
};

inline SampleSet sample_set(std::size_t n, std::size_t count, std::uint64_t seed) {
  auto drawn = parallel_map(count, [&](std::size_t idx) {
    std::optional<std::pair<Analysis, std::size_t>> r;
    if (auto s = sample_instance(n, seed, idx)) {
      r.emplace(analyze(s->graph), s->attempts);
    }
    return r;
  });
  SampleSet set;
  set.requested = count;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (drawn[idx]) {
      set.analyses.push_back(std::move(drawn[idx]->first));
      set.attempts += drawn[idx]->second;
      set.names.push_back("sample(n=" + std::to_string(n) + ",seed=" +
                          std::to_string(seed) + ",index=" + std::to_string(idx) + ")");
    }
  }
  return set;
}

inline std::string sample_label(std::size_t n, std::size_t count, std::uint64_t seed) {
  return "samples(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) +
         ",count=" + std::to_string(count) + ")";
}

inline Outcome yield_outcome(std::string const& suite, std::string const& label,
                             SampleSet const& set) {
  // a shortfall is reported, not treated as a failed claim
  return {suite, label, "sampler yield",
          std::to_string(set.requested) + " primitive nonpowerful instances",
          std::to_string(set.analyses.size()) + " found in " +
              std::to_string(set.attempts) + " draws",
          true, ""};
}

}  // namespace detail

/// The inequality battery on `samples` random instances per order.
inline std::vector<Outcome> random_battery(std::vector<std::size_t> const& orders,
                                           std::size_t samples, std::uint64_t seed) {
  std::string const suite = "lemmas";
  std::vector<Outcome> out;
  for (std::size_t n : orders) {
    auto const set = detail::sample_set(n, samples, seed);
    auto const label = detail::sample_label(n, samples, seed);
    out.push_back(detail::yield_outcome(suite, label, set));
    Aggregate agg;
    for (std::size_t j = 0; j < set.analyses.size(); ++j) {
      agg.add_battery(set.analyses[j], set.names[j]);
    }
    agg.emit(out, suite, label);
  }
  canonical_order(out);
  return out;
}

// ---------------------------------------------------------------------------
// Gap scan and characterizations (n >= 14)

namespace detail {

inline void require_large(std::size_t n) {
  if (n < 14) {
    throw ParameterError("gap and characterization checks need n >= 14, got " +
                         std::to_string(n));
  }
}

}  // namespace detail

/// (a) every named preset at order n matches its closed form and stays out
/// of the gap intervals; (b) sampled instances stay out of them; (c) the
/// structure and case-bound conclusions hold whenever the large-base
/// hypothesis fires.
inline std::vector<Outcome> gap_scan(std::size_t n, std::size_t samples,
                                     std::uint64_t seed) {
  detail::require_large(n);
  std::string const suite = "gaps";
  auto const specs = signed_catalogue(n);
  auto per = parallel_map(specs.size(), [&](std::size_t idx) {
    std::vector<Outcome> out;
    auto const a = analyze(generate(specs[idx]));
    detail::base_instance(out, suite, specs[idx], a);
    append_battery(out, suite, describe(specs[idx]), a);
    return out;
  });
  std::vector<Outcome> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  auto const set = detail::sample_set(n, samples, seed);
  auto const label = detail::sample_label(n, samples, seed);
  out.push_back(detail::yield_outcome(suite, label, set));
  Aggregate agg;
  agg.declare(claims::kGap);
  for (std::size_t j = 0; j < set.analyses.size(); ++j) {
    agg.add_battery(set.analyses[j], set.names[j]);
  }
  agg.emit(out, suite, label);
  canonical_order(out);
  return out;
}

/// One "l(k) = value on a k-range iff |S| is one of ..." statement.
struct Clause {
  std::string text;
  Int a = 0;  // l(k) = 2n^2 + a*n + c + k
  Int c = 0;
  std::size_t k_lo = 1;
  std::size_t k_hi = 0;
  std::vector<FamilySpec> members;  // signed presets
};

inline std::vector<Clause> clauses(std::size_t n) {
  auto preset_of = [n](Family f, std::size_t k = 0, std::size_t i = 0) {
    return FamilySpec{f, n, k, i, Preset{same_sign_variant(f)}};
  };
  std::vector<Clause> out;
  auto add = [&](Int a, Int c, std::size_t lo, std::size_t hi,
                 std::vector<FamilySpec> members, std::string names) {
    std::string range = lo == hi ? "k=" + std::to_string(lo)
                                 : std::to_string(lo) + "<=k<=" + std::to_string(hi);
    std::string text = "l(k)=2n^2" + std::to_string(a) + "n+" + std::to_string(c) +
                       "+k (" + range + ") iff |S| ~ " + names;
    std::vector<FamilySpec> valid;
    for (auto& m : members) {
      if (is_valid(m)) valid.push_back(m);
    }
    out.push_back({text, a, c, lo, hi, valid});
  };
  if (n % 2 == 1) {
    add(-6, 4, 1, n, {preset_of(Family::Dki, 2, 1)}, "D(2,1)");
    add(-6, 3, 1, n, {preset_of(Family::Dki, 2, 2)}, "D(2,2)");
    add(-6, 2, 1, n, {preset_of(Family::Dki, 2, 3), preset_of(Family::ScriptL)},
        "D(2,3) or L");
  }
  using F = Family;
  add(-8, 9, 1, n - 2, {preset_of(F::F), preset_of(F::F2)}, "F or F2");
  add(-8, 8, 1, n, {preset_of(F::F1)}, "F1");
  add(-8, 8, 1, n - 2,
      {preset_of(F::F1), preset_of(F::F3), preset_of(F::F4), preset_of(F::F5),
       preset_of(F::F6), preset_of(F::FPrime, 0, n - 3)},
      "F1, F3, F4, F5, F6 or F'(n-3)");
  add(-8, 8, 1, n - 1, {preset_of(F::F1), preset_of(F::F3), preset_of(F::F5)},
      "F1, F3 or F5");
  add(-8, 8, n - 1, n, {preset_of(F::F), preset_of(F::F1), preset_of(F::F2)},
      "F, F1 or F2");
  add(-8, 7, 1, n, {preset_of(F::F7)}, "F7");
  std::vector<FamilySpec> primes;
  for (std::size_t i = 2; i + 3 <= n; ++i) primes.push_back(preset_of(F::FPrime, 0, i));
  {
    std::vector<FamilySpec> m{preset_of(F::F4), preset_of(F::F6), preset_of(F::F7)};
    m.insert(m.end(), primes.begin(), primes.end());
    add(-8, 7, n - 1, n, m, "F4, F6, F7 or F'(i), 2<=i<=n-3");
  }
  {
    std::vector<FamilySpec> m{preset_of(F::F3), preset_of(F::F4), preset_of(F::F5),
                              preset_of(F::F6), preset_of(F::F7)};
    m.insert(m.end(), primes.begin(), primes.end());
    add(-8, 7, n, n, m, "F3, F4, F5, F6, F7 or F'(i), 2<=i<=n-3");
  }
  if (std::gcd(n, n - 3) == 1) {
    // stated without a k-range; read as 1 <= k <= n like the other clauses
    add(-8, 6, 1, n, {preset_of(F::Dki, 3, 1)}, "D(3,1)");
    add(-8, 5, 1, n, {preset_of(F::Dki, 3, 2)}, "D(3,2)");
    add(-8, 4, 1, n, {preset_of(F::Dki, 3, 3), preset_of(F::B1)}, "D(3,3) or B1");
    add(-8, 3, 1, n,
        {preset_of(F::Dki, 3, 4), preset_of(F::B2), preset_of(F::B3), preset_of(F::B4)},
        "D(3,4), B2, B3 or B4");
    for (std::size_t j = out.size() - 4; j < out.size(); ++j) out[j].text += " [k-range assumed]";
  }
  return out;
}

namespace detail {

inline bool attains(Clause const& c, std::size_t order, std::vector<std::size_t> const& l) {
  Int const n = static_cast<Int>(order);
  for (std::size_t k = c.k_lo; k <= c.k_hi; ++k) {
    if (static_cast<Int>(l[k - 1]) != 2 * n * n + c.a * n + c.c + static_cast<Int>(k)) {
      return false;
    }
  }
  return true;
}

inline std::vector<Int> clause_values(Clause const& c, std::size_t order) {
  Int const n = static_cast<Int>(order);
  std::vector<Int> v;
  for (std::size_t k = c.k_lo; k <= c.k_hi; ++k) {
    v.push_back(2 * n * n + c.a * n + c.c + static_cast<Int>(k));
  }
  return v;
}

inline std::vector<Int> slice(std::vector<std::size_t> const& l, Clause const& c) {
  std::vector<Int> v;
  for (std::size_t k = c.k_lo; k <= c.k_hi; ++k) v.push_back(static_cast<Int>(l[k - 1]));
  return v;
}

inline bool in_class(Clause const& c, SignedDigraph const& g, CycleCatalog const& cat) {
  if (!sign_constant_classes(cat)) return false;
  for (auto const& m : c.members) {
    if (are_isomorphic(g, underlying_digraph(m))) return true;
  }
  return false;
}

}  // namespace detail

/// Forward direction exactly on the named members; the converse on the
/// other named instances and on samples. With `l_target`, only clauses
/// taking that value at some k in their range are checked.
inline std::vector<Outcome> characterization_check(std::size_t n, std::size_t samples,
                                                   std::uint64_t seed,
                                                   std::optional<Int> l_target = {}) {
  detail::require_large(n);
  std::string const suite = "characterizations";
  std::vector<Clause> selected;
  for (auto const& c : clauses(n)) {
    auto const vals = detail::clause_values(c, n);
    if (!l_target || std::find(vals.begin(), vals.end(), *l_target) != vals.end()) {
      selected.push_back(c);
    }
  }
  auto const catalogue = signed_catalogue(n);
  auto named = parallel_map(catalogue.size(), [&](std::size_t idx) {
    return analyze(generate(catalogue[idx]));
  });
  std::vector<Outcome> out;
  if (n % 2 == 0) {
    // D(2,j) needs gcd(n, n-2) = 1 and L needs odd n, so nothing is left to check
    out.push_back({suite, "named instances (n=" + std::to_string(n) + ")",
                   "l(k)=2n^2-6n+c+k clauses", "odd n only",
                   "skipped: no D(2,j) or L exists at even n", true, ""});
  }
  for (auto const& c : selected) {
    for (auto const& m : c.members) {
      auto const a = analyze(generate(m));
      bool const pass = detail::attains(c, n, a.bases->ordered);
      out.push_back({suite, describe(m), c.text, list(detail::clause_values(c, n)),
                     list(detail::slice(a.bases->ordered, c)), pass,
                     pass ? "" : inline_edges(a.graph)});
      append_battery(out, suite, describe(m), a);
    }
    std::vector<std::string> offenders;
    for (std::size_t j = 0; j < catalogue.size(); ++j) {
      auto const& a = named[j];
      if (detail::attains(c, n, a.bases->ordered) &&
          !detail::in_class(c, a.graph, a.catalog)) {
        offenders.push_back(describe(catalogue[j]));
      }
    }
    std::string offender_text;
    for (auto const& o : offenders) offender_text += (offender_text.empty() ? "" : ", ") + o;
    out.push_back({suite, "named instances (n=" + std::to_string(n) + ")",
                   "converse: " + c.text, "no instance outside the class",
                   offenders.empty() ? "none" : offender_text, offenders.empty(), ""});
  }
  if (samples > 0) {
    auto const set = detail::sample_set(n, samples, seed);
    auto const label = detail::sample_label(n, samples, seed);
    out.push_back(detail::yield_outcome(suite, label, set));
    Aggregate agg;
    for (auto const& c : selected) {
      std::string const claim = "converse: " + c.text;
      agg.declare(claim);
      for (std::size_t j = 0; j < set.analyses.size(); ++j) {
        auto const& a = set.analyses[j];
        bool const hit = detail::attains(c, n, a.bases->ordered);
        bool const ok = !hit || detail::in_class(c, a.graph, a.catalog);
        agg.add(claim, ok, set.names[j], inline_edges(a.graph), list(a.bases->ordered));
      }
    }
    agg.emit(out, suite, label);
  }
  canonical_order(out);
  return out;
}

}  // namespace signbase::verify
