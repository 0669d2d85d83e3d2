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

// Extremal digraph families and their signed variants.
//
// Vertex v_m of the constructions is vertex m-1 here, so per-vertex values in
// reports line up with the v_m indexing of the closed-form formulas.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <type_traits>
#include <variant>
#include <vector>

#include "signbase/digraph.hpp"
#include "signbase/error.hpp"
#include "signbase/gf2.hpp"

namespace signbase {

enum class Family {
  D1, D2, Dki, ScriptL,
  F, F1, F2, F3, F4, F5, F6, F7, FPrime,
  B1, B2, B3, B4,
};

/// Named signed variants. SameSign makes every cycle-length class
/// sign-constant; the named ones are the same policy bound to one family.
/// SplitD2 gives the two (n-1)-cycles of D2 opposite signs.
enum class Variant {
  SameSign, SplitD2, Ski, T,
  S0, S1, S2, S3, S4, S5, S6, S7, Si,
  Q1, Q2, Q3, Q4,
};

struct AllPositive {};
struct Preset {
  Variant variant = Variant::SameSign;
};
/// Signs for listed arcs (0-based endpoints); unlisted arcs are positive.
struct Explicit {
  std::map<std::pair<Vertex, Vertex>, int> signs;
};
/// Every simple cycle whose length is a key gets the mapped sign.
struct Solve {
  std::map<std::size_t, int> by_length;
};
using SignPolicy = std::variant<AllPositive, Preset, Explicit, Solve>;

struct FamilySpec {
  Family family = Family::D1;
  std::size_t n = 0;
  std::size_t k = 0;  // Dki only
  std::size_t i = 0;  // Dki and FPrime
  SignPolicy policy = AllPositive{};
};

// ---------------------------------------------------------------------------
// Names

struct FamilyName {
  Family family;
  std::string_view name;
};

inline constexpr std::array<FamilyName, 17> kFamilyNames{{
    {Family::D1, "d1"},       {Family::D2, "d2"},  {Family::Dki, "dki"},
    {Family::ScriptL, "script-l"},                 {Family::F, "f"},
    {Family::F1, "f1"},       {Family::F2, "f2"},  {Family::F3, "f3"},
    {Family::F4, "f4"},       {Family::F5, "f5"},  {Family::F6, "f6"},
    {Family::F7, "f7"},       {Family::FPrime, "fprime"},
    {Family::B1, "b1"},       {Family::B2, "b2"},  {Family::B3, "b3"},
    {Family::B4, "b4"},
}};

struct VariantName {
  Variant variant;
  std::string_view name;
};

inline constexpr std::array<VariantName, 17> kVariantNames{{
    {Variant::SameSign, "same-sign"}, {Variant::SplitD2, "split"},
    {Variant::Ski, "ski"},           {Variant::T, "t"},
    {Variant::S0, "s0"}, {Variant::S1, "s1"}, {Variant::S2, "s2"},
    {Variant::S3, "s3"}, {Variant::S4, "s4"}, {Variant::S5, "s5"},
    {Variant::S6, "s6"}, {Variant::S7, "s7"}, {Variant::Si, "si"},
    {Variant::Q1, "q1"}, {Variant::Q2, "q2"}, {Variant::Q3, "q3"},
    {Variant::Q4, "q4"},
}};

inline std::string_view family_name(Family f) {
  for (auto const& e : kFamilyNames) {
    if (e.family == f) {
      return e.name;
    }
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view s) {
  for (auto const& e : kFamilyNames) {
    if (e.name == s) {
      return e.family;
    }
  }
  return std::nullopt;
}

inline std::string_view variant_name(Variant v) {
  for (auto const& e : kVariantNames) {
    if (e.variant == v) {
      return e.name;
    }
  }
  return "?";
}

inline std::optional<Variant> variant_from_name(std::string_view s) {
  for (auto const& e : kVariantNames) {
    if (e.name == s) {
      return e.variant;
    }
  }
  return std::nullopt;
}

/// The family a named variant is defined on, or nullopt for SameSign.
inline std::optional<Family> variant_family(Variant v) {
  switch (v) {
    case Variant::SameSign: return std::nullopt;
    case Variant::SplitD2: return Family::D2;
    case Variant::Ski: return Family::Dki;
    case Variant::T: return Family::ScriptL;
    case Variant::S0: return Family::F;
    case Variant::S1: return Family::F1;
    case Variant::S2: return Family::F2;
    case Variant::S3: return Family::F3;
    case Variant::S4: return Family::F4;
    case Variant::S5: return Family::F5;
    case Variant::S6: return Family::F6;
    case Variant::S7: return Family::F7;
    case Variant::Si: return Family::FPrime;
    case Variant::Q1: return Family::B1;
    case Variant::Q2: return Family::B2;
    case Variant::Q3: return Family::B3;
    case Variant::Q4: return Family::B4;
  }
  return std::nullopt;
}

/// Short human-readable descriptor such as "dki(n=7,k=2,i=1)".
inline std::string describe(FamilySpec const& s) {
  std::string d = std::string(family_name(s.family)) + "(n=" + std::to_string(s.n);
  if (s.family == Family::Dki) {
    d += ",k=" + std::to_string(s.k);
  }
  if (s.family == Family::Dki || s.family == Family::FPrime) {
    d += ",i=" + std::to_string(s.i);
  }
  d += ")";
  if (auto const* p = std::get_if<Preset>(&s.policy)) {
    d += "/" + std::string(variant_name(p->variant));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Underlying digraphs

/// Throws ParameterError naming the violated range.
inline void validate(FamilySpec const& s) {
  auto fail = [&](std::string const& why) {
    throw ParameterError(std::string(family_name(s.family)) + ": " + why);
  };
  std::size_t const n = s.n;
  switch (s.family) {
    case Family::D1:
    case Family::D2:
      if (n < 3) fail("requires n >= 3");
      break;
    case Family::Dki: {
      if (n < 3) fail("requires n >= 3");
      if (s.k < 1 || s.k > n - 2) fail("requires 1 <= k <= n-2");
      if (std::gcd(n, n - s.k) != 1) fail("requires gcd(n, n-k) = 1");
      std::size_t const hi = std::min(s.k + 1, n - s.k - 1);
      if (s.i < 1 || s.i > hi) {
        fail("requires 1 <= i <= min{k+1, n-k-1} = " + std::to_string(hi));
      }
      break;
    }
    case Family::ScriptL:
      if (n % 2 == 0) fail("requires odd n");
      if (n < 7) fail("requires odd n >= 7");
      break;
    case Family::FPrime:
      if (n < 6) fail("requires n >= 6");
      if (s.i < 2 || s.i > n - 3) fail("requires 2 <= i <= n-3");
      break;
    case Family::B1:
    case Family::B2:
    case Family::B3:
    case Family::B4:
      if (n < 6) fail("requires n >= 6");
      if (std::gcd(n, n - 3) != 1) fail("requires gcd(n, n-3) = 1 for primitivity");
      break;
    default:
      if (n < 6) fail("requires n >= 6");
      break;
  }
}

namespace detail {

class Builder {
 public:
  explicit Builder(std::size_t n) : g_(n) {}

  // Closed walk v_{m0} -> v_{m1} -> ... -> v_{m0}, 1-based labels.
  Builder& cycle(std::vector<std::size_t> const& labels) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      arc(labels[j], labels[(j + 1) % labels.size()]);
    }
    return *this;
  }
  Builder& arc(std::size_t from, std::size_t to) {
    g_.add_arc(from - 1, to - 1, 1);
    return *this;
  }
  SignedDigraph take() { return std::move(g_); }

 private:
  SignedDigraph g_;
};

// (v_1, v_top, v_{top-1}, ..., v_2) with `skip` removed.
inline std::vector<std::size_t> descending_cycle(std::size_t top,
                                                 std::size_t skip = 0) {
  std::vector<std::size_t> c{1};
  for (std::size_t m = top; m >= 2; --m) {
    if (m != skip) {
      c.push_back(m);
    }
  }
  return c;
}

}  // namespace detail

/// The unsigned (all-positive) digraph of a family.
inline SignedDigraph underlying_digraph(FamilySpec const& s) {
  validate(s);
  std::size_t const n = s.n;
  detail::Builder b(n);
  using detail::descending_cycle;
  switch (s.family) {
    case Family::D1:
      b.cycle(descending_cycle(n)).arc(1, n - 1);
      break;
    case Family::D2:
      b.cycle(descending_cycle(n)).arc(1, n - 1).arc(2, n);
      break;
    case Family::Dki:
      b.cycle(descending_cycle(n));
      for (std::size_t j = 1; j <= s.i; ++j) {
        b.arc(j, n - s.k + j - 1);
      }
      break;
    case Family::ScriptL:
      b.cycle(descending_cycle(n)).arc(1, n - 2).arc(3, n);
      break;
    case Family::F:
      b.cycle(descending_cycle(n, n - 2)).arc(1, n - 2).arc(n - 2, n - 3);
      break;
    case Family::F1:
      b.cycle(descending_cycle(n - 1)).arc(1, n - 2).arc(2, n).arc(n, n - 1);
      break;
    case Family::F2:
      b.cycle(descending_cycle(n, n - 1)).arc(1, n - 2).arc(n, n - 1).arc(n - 1, n - 3);
      break;
    case Family::F3:
      b.cycle(descending_cycle(n - 2))
          .arc(1, n - 1).arc(n - 1, n - 2).arc(1, n).arc(n, n - 2);
      break;
    case Family::FPrime:
      b.cycle(descending_cycle(n - 1)).arc(1, n - 2).arc(s.i + 1, n).arc(n, s.i - 1);
      break;
    case Family::F4:
      b.cycle(descending_cycle(n - 1)).arc(1, n - 2).arc(1, n).arc(n, n - 3);
      break;
    case Family::F5:
      b.cycle(descending_cycle(n - 1)).arc(1, n - 2).arc(2, n).arc(n, n - 2);
      break;
    case Family::F6:
      b.cycle(descending_cycle(n - 1)).arc(1, n).arc(n, n - 3).arc(2, n - 1);
      break;
    case Family::F7:
      b.cycle(descending_cycle(n - 1)).arc(1, n - 2).arc(3, n).arc(n, n - 1);
      break;
    case Family::B1:
      b.cycle(descending_cycle(n)).arc(1, n - 3).arc(3, n - 1);
      break;
    case Family::B2:
      b.cycle(descending_cycle(n)).arc(1, n - 3).arc(4, n);
      break;
    case Family::B3:
      b.cycle(descending_cycle(n)).arc(1, n - 3).arc(2, n - 2).arc(4, n);
      break;
    case Family::B4:
      b.cycle(descending_cycle(n)).arc(1, n - 3).arc(3, n - 1).arc(4, n);
      break;
  }
  return b.take();
}

// ---------------------------------------------------------------------------
// Sign assignment

struct CycleSignDemand {
  Cycle const* cycle;
  int sign;
};

namespace detail {

inline std::size_t arc_index(std::vector<Arc> const& arcs, Vertex u, Vertex v) {
  auto const it = std::lower_bound(
      arcs.begin(), arcs.end(), std::pair{u, v}, [](Arc const& a, auto const& key) {
        return std::pair{a.from, a.to} < key;
      });
  return static_cast<std::size_t>(it - arcs.begin());
}

inline Gf2System cycle_parity_system(SignedDigraph const& g,
                                     std::vector<CycleSignDemand> const& demands) {
  auto const arcs = g.arcs();
  Gf2System sys(arcs.size());
  for (auto const& d : demands) {
    std::vector<std::size_t> support;
    auto const& vs = d.cycle->vertices;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      support.push_back(arc_index(arcs, vs[j], vs[(j + 1) % vs.size()]));
    }
    sys.add_equation(support, d.sign < 0);
  }
  return sys;
}

inline SignedDigraph apply_negativity(SignedDigraph const& g,
                                      std::vector<bool> const& negative) {
  auto const arcs = g.arcs();
  SignedDigraph out(g.order());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    out.add_arc(arcs[a].from, arcs[a].to, negative[a] ? -1 : 1);
  }
  return out;
}

}  // namespace detail

/// Arc signs of `g` (signs ignored) such that each demanded cycle gets its
/// demanded sign; unknowns are per-arc negativity bits, one parity equation
/// per cycle. Returns the lexicographically smallest negativity vector over
/// arcs ordered by (from, to), or throws InfeasibleSigns.
inline SignedDigraph solve_cycle_signs(SignedDigraph const& g,
                                       std::vector<CycleSignDemand> const& demands) {
  auto const sys = detail::cycle_parity_system(g, demands);
  auto const x = sys.lexmin_solution();
  if (!x) {
    throw InfeasibleSigns("cycle sign constraints are not realizable");
  }
  return detail::apply_negativity(g, *x);
}

/// Every simple cycle whose length is a key of `constraints` gets the mapped
/// sign. Cycles of other lengths take whatever sign the solution induces.
inline SignedDigraph solve_signs(SignedDigraph const& g, CycleCatalog const& cat,
                                 std::map<std::size_t, int> const& constraints) {
  std::vector<CycleSignDemand> demands;
  for (auto const& [len, sign] : constraints) {
    if (!cat.has_length(len)) {
      throw ParameterError("no cycle of length " + std::to_string(len));
    }
    for (auto const* c : cat.of_length(len)) {
      demands.push_back({c, sign});
    }
  }
  return solve_cycle_signs(g, demands);
}

namespace detail {

inline bool classes_distinguished(std::vector<std::size_t> const& lengths,
                                  std::vector<int> const& signs) {
  for (std::size_t a = 0; a < lengths.size(); ++a) {
    for (std::size_t b = 0; b < lengths.size(); ++b) {
      bool const odd_a = lengths[a] % 2 == 1;
      bool const odd_b = lengths[b] % 2 == 1;
      if (odd_a && !odd_b && signs[b] < 0) return true;
      if (odd_a && odd_b && signs[a] != signs[b]) return true;
    }
  }
  return false;
}

template <typename Choose>
SignedDigraph best_assignment(SignedDigraph const& g,
                              std::vector<std::vector<CycleSignDemand>> const& options,
                              Choose&& choose_free) {
  std::optional<std::vector<bool>> best;
  std::size_t best_weight = 0;
  for (auto const& demands : options) {
    auto const sys = cycle_parity_system(g, demands);
    auto x = sys.complete(choose_free);
    if (!x) {
      continue;
    }
    auto const w = static_cast<std::size_t>(std::count(x->begin(), x->end(), true));
    // vector<bool> compares lexicographically with false < true
    if (!best || w < best_weight || (w == best_weight && *x < *best)) {
      best = std::move(x);
      best_weight = w;
    }
  }
  if (!best) {
    throw InfeasibleSigns("no nonpowerful sign assignment with the requested "
                          "cycle-sign classes exists");
  }
  return apply_negativity(g, *best);
}

// Sign options for a preset: one demand list per admissible choice of class
// signs.
inline std::vector<std::vector<CycleSignDemand>> preset_options(
    Variant v, CycleCatalog const& cat) {
  std::vector<std::vector<CycleSignDemand>> options;
  auto const& lens = cat.lengths;
  if (v == Variant::SplitD2) {
    // Two (n-1)-cycles with opposite signs; the n-cycle takes either sign.
    std::size_t const top = lens.back();
    auto const pair = cat.of_length(top - 1);
    auto const ham = cat.of_length(top);
    if (pair.size() != 2 || ham.size() != 1) {
      throw ParameterError("split variant needs exactly two (n-1)-cycles");
    }
    for (int hs : {1, -1}) {
      for (int first : {1, -1}) {
        options.push_back({{ham[0], hs}, {pair[0], first}, {pair[1], -first}});
      }
    }
    return options;
  }
  std::size_t const combos = std::size_t{1} << lens.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<int> signs(lens.size());
    for (std::size_t b = 0; b < lens.size(); ++b) {
      signs[b] = ((mask >> b) & 1U) ? -1 : 1;
    }
    if (!classes_distinguished(lens, signs)) {
      continue;
    }
    std::vector<CycleSignDemand> demands;
    for (std::size_t b = 0; b < lens.size(); ++b) {
      for (auto const* c : cat.of_length(lens[b])) {
        demands.push_back({c, signs[b]});
      }
    }
    options.push_back(std::move(demands));
  }
  return options;
}

inline void check_variant(Variant v, Family f) {
  auto const vf = variant_family(v);
  if (vf && *vf != f) {
    throw ParameterError("variant " + std::string(variant_name(v)) +
                         " is defined on " + std::string(family_name(*vf)) +
                         ", not " + std::string(family_name(f)));
  }
}

}  // namespace detail

/// Canonical signed variant: class signs admissible for nonpowerfulness, then
/// the fewest negative arcs, then the lexicographically smallest negativity
/// vector over arcs ordered by (from, to).
inline SignedDigraph preset(Variant v, FamilySpec spec) {
  detail::check_variant(v, spec.family);
  auto const g = underlying_digraph(spec);
  auto const cat = cycle_catalog(g);
  return detail::best_assignment(g, detail::preset_options(v, cat),
                                 [](std::size_t) { return false; });
}

/// Some admissible signing of the variant, with free arc bits and the class
/// sign option drawn from `coin`. Used to check that results depend only on
/// the sign-class structure.
template <typename Coin>
SignedDigraph random_preset(Variant v, FamilySpec spec, Coin&& coin) {
  detail::check_variant(v, spec.family);
  auto const g = underlying_digraph(spec);
  auto const cat = cycle_catalog(g);
  auto options = detail::preset_options(v, cat);
  std::vector<std::vector<bool>> feasible;
  for (auto const& demands : options) {
    auto const sys = detail::cycle_parity_system(g, demands);
    if (auto x = sys.complete([&](std::size_t) { return coin(); })) {
      feasible.push_back(std::move(*x));
    }
  }
  if (feasible.empty()) {
    throw InfeasibleSigns("no nonpowerful sign assignment exists");
  }
  std::size_t pick = 0;
  for (std::size_t b = 1; b < feasible.size(); ++b) {
    if (coin()) {
      pick = b;
    }
  }
  return detail::apply_negativity(g, feasible[pick]);
}

inline SignedDigraph generate(FamilySpec const& spec) {
  auto g = underlying_digraph(spec);
  return std::visit(
      [&](auto const& p) -> SignedDigraph {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, AllPositive>) {
          return g;
        } else if constexpr (std::is_same_v<P, Preset>) {
          return preset(p.variant, spec);
        } else if constexpr (std::is_same_v<P, Explicit>) {
          SignedDigraph out(g.order());
          for (auto const& a : g.arcs()) {
            auto const it = p.signs.find({a.from, a.to});
            out.add_arc(a.from, a.to, it == p.signs.end() ? 1 : it->second);
          }
          for (auto const& [arc, s] : p.signs) {
            if (!g.has_arc(arc.first, arc.second)) {
              throw ParameterError("explicit sign for missing arc (" +
                                   std::to_string(arc.first + 1) + ", " +
                                   std::to_string(arc.second + 1) + ")");
            }
          }
          return out;
        } else {
          return solve_signs(g, cycle_catalog(g), p.by_length);
        }
      },
      spec.policy);
}

}  // namespace signbase
