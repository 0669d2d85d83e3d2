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

// Local bases of primitive nonpowerful signed digraphs.
//
// Entry (u,v) of the t-th sign-semiring power of the adjacency sign matrix is
// # exactly when two length-t walks u -> v of opposite sign exist. The base
// engine streams powers until the all-# matrix (absorbing for a strongly
// connected digraph) and keeps, per entry, the last time it was not #.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "signbase/digraph.hpp"
#include "signbase/error.hpp"
#include "signbase/exponents.hpp"
#include "signbase/sign_semiring.hpp"

namespace signbase {

struct BaseReport {
  Table pairwise;                       // l_S(u, v)
  std::vector<std::size_t> per_vertex;  // l_S(u)
  std::vector<std::size_t> ordered;     // l_S(k) for k = 1..n
  std::size_t global = 0;               // l(S)
  std::size_t stabilization_time = 0;   // first t with an all-# power
  /// Least r with entry (u,u) of the r-th power equal to #, per vertex.
  std::vector<std::size_t> closed_sssd;
};

inline std::size_t base_iteration_cap(std::size_t n) {
  return 3 * n * n + 2 * n + 5;
}

/// Throws PowerfulInput when g admits a switching certificate.
inline void require_nonpowerful(SignedDigraph const& g) {
  if (powerful_signature(g)) {
    throw PowerfulInput(
        "digraph is powerful: no pair of opposite-sign walks of equal length "
        "exists between any two vertices");
  }
}

inline BaseReport base_report(SignedDigraph const& g) {
  require_primitive(g);
  require_nonpowerful(g);
  std::size_t const n = g.order();
  std::size_t const cap = base_iteration_cap(n);

  Table last_plain(n, 0);
  std::vector<std::size_t> closed(n, 0);
  std::size_t open = n;  // vertices whose diagonal has not yet been #
  std::size_t stabilized = 0;
  PowerStream stream(g.sign_matrix(), cap);
  while (stream.advance()) {
    SignMatrix const& p = stream.current();
    std::size_t const t = stream.exponent();
    if (open > 0) {
      for (std::size_t u = 0; u < n; ++u) {
        if (closed[u] == 0 && p.at(u, u) == Sign::Ambiguous) {
          closed[u] = t;
          --open;
        }
      }
    }
    if (p.all_ambiguous()) {
      stabilized = t;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.at(i, j) != Sign::Ambiguous) {
          last_plain(i, j) = t;
        }
      }
    }
  }
  if (stabilized == 0) {
    throw EngineFault("sign powers did not reach all-# within " +
                      std::to_string(cap) + " steps");
  }

  BaseReport r;
  r.pairwise = Table(n);
  for (std::size_t c = 0; c < n * n; ++c) {
    r.pairwise.cells[c] = last_plain.cells[c] + 1;
  }
  r.per_vertex = r.pairwise.row_max();
  r.ordered = signbase::ordered(r.per_vertex);
  r.global = r.ordered.back();
  r.stabilization_time = stabilized;
  r.closed_sssd = std::move(closed);
  return r;
}

/// Least r such that two closed walks at u of length r have opposite signs.
inline std::size_t closed_sssd_time(SignedDigraph const& g, Vertex u) {
  require_primitive(g);
  require_nonpowerful(g);
  PowerStream s(g.sign_matrix(), base_iteration_cap(g.order()));
  while (s.advance()) {
    if (s.current().at(u, u) == Sign::Ambiguous) {
      return s.exponent();
    }
  }
  throw EngineFault("no closed SSSD pair found within the iteration cap");
}

// ---------------------------------------------------------------------------
// Brute-force walk enumeration

inline constexpr std::size_t kDefaultWalkBudget = 50'000'000;

/// Enumerates every length-t walk from u by depth-first search and returns,
/// for each terminal vertex, the sign summary of those walks: 0 (none),
/// + (all positive), - (all negative), # (both).
inline std::vector<Sign> sssd_oracle_row(SignedDigraph const& g, Vertex u,
                                         std::size_t t,
                                         std::size_t budget = kDefaultWalkBudget) {
  std::vector<Sign> row(g.order(), Sign::Zero);
  std::size_t visited = 0;
  auto dfs = [&](auto&& self, Vertex v, std::size_t depth, int sign) -> void {
    if (++visited > budget) {
      throw BudgetExceeded("walk enumeration budget of " +
                           std::to_string(budget) + " exceeded");
    }
    if (depth == t) {
      row[v] = row[v] + sign_of(sign);
      return;
    }
    for (Vertex w : g.out(v)) {
      self(self, w, depth + 1, sign * g.sign(v, w));
    }
  };
  dfs(dfs, u, 0, 1);
  return row;
}

inline Sign sssd_oracle(SignedDigraph const& g, Vertex u, Vertex v,
                        std::size_t t,
                        std::size_t budget = kDefaultWalkBudget) {
  if (t == 0) {
    throw ParameterError("sssd_oracle needs t >= 1");
  }
  return sssd_oracle_row(g, u, t, budget)[v];
}

}  // namespace signbase
