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

// Local and global primitive exponents, reach sets, Frobenius numbers and
// shortest walks that meet a cycle of every length.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "signbase/digraph.hpp"
#include "signbase/error.hpp"
#include "signbase/sign_semiring.hpp"

namespace signbase {

/// Dense n x n table of nonnegative integers.
struct Table {
  std::size_t n = 0;
  std::vector<std::size_t> cells;

  Table() = default;
  explicit Table(std::size_t order, std::size_t fill = 0)
      : n(order), cells(order * order, fill) {}

  std::size_t& operator()(std::size_t i, std::size_t j) {
    return cells[i * n + j];
  }
  std::size_t operator()(std::size_t i, std::size_t j) const {
    return cells[i * n + j];
  }

  std::vector<std::size_t> row_max() const {
    std::vector<std::size_t> m(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i] = std::max(m[i], (*this)(i, j));
      }
    }
    return m;
  }

  friend bool operator==(Table const&, Table const&) = default;
};

/// Sorted copy: entry k-1 is the k-th smallest value.
inline std::vector<std::size_t> ordered(std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  return values;
}

struct ExponentReport {
  Table pairwise;                     // exp_S(v_i, v_j)
  std::vector<std::size_t> per_vertex;  // exp_S(v_i)
  std::vector<std::size_t> ordered;     // exp(k) for k = 1..n
  std::size_t global = 0;               // exp(S)
};

/// R_k(v): endpoints of the length-k walks starting at v. R_0(v) = {v}.
inline std::vector<Vertex> reach_set(SignedDigraph const& g, Vertex v,
                                     std::size_t k) {
  std::vector<bool> cur(g.order(), false);
  cur[v] = true;
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<bool> next(g.order(), false);
    for (Vertex u = 0; u < g.order(); ++u) {
      if (cur[u]) {
        for (Vertex w : g.out(u)) {
          next[w] = true;
        }
      }
    }
    cur = std::move(next);
  }
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (cur[u]) {
      out.push_back(u);
    }
  }
  return out;
}

/// Streams boolean powers B^1, B^2, ... until the all-ones matrix, which is
/// absorbing for a strongly connected digraph. exp_S(i,j) is one more than
/// the last t at which no length-t walk i -> j exists.
inline ExponentReport exponent_report(SignedDigraph const& g) {
  require_primitive(g);
  std::size_t const n = g.order();
  std::size_t const cap = (n - 1) * (n - 1) + 2;
  BitMatrix const a = g.adjacency();
  BitMatrix power = a;
  Table last_zero(n, 0);
  std::size_t t = 1;
  for (;; ++t) {
    if (t > 1) {
      power = power * a;
    }
    if (power.all_ones()) {
      break;
    }
    if (t >= cap) {
      throw EngineFault("boolean powers did not stabilize within " +
                        std::to_string(cap) + " steps");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (power.row_full(i)) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!power.test(i, j)) {
          last_zero(i, j) = t;
        }
      }
    }
  }
  ExponentReport r;
  r.pairwise = Table(n);
  for (std::size_t c = 0; c < n * n; ++c) {
    r.pairwise.cells[c] = last_zero.cells[c] + 1;
  }
  r.per_vertex = r.pairwise.row_max();
  r.ordered = signbase::ordered(r.per_vertex);
  r.global = r.ordered.back();
  return r;
}

// ---------------------------------------------------------------------------
// Frobenius numbers

/// Least m >= 0 such that every integer k >= m is a nonnegative integer
/// combination of `generators` (so 0 when 1 is a generator). Dijkstra over
/// residues modulo the smallest generator.
inline std::size_t frobenius(std::vector<std::size_t> generators) {
  generators.erase(std::remove(generators.begin(), generators.end(), 0U),
                   generators.end());
  if (generators.empty() || gcd_of(generators) != 1) {
    throw ParameterError("Frobenius number needs generators with gcd 1");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::size_t const m = generators.front();
  if (m == 1) {
    return 0;
  }
  // least[r] = smallest representable integer congruent to r mod m.
  std::vector<std::size_t> least(m, kUnreachable);
  using Item = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  least[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto const [d, r] = pq.top();
    pq.pop();
    if (d != least[r]) {
      continue;
    }
    for (std::size_t s : generators) {
      std::size_t const nd = d + s;
      std::size_t const nr = nd % m;
      if (nd < least[nr]) {
        least[nr] = nd;
        pq.push({nd, nr});
      }
    }
  }
  std::size_t const largest_gap = *std::max_element(least.begin(), least.end());
  // largest non-representable integer is largest_gap - m
  return largest_gap - m + 1;
}

// ---------------------------------------------------------------------------
// C(S)-walks

struct CWalkReport {
  Table pairwise;                       // d_{C(S)}(v_i, v_j)
  std::vector<std::size_t> eccentricity;  // d_{C(S)}(v_i)
  std::vector<std::size_t> ordered;       // d_i(C(S))
  std::size_t global = 0;                 // d(C(S))
};

/// Shortest walks that meet at least one p-cycle for every p in C(S). BFS
/// over (vertex, lengths met so far); a walk meets a cycle when it visits
/// one of its vertices, so the start vertex counts and length 0 is allowed.
inline CWalkReport c_walk_report(SignedDigraph const& g,
                                 CycleCatalog const& cat) {
  require_primitive(g);
  std::size_t const n = g.order();
  std::size_t const L = cat.lengths.size();
  if (L == 0 || gcd_of(cat.lengths) != 1) {
    throw ParameterError("cycle catalog does not match a primitive digraph");
  }
  if (L > 24) {
    throw BudgetExceeded("C(S)-walk state space too large: |C(S)| = " +
                         std::to_string(L));
  }
  std::vector<std::uint32_t> meets(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t p : cat.on_cycle_lengths[v]) {
      auto const it = std::lower_bound(cat.lengths.begin(), cat.lengths.end(), p);
      meets[v] |= std::uint32_t{1} << static_cast<std::size_t>(it - cat.lengths.begin());
    }
  }
  std::uint32_t const full = (std::uint32_t{1} << L) - 1;
  std::size_t const states = n << L;

  CWalkReport r;
  r.pairwise = Table(n, kUnreachable);
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> dist(states, kUnseen);
  std::vector<std::size_t> touched;
  for (Vertex u = 0; u < n; ++u) {
    for (auto s : touched) {
      dist[s] = kUnseen;
    }
    touched.clear();
    std::size_t found = 0;
    std::queue<std::size_t> q;
    auto const start = (u << L) | meets[u];
    dist[start] = 0;
    touched.push_back(start);
    q.push(start);
    while (!q.empty() && found < n) {
      std::size_t const s = q.front();
      q.pop();
      Vertex const v = s >> L;
      std::uint32_t const mask = static_cast<std::uint32_t>(s) & full;
      if (mask == full && r.pairwise(u, v) == kUnreachable) {
        r.pairwise(u, v) = dist[s];
        ++found;
      }
      for (Vertex w : g.out(v)) {
        std::size_t const t = (w << L) | (mask | meets[w]);
        if (dist[t] == kUnseen) {
          dist[t] = dist[s] + 1;
          touched.push_back(t);
          q.push(t);
        }
      }
    }
  }
  r.eccentricity = r.pairwise.row_max();
  r.ordered = signbase::ordered(r.eccentricity);
  r.global = r.ordered.back();
  return r;
}

struct ExponentBound {
  Table pairwise;  // d_{C(S)}(v_i, v_j) + phi(C(S))
  std::size_t global = 0;
  std::size_t frobenius = 0;
};

/// exp_S(v_i, v_j) <= d_{C(S)}(v_i, v_j) + phi(C(S)).
inline ExponentBound exponent_upper_bound(SignedDigraph const& g,
                                          CycleCatalog const& cat) {
  auto const cw = c_walk_report(g, cat);
  ExponentBound b;
  b.frobenius = frobenius(cat.lengths);
  b.pairwise = cw.pairwise;
  for (auto& c : b.pairwise.cells) {
    c += b.frobenius;
  }
  b.global = cw.global + b.frobenius;
  return b;
}

}  // namespace signbase
