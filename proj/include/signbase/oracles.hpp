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

// Second routes to the engine's results, built on different machinery: reach
// sets walked one length at a time, and the signed double cover, in which
// vertex (v, s) records a walk ending at v with sign s. Two opposite-sign
// walks u -> v of length t exist exactly when both (v, +) and (v, -) are
// reachable from (u, +) in t steps.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "signbase/bases.hpp"
#include "signbase/digraph.hpp"
#include "signbase/error.hpp"
#include "signbase/exponents.hpp"

namespace signbase::oracle {

namespace detail {

// One step of the double cover: index 2v is (v, +), 2v+1 is (v, -).
inline std::vector<char> cover_step(SignedDigraph const& g,
                                    std::vector<char> const& cur) {
  std::vector<char> next(cur.size(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int parity = 0; parity < 2; ++parity) {
      if (!cur[2 * v + parity]) {
        continue;
      }
      for (Vertex w : g.out(v)) {
        int const flip = g.sign(v, w) < 0 ? 1 : 0;
        next[2 * w + (parity ^ flip)] = 1;
      }
    }
  }
  return next;
}

}  // namespace detail

/// exp_S(u, v) from reach sets R_t(u), t = 1, 2, ..., without matrices.
inline Table walk_exponents(SignedDigraph const& g) {
  std::size_t const n = g.order();
  std::size_t const cap = (n - 1) * (n - 1) + 2;
  Table out(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    std::vector<char> cur(n, 0);
    cur[u] = 1;
    bool full = false;
    for (std::size_t t = 1; t <= cap && !full; ++t) {
      std::vector<char> next(n, 0);
      for (Vertex v = 0; v < n; ++v) {
        if (cur[v]) {
          for (Vertex w : g.out(v)) {
            next[w] = 1;
          }
        }
      }
      cur = std::move(next);
      full = true;
      for (Vertex v = 0; v < n; ++v) {
        if (!cur[v]) {
          out(u, v) = t;
          full = false;
        }
      }
    }
    if (!full) {
      throw EngineFault("reach sets did not fill within the Wielandt bound");
    }
  }
  for (auto& c : out.cells) {
    c += 1;
  }
  return out;
}

/// Primitivity straight from the definition: some length k <= (n-1)^2 + 1
/// has a walk between every ordered pair.
inline bool primitive_by_definition(SignedDigraph const& g) {
  std::size_t const n = g.order();
  if (n == 0) {
    return false;
  }
  std::size_t const cap = (n - 1) * (n - 1) + 1;
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    reach[u][u] = 1;
  }
  for (std::size_t t = 1; t <= cap; ++t) {
    bool all = true;
    for (Vertex u = 0; u < n; ++u) {
      std::vector<char> next(n, 0);
      for (Vertex v = 0; v < n; ++v) {
        if (reach[u][v]) {
          for (Vertex w : g.out(v)) {
            next[w] = 1;
          }
        }
      }
      reach[u] = std::move(next);
      for (Vertex v = 0; v < n; ++v) {
        all = all && reach[u][v];
      }
    }
    if (all) {
      return true;
    }
  }
  return false;
}

struct CoverBases {
  bool nonpowerful = false;
  Table pairwise;  // l_S(u, v); meaningful when nonpowerful
  std::vector<std::size_t> closed_sssd;
};

/// Local bases from the double cover for a primitive digraph. Once every
/// cover vertex is reachable at some length it stays so, which ends the
/// scan; a powerful digraph never gets there within the cap.
inline CoverBases cover_bases(SignedDigraph const& g) {
  std::size_t const n = g.order();
  std::size_t const cap = base_iteration_cap(n);
  CoverBases r;
  r.pairwise = Table(n, 0);
  r.closed_sssd.assign(n, 0);
  r.nonpowerful = true;
  for (Vertex u = 0; u < n; ++u) {
    std::vector<char> cur(2 * n, 0);
    cur[2 * u] = 1;
    bool filled = false;
    for (std::size_t t = 1; t <= cap && !filled; ++t) {
      cur = detail::cover_step(g, cur);
      filled = true;
      for (Vertex v = 0; v < n; ++v) {
        bool const both = cur[2 * v] && cur[2 * v + 1];
        if (!both) {
          r.pairwise(u, v) = t;
          filled = false;
        } else if (v == u && r.closed_sssd[u] == 0) {
          r.closed_sssd[u] = t;
        }
      }
    }
    if (!filled) {
      r.nonpowerful = false;
      return r;
    }
  }
  for (auto& c : r.pairwise.cells) {
    c += 1;
  }
  return r;
}

/// Every walk of length 1..max_t, enumerated once by depth-first search and
/// stored by the set of arcs it uses an odd number of times. The sign of a
/// walk under any signing of the same arcs is then the parity of its
/// intersection with the negative arcs, so one enumeration serves every
/// signing of an underlying digraph.
class WalkParities {
 public:
  static constexpr std::size_t kMaxArcs = 16;

  WalkParities(SignedDigraph const& g, std::size_t max_t)
      : n_(g.order()), max_t_(max_t), arcs_(g.arcs()) {
    if (arcs_.size() > kMaxArcs) {
      throw BudgetExceeded("walk parity sets support at most 16 arcs");
    }
    words_ = ((std::size_t{1} << arcs_.size()) + 63) / 64;
    sets_.assign(n_ * max_t_ * n_ * words_, 0);
    std::vector<std::size_t> index(n_ * n_, 0);
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      index[arcs_[a].from * n_ + arcs_[a].to] = a;
    }
    for (Vertex u = 0; u < n_; ++u) {
      auto dfs = [&](auto&& self, Vertex v, std::size_t depth,
                     std::uint32_t mask) -> void {
        if (depth > 0) {
          auto* set = slot(u, depth, v);
          set[mask / 64] |= std::uint64_t{1} << (mask % 64);
        }
        if (depth == max_t_) {
          return;
        }
        for (Vertex w : g.out(v)) {
          self(self, w, depth + 1, mask ^ (std::uint32_t{1} << index[v * n_ + w]));
        }
      };
      dfs(dfs, u, 0, 0);
    }
  }

  std::vector<Arc> const& arcs() const noexcept { return arcs_; }

  /// Sign summary of the length-t walks u -> v when exactly the arcs in
  /// `negative` (bit a for arcs()[a]) are negative.
  Sign sign(Vertex u, Vertex v, std::size_t t, std::uint32_t negative) const {
    auto const* set = slot(u, t, v);
    bool pos = false;
    bool neg = false;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = set[w]; bits != 0; bits &= bits - 1) {
        auto const mask = static_cast<std::uint32_t>(
            w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        if (std::popcount(mask & negative) % 2 == 1) {
          neg = true;
        } else {
          pos = true;
        }
        if (pos && neg) {
          return Sign::Ambiguous;
        }
      }
    }
    return pos ? Sign::Plus : (neg ? Sign::Minus : Sign::Zero);
  }

 private:
  std::uint64_t* slot(Vertex u, std::size_t t, Vertex v) {
    return &sets_[((u * max_t_ + (t - 1)) * n_ + v) * words_];
  }
  std::uint64_t const* slot(Vertex u, std::size_t t, Vertex v) const {
    return &sets_[((u * max_t_ + (t - 1)) * n_ + v) * words_];
  }

  std::size_t n_;
  std::size_t max_t_;
  std::vector<Arc> arcs_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> sets_;
};

}  // namespace signbase::oracle
