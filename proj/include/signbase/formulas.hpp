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

// Closed-form values of the ordered local exponents exp(k) and local bases
// l(k), k = 1..n, for the named families and their signed variants.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "signbase/families.hpp"

namespace signbase {

using Int = std::int64_t;

struct FormulaRow {
  std::string text;          // the closed form, for reports
  std::vector<Int> values;   // entry k-1 is the value at k
  /// When the closed form names the vertex attaining the k-th value, entry
  /// k-1 is that vertex (0-based). Empty when no vertex is named.
  std::vector<Vertex> vertex;
};

namespace detail {

// v_k for every k.
inline std::vector<Vertex> identity_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = k;
  }
  return v;
}

// v_k for k <= i, v_n at k = i+1, v_{k-1} for k >= i+2.
inline std::vector<Vertex> fprime_vertices(std::size_t n, std::size_t i) {
  std::vector<Vertex> v(n);
  for (std::size_t k = 1; k <= n; ++k) {
    v[k - 1] = k <= i ? k - 1 : (k == i + 1 ? n - 1 : k - 2);
  }
  return v;
}

// v_k for k <= n-2, v_n at k = n-1, v_{n-1} at k = n.
inline std::vector<Vertex> swapped_top_vertices(std::size_t n) {
  auto v = identity_vertices(n);
  std::swap(v[n - 2], v[n - 1]);
  return v;
}

}  // namespace detail

/// exp(k) for the family's underlying digraph, when a closed form is known.
inline std::optional<FormulaRow> exponent_formula(FamilySpec const& s) {
  Int const n = static_cast<Int>(s.n);
  Int const K = static_cast<Int>(s.k);
  Int const I = static_cast<Int>(s.i);
  FormulaRow r;
  auto fill = [&](auto&& f) {
    for (Int k = 1; k <= n; ++k) {
      r.values.push_back(f(k));
    }
  };
  switch (s.family) {
    case Family::D1:
      r.text = "(n-2)(n-1)+k";
      fill([&](Int k) { return (n - 2) * (n - 1) + k; });
      break;
    case Family::Dki:
      r.text = "(n-2)(n-k)+1-i+m";
      fill([&](Int m) { return (n - 2) * (n - K) + 1 - I + m; });
      break;
    case Family::ScriptL:
      r.text = "(n-1)(n-3)+k-1";
      fill([&](Int k) { return (n - 1) * (n - 3) + k - 1; });
      break;
    case Family::F:
    case Family::F2:
      r.text = "n^2-5n+7+k (k<=n-2); n^2-5n+6+k (k>=n-1)";
      fill([&](Int k) { return n * n - 5 * n + (k <= n - 2 ? 7 : 6) + k; });
      break;
    case Family::F1:
      r.text = "n^2-5n+6+k";
      fill([&](Int k) { return n * n - 5 * n + 6 + k; });
      break;
    case Family::F3:
      r.text = "n^2-5n+6+k (k<=n-1); n^2-5n+5+k (k=n)";
      fill([&](Int k) { return n * n - 5 * n + (k <= n - 1 ? 6 : 5) + k; });
      break;
    case Family::FPrime:
      r.text = "n^2-5n+6+k (k<=i); n^2-5n+5+k (k>=i+1)";
      fill([&](Int k) { return n * n - 5 * n + (k <= I ? 6 : 5) + k; });
      break;
    case Family::F4:
    case Family::F6:
      r.text = "n^2-5n+6+k (k<=n-2); n^2-4n+4 (k=n-1); n^2-4n+5 (k=n)";
      fill([&](Int k) {
        if (k <= n - 2) return n * n - 5 * n + 6 + k;
        return k == n - 1 ? n * n - 4 * n + 4 : n * n - 4 * n + 5;
      });
      break;
    case Family::F5:
      r.text = "n^2-5n+6+k (k<=n-1); n^2-4n+5 (k=n)";
      fill([&](Int k) {
        return k <= n - 1 ? n * n - 5 * n + 6 + k : n * n - 4 * n + 5;
      });
      break;
    case Family::F7:
      r.text = "n^2-5n+5+k";
      fill([&](Int k) { return n * n - 5 * n + 5 + k; });
      break;
    case Family::B1:
      r.text = "(n-1)(n-4)+k";
      fill([&](Int k) { return (n - 1) * (n - 4) + k; });
      break;
    case Family::B2:
    case Family::B3:
    case Family::B4:
      r.text = "(n-3)^2+n+k-6";
      fill([&](Int k) { return (n - 3) * (n - 3) + n + k - 6; });
      break;
    case Family::D2:
      return std::nullopt;
  }
  switch (s.family) {
    case Family::FPrime:
      r.vertex = detail::fprime_vertices(s.n, s.i);
      break;
    case Family::F4:
    case Family::F6:
      r.vertex = detail::swapped_top_vertices(s.n);
      break;
    case Family::F5:
      // printed as v_{n-1} at k = n; v_{n-1} and v_n tie there
      r.vertex = detail::identity_vertices(s.n);
      r.vertex[s.n - 1] = s.n - 2;
      break;
    default:
      r.vertex = detail::identity_vertices(s.n);
      break;
  }
  return r;
}

/// l(k) for a nonpowerful signing whose cycle-length classes are
/// sign-constant. For D2 this is the case where both (n-1)-cycles share a
/// sign.
inline std::optional<FormulaRow> base_formula(FamilySpec const& s) {
  Int const n = static_cast<Int>(s.n);
  Int const K = static_cast<Int>(s.k);
  Int const I = static_cast<Int>(s.i);
  Int const q = 2 * n * n - 8 * n;  // common leading part of the F/B clauses
  FormulaRow r;
  auto fill = [&](auto&& f) {
    for (Int k = 1; k <= n; ++k) {
      r.values.push_back(f(k));
    }
  };
  switch (s.family) {
    case Family::D1:
      r.text = "2n^2-4n+k+2";
      fill([&](Int k) { return 2 * n * n - 4 * n + k + 2; });
      break;
    case Family::D2:
      r.text = "2n^2-4n+k+1";
      fill([&](Int k) { return 2 * n * n - 4 * n + k + 1; });
      break;
    case Family::Dki:
      r.text = "(2n-2)(n-k)+1-i+m";
      fill([&](Int m) { return (2 * n - 2) * (n - K) + 1 - I + m; });
      break;
    case Family::ScriptL:
      r.text = "2n(n-3)+k+2";
      fill([&](Int k) { return 2 * n * (n - 3) + k + 2; });
      break;
    case Family::F:
    case Family::F2:
      r.text = "2n^2-8n+9+k (k<=n-2); 2n^2-8n+8+k (k>=n-1)";
      fill([&](Int k) { return q + (k <= n - 2 ? 9 : 8) + k; });
      break;
    case Family::F1:
      r.text = "2n^2-8n+8+k";
      fill([&](Int k) { return q + 8 + k; });
      break;
    case Family::F3:
    case Family::F5:
      r.text = "2n^2-8n+8+k (k<=n-1); 2n^2-7n+7 (k=n)";
      fill([&](Int k) { return k <= n - 1 ? q + 8 + k : 2 * n * n - 7 * n + 7; });
      break;
    case Family::F4:
    case Family::F6:
      r.text = "2n^2-8n+8+k (k<=n-2); 2n^2-7n+6 (k=n-1); 2n^2-7n+7 (k=n)";
      fill([&](Int k) {
        if (k <= n - 2) return q + 8 + k;
        return k == n - 1 ? 2 * n * n - 7 * n + 6 : 2 * n * n - 7 * n + 7;
      });
      break;
    case Family::F7:
      r.text = "2n^2-8n+7+k";
      fill([&](Int k) { return q + 7 + k; });
      break;
    case Family::FPrime:
      r.text = "2n^2-8n+8+k (k<=i+1); 2n^2-8n+7+k (k>=i+2)";
      fill([&](Int k) { return q + (k <= I + 1 ? 8 : 7) + k; });
      break;
    case Family::B1:
      r.text = "2n^2-8n+4+k";
      fill([&](Int k) { return q + 4 + k; });
      break;
    case Family::B2:
    case Family::B3:
    case Family::B4:
      r.text = "2n^2-8n+3+k";
      fill([&](Int k) { return q + 3 + k; });
      break;
  }
  switch (s.family) {
    case Family::D1:
    case Family::D2:
      break;  // stated for the ordered values only
    case Family::FPrime:
      r.vertex = detail::fprime_vertices(s.n, s.i);
      break;
    case Family::F4:
    case Family::F6:
      r.vertex = detail::swapped_top_vertices(s.n);
      break;
    default:
      r.vertex = detail::identity_vertices(s.n);
      break;
  }
  return r;
}

/// Upper bounds on l(k) for D2 signings whose two (n-1)-cycles differ in
/// sign: 2n^2-2n+k+1 for k <= n-1 and n^2-n at k = n.
inline FormulaRow d2_split_upper_bound(std::size_t order) {
  Int const n = static_cast<Int>(order);
  FormulaRow r{"2n^2-2n+k+1 (k<=n-1); n^2-n (k=n)", {}, {}};
  for (Int k = 1; k <= n; ++k) {
    r.values.push_back(k <= n - 1 ? 2 * n * n - 2 * n + k + 1 : n * n - n);
  }
  return r;
}

}  // namespace signbase
