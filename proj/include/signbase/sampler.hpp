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

// Random primitive nonpowerful signed digraphs: a Hamilton cycle through a
// random vertex order, Bernoulli extra arcs (loops included) and a fair coin
// per arc sign. Draws that are not primitive, are powerful, or have more
// simple cycles than the catalog cap are rejected and redrawn.

#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "signbase/digraph.hpp"
#include "signbase/error.hpp"

namespace signbase {

struct SamplerOptions {
  std::size_t max_cycles = 200'000;
  std::size_t max_attempts = 20'000;
};

struct Sample {
  SignedDigraph graph;
  CycleCatalog catalog;
  std::size_t attempts = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; std distributions are not
// specified bit-for-bit across standard libraries.
inline double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t below(std::mt19937_64& rng, std::size_t m) {
  return static_cast<std::size_t>(rng() % m);
}

inline SignedDigraph draw(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[below(rng, i)]);
  }
  std::vector<char> present(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    present[order[j] * n + order[(j + 1) % n]] = 1;
  }
  // Half the draws are very sparse (about 1..3 extra arcs), where the
  // large bases live; the rest expect between 1 and 2n extra arcs.
  std::size_t const extra = unit(rng) < 0.5 ? 1 + below(rng, 3) : 1 + below(rng, 2 * n);
  double const p = static_cast<double>(extra) / static_cast<double>(n * n);
  for (std::size_t c = 0; c < n * n; ++c) {
    if (!present[c] && unit(rng) < p) {
      present[c] = 1;
    }
  }
  SignedDigraph g(n);
  for (std::size_t c = 0; c < n * n; ++c) {
    if (present[c]) {
      g.add_arc(c / n, c % n, unit(rng) < 0.5 ? -1 : 1);
    }
  }
  return g;
}

}  // namespace detail

/// Generator for draw `index` of the stream named by `seed`.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(detail::splitmix64(seed ^ detail::splitmix64(index)));
}

/// The index-th sample of order n for `seed`, or nullopt when every attempt
/// was rejected.
inline std::optional<Sample> sample_instance(std::size_t n, std::uint64_t seed,
                                             std::uint64_t index,
                                             SamplerOptions const& opt = {}) {
  if (n == 0) {
    throw ParameterError("sample order must be positive");
  }
  auto rng = sample_rng(seed, index);
  for (std::size_t attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    auto g = detail::draw(n, rng);
    if (period(g) != 1 || powerful_signature(g)) {
      continue;
    }
    try {
      auto cat = cycle_catalog(g, opt.max_cycles);
      return Sample{std::move(g), std::move(cat), attempt};
    } catch (CycleCapExceeded const&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace signbase
