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

// Named verification suites with their default parameters.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signbase/error.hpp"
#include "signbase/verify.hpp"

namespace signbase::verify {

inline constexpr std::array<std::string_view, 7> kSuiteNames{
    "exponents", "bases", "tiny", "gaps", "characterizations", "lemmas", "all"};

inline constexpr std::uint64_t kDefaultSeed = 42;

struct SuiteOptions {
  std::optional<std::pair<std::size_t, std::size_t>> orders;  // inclusive
  std::optional<std::size_t> samples;
  std::uint64_t seed = kDefaultSeed;
};

/// Parses "A..B" or a single order "A".
inline std::pair<std::size_t, std::size_t> parse_range(std::string const& text) {
  auto bad = [&] { return ParameterError("invalid order range \"" + text + "\""); };
  auto number = [&](std::string const& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
        s.size() > 6) {
      throw bad();
    }
    return static_cast<std::size_t>(std::stoul(s));
  };
  auto const dots = text.find("..");
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (dots == std::string::npos) {
    lo = hi = number(text);
  } else {
    lo = number(text.substr(0, dots));
    hi = number(text.substr(dots + 2));
  }
  if (lo == 0 || lo > hi) throw bad();
  return {lo, hi};
}

namespace detail {

inline void require_orders(std::string_view suite, std::size_t lo, std::size_t hi,
                           std::size_t min, std::size_t max) {
  if (lo < min || hi > max) {
    throw ParameterError(std::string(suite) + " suite accepts orders " +
                         std::to_string(min) + ".." + std::to_string(max));
  }
}

inline std::vector<std::size_t> orders_of(SuiteOptions const& opt,
                                          std::vector<std::size_t> fallback) {
  if (!opt.orders) return fallback;
  std::vector<std::size_t> v;
  for (std::size_t n = opt.orders->first; n <= opt.orders->second; ++n) v.push_back(n);
  return v;
}

inline void append(std::vector<Outcome>& out, std::vector<Outcome> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

}  // namespace detail

/// Runs a suite by name. Throws ParameterError for unknown suites and
/// out-of-range parameters.
inline std::vector<Outcome> run_suite(std::string_view name, SuiteOptions const& opt = {}) {
  std::vector<Outcome> out;
  if (name == "exponents" || name == "bases") {
    auto const [lo, hi] = opt.orders.value_or(std::pair<std::size_t, std::size_t>{6, 12});
    detail::require_orders(name, lo, hi, 6, 20);
    out = name == "exponents" ? verify_exponent_formulas(lo, hi)
                              : verify_base_formulas(lo, hi, opt.seed);
  } else if (name == "tiny") {
    TinyOptions t;
    t.seed = opt.seed;
    if (opt.samples) t.samples = *opt.samples;
    if (opt.orders) {
      detail::require_orders(name, opt.orders->first, opt.orders->second, 1, 3);
      t.n_max = opt.orders->second;
    }
    out = exhaustive_tiny(t);
  } else if (name == "gaps" || name == "characterizations") {
    bool const gaps = name == "gaps";
    auto const orders = detail::orders_of(opt, {14, 15});
    detail::require_orders(name, orders.front(), orders.back(), 14, 40);
    std::size_t const samples = opt.samples.value_or(gaps ? 1000 : 200);
    for (std::size_t n : orders) {
      detail::append(out, gaps ? gap_scan(n, samples, opt.seed)
                               : characterization_check(n, samples, opt.seed));
    }
  } else if (name == "lemmas") {
    auto const orders = detail::orders_of(opt, {8, 10, 14});
    detail::require_orders(name, orders.front(), orders.back(), 4, 40);
    out = random_battery(orders, opt.samples.value_or(1000), opt.seed);
  } else if (name == "all") {
    // every suite with its defaults; only the seed carries over
    SuiteOptions base;
    base.seed = opt.seed;
    for (auto s : kSuiteNames) {
      if (s != "all") detail::append(out, run_suite(s, base));
    }
  } else {
    throw ParameterError("unknown suite \"" + std::string(name) + "\"");
  }
  canonical_order(out);
  return out;
}

}  // namespace signbase::verify
