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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "signbase/sign_semiring.hpp"

namespace signbase {

/// Linear system over GF(2), kept in incremental echelon form.
class Gf2System {
 public:
  explicit Gf2System(std::size_t vars)
      : vars_(vars), words_(detail::words_for(vars)) {}

  std::size_t vars() const noexcept { return vars_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  bool consistent() const noexcept { return consistent_; }

  /// Adds sum_{v in support} x_v = rhs. Returns false if the system became
  /// inconsistent.
  bool add_equation(std::vector<std::size_t> const& support, bool rhs) {
    Row r{std::vector<detail::Word>(words_, 0), rhs, 0};
    for (std::size_t v : support) {
      r.bits[v / detail::kWordBits] ^= detail::Word{1} << (v % detail::kWordBits);
    }
    return insert(std::move(r));
  }

  /// Lexicographically smallest solution with x_0 the most significant
  /// variable, or nullopt when inconsistent.
  std::optional<std::vector<bool>> lexmin_solution() const {
    return complete([](std::size_t) { return false; });
  }

  /// Solution whose free variables are chosen by `pick(var)`, processed in
  /// variable order.
  template <typename Pick>
  std::optional<std::vector<bool>> complete(Pick&& pick) const {
    if (!consistent_) {
      return std::nullopt;
    }
    Gf2System work = *this;
    std::vector<bool> x(vars_, false);
    for (std::size_t v = 0; v < vars_; ++v) {
      Row unit{std::vector<detail::Word>(words_, 0), false, 0};
      unit.bits[v / detail::kWordBits] = detail::Word{1} << (v % detail::kWordBits);
      work.reduce(unit);
      if (is_zero(unit.bits)) {
        x[v] = unit.rhs;  // determined by earlier choices
      } else {
        x[v] = pick(v);
        work.add_equation({v}, x[v]);
      }
    }
    return x;
  }

 private:
  struct Row {
    std::vector<detail::Word> bits;
    bool rhs;
    std::size_t pivot;
  };

  static bool is_zero(std::vector<detail::Word> const& bits) {
    for (auto w : bits) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  // Rows are reduced against every earlier row when inserted, so one pass in
  // insertion order clears each pivot for good.
  void reduce(Row& r) const {
    for (auto const& b : basis_) {
      auto const w = b.pivot / detail::kWordBits;
      if ((r.bits[w] >> (b.pivot % detail::kWordBits)) & 1U) {
        for (std::size_t i = 0; i < words_; ++i) {
          r.bits[i] ^= b.bits[i];
        }
        r.rhs = r.rhs != b.rhs;
      }
    }
  }

  bool insert(Row r) {
    reduce(r);
    if (is_zero(r.bits)) {
      if (r.rhs) {
        consistent_ = false;
      }
      return consistent_;
    }
    for (std::size_t w = 0; w < words_; ++w) {
      if (r.bits[w] != 0) {
        r.pivot = w * detail::kWordBits +
                  static_cast<std::size_t>(std::countr_zero(r.bits[w]));
        break;
      }
    }
    basis_.push_back(std::move(r));
    return consistent_;
  }

  std::size_t vars_;
  std::size_t words_;
  bool consistent_ = true;
  std::vector<Row> basis_;
};

}  // namespace signbase
