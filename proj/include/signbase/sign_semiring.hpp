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

// The four-element sign semiring {0, +, -, #} and square matrices over it.
//
// A Sign is stored as two witness bits: bit 0 says "some positive walk
// exists", bit 1 says "some negative walk exists". Addition is then bitwise
// OR and multiplication crosses the bits, so a matrix can keep one bit plane
// per witness and combine whole rows a machine word at a time.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "signbase/error.hpp"

namespace signbase {

enum class Sign : std::uint8_t { Zero = 0, Plus = 1, Minus = 2, Ambiguous = 3 };

constexpr Sign sign_add(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<std::uint8_t>(a) |
                           static_cast<std::uint8_t>(b));
}

constexpr Sign sign_mul(Sign a, Sign b) noexcept {
  auto const x = static_cast<std::uint8_t>(a);
  auto const y = static_cast<std::uint8_t>(b);
  std::uint8_t const pos = ((x & y & 1U) | ((x >> 1) & (y >> 1) & 1U));
  std::uint8_t const neg = (((x & 1U) & (y >> 1)) | ((x >> 1) & y & 1U));
  return static_cast<Sign>(pos | (neg << 1));
}

constexpr Sign operator+(Sign a, Sign b) noexcept { return sign_add(a, b); }
constexpr Sign operator*(Sign a, Sign b) noexcept { return sign_mul(a, b); }

constexpr Sign sign_of(int s) noexcept {
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

constexpr char to_char(Sign s) noexcept {
  switch (s) {
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Ambiguous: return '#';
  }
  return '?';
}

inline constexpr Sign kAllSigns[] = {Sign::Zero, Sign::Plus, Sign::Minus,
                                     Sign::Ambiguous};

namespace detail {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) noexcept {
  return (n + kWordBits - 1) / kWordBits;
}

// Mask of the valid bits in the last word of a row of length n.
constexpr Word tail_mask(std::size_t n) noexcept {
  std::size_t const r = n % kWordBits;
  return r == 0 ? ~Word{0} : ((Word{1} << r) - 1);
}

// Calls f(j) for every set bit j of a row spanning `words` words.
template <typename F>
void for_each_bit(Word const* row, std::size_t words, F&& f) {
  for (std::size_t w = 0; w < words; ++w) {
    Word bits = row[w];
    while (bits != 0) {
      auto const b = static_cast<std::size_t>(std::countr_zero(bits));
      f(w * kWordBits + b);
      bits &= bits - 1;
    }
  }
}

}  // namespace detail

/// Square 0/1 matrix with bit-packed rows. Used for walk existence.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_(detail::words_for(n)), bits_(n * words_, 0) {}

  std::size_t order() const noexcept { return n_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (row(i)[j / detail::kWordBits] >> (j % detail::kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    auto& w = row_mut(i)[j / detail::kWordBits];
    auto const bit = detail::Word{1} << (j % detail::kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }

  bool all_ones() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!row_full(i)) {
        return false;
      }
    }
    return true;
  }

  bool row_full(std::size_t i) const noexcept {
    auto const* r = row(i);
    for (std::size_t w = 0; w + 1 < words_; ++w) {
      if (r[w] != ~detail::Word{0}) {
        return false;
      }
    }
    return words_ == 0 || r[words_ - 1] == detail::tail_mask(n_);
  }

  friend BitMatrix operator*(BitMatrix const& a, BitMatrix const& b) {
    if (a.n_ != b.n_) {
      throw DimensionMismatch("BitMatrix product of orders " +
                              std::to_string(a.n_) + " and " +
                              std::to_string(b.n_));
    }
    BitMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      auto* out = c.row_mut(i);
      detail::for_each_bit(a.row(i), a.words_, [&](std::size_t k) {
        auto const* in = b.row(k);
        for (std::size_t w = 0; w < a.words_; ++w) {
          out[w] |= in[w];
        }
      });
    }
    return c;
  }

  friend bool operator==(BitMatrix const&, BitMatrix const&) = default;

 private:
  detail::Word const* row(std::size_t i) const noexcept {
    return bits_.data() + i * words_;
  }
  detail::Word* row_mut(std::size_t i) noexcept {
    return bits_.data() + i * words_;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<detail::Word> bits_;
};

/// Square matrix over the sign semiring, stored as two bit planes.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(std::size_t n)
      : n_(n),
        words_(detail::words_for(n)),
        pos_(n * words_, 0),
        neg_(n * words_, 0) {}

  /// Diagonal +, zero elsewhere.
  static SignMatrix identity(std::size_t n) {
    SignMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i, Sign::Plus);
    }
    return m;
  }

  static SignMatrix filled(std::size_t n, Sign s) {
    SignMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j, s);
      }
    }
    return m;
  }

  std::size_t order() const noexcept { return n_; }

  Sign at(std::size_t i, std::size_t j) const noexcept {
    std::size_t const w = i * words_ + j / detail::kWordBits;
    std::size_t const b = j % detail::kWordBits;
    auto const p = static_cast<std::uint8_t>((pos_[w] >> b) & 1U);
    auto const q = static_cast<std::uint8_t>((neg_[w] >> b) & 1U);
    return static_cast<Sign>(p | (q << 1));
  }

  void set(std::size_t i, std::size_t j, Sign s) noexcept {
    std::size_t const w = i * words_ + j / detail::kWordBits;
    auto const bit = detail::Word{1} << (j % detail::kWordBits);
    auto const v = static_cast<std::uint8_t>(s);
    pos_[w] = (v & 1U) ? (pos_[w] | bit) : (pos_[w] & ~bit);
    neg_[w] = (v & 2U) ? (neg_[w] | bit) : (neg_[w] & ~bit);
  }

  /// True iff every entry is #.
  bool all_ambiguous() const noexcept {
    return plane_full(pos_) && plane_full(neg_);
  }

  /// True iff no entry is 0.
  bool all_nonzero() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t w = 0; w < words_; ++w) {
        auto const full =
            (w + 1 == words_) ? detail::tail_mask(n_) : ~detail::Word{0};
        if (((pos_[i * words_ + w] | neg_[i * words_ + w]) & full) != full) {
          return false;
        }
      }
    }
    return true;
  }

  /// True iff no entry is #.
  bool ambiguity_free() const noexcept {
    for (std::size_t w = 0; w < pos_.size(); ++w) {
      if ((pos_[w] & neg_[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  /// Zero/nonzero pattern.
  BitMatrix support() const {
    BitMatrix b(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(i, j) != Sign::Zero) {
          b.set(i, j);
        }
      }
    }
    return b;
  }

  /// Rows as strings over {0,+,-,#}, one string per row.
  std::vector<std::string> rows() const {
    std::vector<std::string> out(n_, std::string(n_, '0'));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out[i][j] = to_char(at(i, j));
      }
    }
    return out;
  }

  friend SignMatrix operator*(SignMatrix const& a, SignMatrix const& b) {
    if (a.n_ != b.n_) {
      throw DimensionMismatch("SignMatrix product of orders " +
                              std::to_string(a.n_) + " and " +
                              std::to_string(b.n_));
    }
    SignMatrix c(a.n_);
    std::size_t const words = a.words_;
    for (std::size_t i = 0; i < a.n_; ++i) {
      auto* out_pos = c.pos_.data() + i * words;
      auto* out_neg = c.neg_.data() + i * words;
      // A(i,k) = + copies row k of B as is; A(i,k) = - swaps its planes.
      detail::for_each_bit(a.pos_.data() + i * words, words,
                           [&](std::size_t k) {
                             auto const* bp = b.pos_.data() + k * words;
                             auto const* bn = b.neg_.data() + k * words;
                             for (std::size_t w = 0; w < words; ++w) {
                               out_pos[w] |= bp[w];
                               out_neg[w] |= bn[w];
                             }
                           });
      detail::for_each_bit(a.neg_.data() + i * words, words,
                           [&](std::size_t k) {
                             auto const* bp = b.pos_.data() + k * words;
                             auto const* bn = b.neg_.data() + k * words;
                             for (std::size_t w = 0; w < words; ++w) {
                               out_pos[w] |= bn[w];
                               out_neg[w] |= bp[w];
                             }
                           });
    }
    return c;
  }

  friend bool operator==(SignMatrix const&, SignMatrix const&) = default;

 private:
  bool plane_full(std::vector<detail::Word> const& plane) const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t w = 0; w < words_; ++w) {
        auto const full =
            (w + 1 == words_) ? detail::tail_mask(n_) : ~detail::Word{0};
        if (plane[i * words_ + w] != full) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<detail::Word> pos_;
  std::vector<detail::Word> neg_;
};

inline SignMatrix mat_mul(SignMatrix const& a, SignMatrix const& b) {
  return a * b;
}

/// Lazily yields A^1, A^2, ..., A^cap.
///
///   for (SignMatrix const& p : PowerStream(a, cap)) { ... }
///
/// `exponent()` on the stream (or on the iterator) gives the current t.
class PowerStream {
 public:
  PowerStream(SignMatrix base, std::size_t cap)
      : base_(std::move(base)), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t exponent() const noexcept { return t_; }
  SignMatrix const& current() const noexcept { return current_; }

  /// Moves to the next power; false once `cap` powers have been produced.
  bool advance() {
    if (t_ >= cap_) {
      return false;
    }
    current_ = (t_ == 0) ? base_ : current_ * base_;
    ++t_;
    return true;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SignMatrix;
    using difference_type = std::ptrdiff_t;
    using pointer = SignMatrix const*;
    using reference = SignMatrix const&;

    iterator() = default;
    explicit iterator(PowerStream* s) : s_(s) {
      if (s_ != nullptr && !s_->advance()) {
        s_ = nullptr;
      }
    }
    reference operator*() const { return s_->current(); }
    pointer operator->() const { return &s_->current(); }
    std::size_t exponent() const { return s_->exponent(); }
    iterator& operator++() {
      if (!s_->advance()) {
        s_ = nullptr;
      }
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(iterator const& a, iterator const& b) {
      return a.s_ == b.s_;
    }

   private:
    PowerStream* s_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  SignMatrix base_;
  SignMatrix current_;
  std::size_t cap_;
  std::size_t t_ = 0;
};

inline PowerStream power_stream(SignMatrix a, std::size_t cap) {
  return PowerStream(std::move(a), cap);
}

}  // namespace signbase
