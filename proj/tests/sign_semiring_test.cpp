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

#include "signbase/sign_semiring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace signbase {
namespace {

TEST(SignSemiring, AdditionTable) {
  EXPECT_EQ(Sign::Plus + Sign::Minus, Sign::Ambiguous);
  EXPECT_EQ(Sign::Plus + Sign::Plus, Sign::Plus);
  EXPECT_EQ(Sign::Zero + Sign::Minus, Sign::Minus);
  EXPECT_EQ(Sign::Ambiguous + Sign::Zero, Sign::Ambiguous);
}

TEST(SignSemiring, MultiplicationTable) {
  EXPECT_EQ(Sign::Minus * Sign::Minus, Sign::Plus);
  EXPECT_EQ(Sign::Plus * Sign::Minus, Sign::Minus);
  EXPECT_EQ(Sign::Ambiguous * Sign::Plus, Sign::Ambiguous);
  EXPECT_EQ(Sign::Ambiguous * Sign::Minus, Sign::Ambiguous);
  EXPECT_EQ(Sign::Ambiguous * Sign::Zero, Sign::Zero);
}

TEST(SignSemiring, AxiomsHoldOnEveryTuple) {
  for (Sign a : kAllSigns) {
    EXPECT_EQ(a + Sign::Zero, a);
    EXPECT_EQ(a * Sign::Plus, a);
    EXPECT_EQ(a * Sign::Zero, Sign::Zero);
    EXPECT_EQ(a + a, a);
    for (Sign b : kAllSigns) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      for (Sign c : kAllSigns) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) * c, a * c + b * c);
      }
    }
  }
}

TEST(SignSemiring, SignOfAndChars) {
  EXPECT_EQ(sign_of(3), Sign::Plus);
  EXPECT_EQ(sign_of(-1), Sign::Minus);
  EXPECT_EQ(sign_of(0), Sign::Zero);
  EXPECT_EQ(to_char(Sign::Ambiguous), '#');
}

SignMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  SignMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.set(i, j, kAllSigns[rng() % 4]);
    }
  }
  return m;
}

SignMatrix naive_product(SignMatrix const& a, SignMatrix const& b) {
  std::size_t const n = a.order();
  SignMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Sign s = Sign::Zero;
      for (std::size_t k = 0; k < n; ++k) s = s + a.at(i, k) * b.at(k, j);
      c.set(i, j, s);
    }
  }
  return c;
}

TEST(SignMatrix, ProductMatchesScalarDefinition) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1, 2, 3, 5, 17, 63, 64, 65, 130}) {
    auto const a = random_matrix(n, rng);
    auto const b = random_matrix(n, rng);
    EXPECT_EQ(a * b, naive_product(a, b)) << "n=" << n;
  }
}

TEST(SignMatrix, ProductIsAssociative) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {4, 9, 70}) {
    auto const a = random_matrix(n, rng);
    auto const b = random_matrix(n, rng);
    auto const c = random_matrix(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(SignMatrix, IdentityAndFill) {
  std::mt19937_64 rng(3);
  auto const a = random_matrix(10, rng);
  EXPECT_EQ(SignMatrix::identity(10) * a, a);
  EXPECT_EQ(a * SignMatrix::identity(10), a);
  EXPECT_TRUE(SignMatrix::filled(5, Sign::Ambiguous).all_ambiguous());
  EXPECT_FALSE(SignMatrix::filled(5, Sign::Plus).all_ambiguous());
  EXPECT_TRUE(SignMatrix::filled(5, Sign::Plus).ambiguity_free());
}

TEST(SignMatrix, SupportMatchesNonzeroEntries) {
  std::mt19937_64 rng(5);
  auto const a = random_matrix(66, rng);
  auto const s = a.support();
  for (std::size_t i = 0; i < 66; ++i) {
    for (std::size_t j = 0; j < 66; ++j) {
      EXPECT_EQ(s.test(i, j), a.at(i, j) != Sign::Zero);
    }
  }
}

TEST(BitMatrix, ProductMatchesBooleanDefinition) {
  std::mt19937_64 rng(13);
  for (std::size_t n : {1, 7, 64, 65, 100}) {
    BitMatrix a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a.set(i, j, rng() % 3 == 0);
        b.set(i, j, rng() % 3 == 0);
      }
    }
    auto const c = a * b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool want = false;
        for (std::size_t k = 0; k < n; ++k) want = want || (a.test(i, k) && b.test(k, j));
        ASSERT_EQ(c.test(i, j), want);
      }
    }
  }
}

TEST(PowerStream, YieldsSuccessivePowersUpToCap) {
  std::mt19937_64 rng(17);
  auto const a = random_matrix(6, rng);
  PowerStream s(a, 5);
  SignMatrix expect = a;
  std::size_t count = 0;
  for (auto it = s.begin(); it != s.end(); ++it) {
    ++count;
    EXPECT_EQ(it.exponent(), count);
    EXPECT_EQ(*it, expect);
    expect = expect * a;
  }
  EXPECT_EQ(count, 5U);
  EXPECT_FALSE(s.advance());
}

}  // namespace
}  // namespace signbase
