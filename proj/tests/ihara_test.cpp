/* Copyright 2026 The cmzv Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cmzv/ihara.hpp"

using namespace cmzv;

namespace {

Word W(const char* text, int n) { return parse_word(text, n); }

LinComb L(std::initializer_list<std::pair<const char*, Rational>> terms, int n) {
  LinComb x(n);
  for (const auto& [t, c] : terms) x.add(W(t, n), c);
  return x;
}

// Oracle for circ, unrolled: w.a plus, for each root letter e_eps at position p,
//   w_<p ([eps]a) e_eps w_>p + w_<p e_eps ([eps]a)* w_>p.
LinComb circ_oracle(const LinComb& a, const Word& w) {
  const int n = w.modulus();
  LinComb out = concat(w, a, Word(n));
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].is_zero()) continue;
    const Word before = w.subword(0, p);
    const Word after = w.subword(p + 1, w.size() - p - 1);
    const Word e = single_letter(n, w[p]);
    for (const auto& [u, c] : a) {
      Word t(n);
      for (Letter l : u.letters())
        t.push_back(l.is_zero() ? l : Letter::root(RootExp::reduced(n, l.exponent() + w[p].exponent())));
      out.add(before + t + e + after, c);
      Word rev(n);
      for (std::size_t i = t.size(); i-- > 0;) rev.push_back(t[i]);
      out.add(before + e + rev + after, t.size() % 2 == 0 ? c : Rational(-c));
    }
  }
  return out;
}

// ad(e_0)^m e_eta by repeated commutators x -> e_0 x - x e_0.
LinComb ad_oracle(int n, int eta, int m) {
  LinComb x(single_letter(n, Letter::root(eta)));
  const Word z = single_letter(n, Letter::zero());
  for (int i = 0; i < m; ++i) x = concat(LinComb(z), x) - concat(x, LinComb(z));
  return x;
}

LinComb random_combination(std::mt19937& rng, int n, int weight) {
  std::uniform_int_distribution<int> letter(-1, n - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  LinComb x(n);
  for (int t = 0; t < 3; ++t) {
    Word w(n);
    for (int i = 0; i < weight; ++i) {
      const int k = letter(rng);
      w.push_back(k < 0 ? Letter::zero() : Letter::root(k));
    }
    x.add(w, coeff(rng));
  }
  return x;
}

}  // namespace

TEST(Twist, Examples) {
  EXPECT_EQ(twist(RootExp(3, 1), W("x,1", 3)), W("x,2", 3));
  const Word w = W("x,1,3,x,0", 4);
  EXPECT_EQ(twist(RootExp::one(4), w), w);
  EXPECT_EQ(twist(RootExp(4, 2), w), W("x,3,1,x,2", 4));
  EXPECT_THROW(twist(RootExp(3, 1), W("1", 4)), ModulusMismatch);
}

TEST(Twist, GroupActionExhaustive) {
  for (int n = 2; n <= 4; ++n) {
    for (int s = 0; s <= 4; ++s) {
      for (int d = 0; d <= s; ++d) {
        for (const Word& w : all_words(n, s, d)) {
          EXPECT_EQ(twist(RootExp::one(n), w), w);
          for (int e = 0; e < n; ++e) {
            for (int f = 0; f < n; ++f) {
              const RootExp re(n, e);
              const RootExp rf(n, f);
              EXPECT_EQ(twist(re, twist(rf, w)), twist(re * rf, w));
            }
            EXPECT_EQ(weight_and_depth(twist(RootExp(n, e), w)), weight_and_depth(w));
          }
        }
      }
    }
  }
}

TEST(Star, Examples) {
  EXPECT_EQ(star(W("1,x", 2)), std::make_pair(Rational(1), W("x,1", 2)));
  EXPECT_EQ(star(W("2", 3)), std::make_pair(Rational(-1), W("2", 3)));
  EXPECT_EQ(star(W("", 3)), std::make_pair(Rational(1), W("", 3)));
  EXPECT_EQ(star(L({{"1,2,x", 2}, {"0", 1}}, 3)), L({{"x,2,1", -2}, {"0", -1}}, 3));
}

TEST(Star, SignedInvolutionExhaustive) {
  for (int n = 2; n <= 4; ++n) {
    for (int s = 0; s <= 4; ++s) {
      for (int d = 0; d <= s; ++d) {
        for (const Word& w : all_words(n, s, d)) {
          const auto [s1, w1] = star(w);
          const auto [s2, w2] = star(w1);
          EXPECT_EQ(s1 * s2, 1);
          EXPECT_EQ(w2, w);
        }
      }
    }
  }
}

TEST(Circ, SingleLetterActingOnSingleLetter) {
  // e_{-1} o e_j = e_{-j} e_j - e_j e_{-j} + e_j e_{-1}
  EXPECT_EQ(circ(L({{"1", 1}}, 2), W("0", 2)), L({{"1,0", 1}}, 2));
  EXPECT_EQ(circ(L({{"1", 1}}, 2), W("1", 2)), L({{"0,1", 1}, {"1,0", -1}, {"1,1", 1}}, 2));
}

TEST(Circ, ZeroPowerAppendsA) {
  const LinComb a = L({{"1,x", 2}, {"3", -1}}, 4);
  EXPECT_EQ(circ(a, W("x,x", 4)), concat(W("x,x", 4), a, Word(4)));
  EXPECT_EQ(circ(a, W("", 4)), a);
}

TEST(Circ, TwoLetterActionForThirdRoots) {
  const LinComb a = L({{"1", 1}, {"2", 1}}, 3);
  for (int j = 0; j < 3; ++j) {
    const auto e = [&](int k) { return Letter::root(RootExp::reduced(3, k)); };
    LinComb expected(3);
    expected.add(Word(3, {e(j + 1), e(j)}), 1);
    expected.add(Word(3, {e(j + 2), e(j)}), 1);
    expected.add(Word(3, {e(j), e(j + 1)}), -1);
    expected.add(Word(3, {e(j), e(j + 2)}), -1);
    expected.add(Word(3, {e(j), e(1)}), 1);
    expected.add(Word(3, {e(j), e(2)}), 1);
    EXPECT_EQ(circ(a, single_letter(3, e(j))), expected) << j;
  }
}

TEST(Circ, MatchesUnrolledOracle) {
  std::mt19937 rng(17);
  for (int n = 2; n <= 4; ++n) {
    for (int s = 0; s <= 4; ++s) {
      for (int d = 0; d <= s; ++d) {
        for (const Word& w : all_words(n, s, d)) {
          const LinComb a = random_combination(rng, n, 1 + static_cast<int>(rng() % 3));
          ASSERT_EQ(circ(a, w), circ_oracle(a, w)) << format_word(w);
        }
      }
    }
  }
}

TEST(Circ, WeightAndDepthAdditive) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const int wa = 1 + static_cast<int>(rng() % 4);
    const int ww = static_cast<int>(rng() % static_cast<unsigned>(9 - wa));
    // A single word keeps a homogeneous in depth as well as weight.
    Word a(n);
    Word w(n);
    for (int i = 0; i < wa; ++i) {
      const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1)) - 1;
      a.push_back(k < 0 ? Letter::zero() : Letter::root(k));
    }
    for (int i = 0; i < ww; ++i) {
      const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1)) - 1;
      w.push_back(k < 0 ? Letter::zero() : Letter::root(k));
    }
    for (const auto& [u, c] : circ(LinComb(a), w)) {
      EXPECT_EQ(u.weight(), a.weight() + w.weight());
      EXPECT_EQ(u.depth(), a.depth() + w.depth());
    }
  }
}

TEST(Circ, ModulusMismatch) {
  EXPECT_THROW(circ(L({{"1", 1}}, 2), W("1", 3)), ModulusMismatch);
}

TEST(AdPower, MatchesCommutatorExpansion) {
  for (int n = 2; n <= 4; ++n)
    for (int eta = 0; eta < n; ++eta)
      for (int m = 0; m <= 6; ++m) EXPECT_EQ(ad_power(RootExp(n, eta), m), ad_oracle(n, eta, m));
}

TEST(SigmaBar, WeightOne) {
  EXPECT_EQ(sigma_bar(2, 1).element(), L({{"1", 1}}, 2));
  EXPECT_EQ(sigma_bar(3, 1).element(), L({{"1", 1}, {"2", 1}}, 3));
  EXPECT_EQ(sigma_bar(4, 1).element(), L({{"1", 1}, {"3", 1}, {"2", 2}}, 4));
}

TEST(SigmaBar, ModulusTwoWeightThree) {
  const LinComb expected = L({{"x,x,1", -3}, {"x,1,x", 6}, {"1,x,x", -3},
                              {"x,x,0", 4}, {"x,0,x", -8}, {"0,x,x", 4}}, 2);
  EXPECT_EQ(sigma_bar(2, 3).element(), expected);
  EXPECT_EQ(sigma_bar(2, 3).element(), Rational(-3) * ad_oracle(2, 1, 2) + Rational(4) * ad_oracle(2, 0, 2));
}

TEST(SigmaBar, ModulusThreeWeightTwo) {
  EXPECT_EQ(sigma_bar(3, 2).element(), L({{"x,1", 1}, {"1,x", -1}, {"x,2", -1}, {"2,x", 1}}, 3));
}

TEST(SigmaBar, OddWeightsAgainstCommutatorExpansion) {
  for (int j = 1; j <= 3; ++j) {
    const int m = 2 * j;
    const Rational p2 = boost::multiprecision::pow(boost::multiprecision::cpp_int(2), m);
    const Rational p3 = boost::multiprecision::pow(boost::multiprecision::cpp_int(3), m);
    EXPECT_EQ(sigma_bar(2, m + 1).element(),
              (1 - p2) * ad_oracle(2, 1, m) + p2 * ad_oracle(2, 0, m));
    EXPECT_EQ(sigma_bar(3, m + 1).element(),
              (1 - p3) * (ad_oracle(3, 1, m) + ad_oracle(3, 2, m)) + Rational(2 * p3) * ad_oracle(3, 0, m));
    EXPECT_EQ(sigma_bar(4, m + 1).element(),
              (1 - p2) * (ad_oracle(4, 1, m) + ad_oracle(4, 3, m)) +
                  Rational(2 * p2 * (1 - p2)) * ad_oracle(4, 2, m) + Rational(2 * p2 * p2) * ad_oracle(4, 0, m));
  }
}

TEST(SigmaBar, EvenWeightsAgainstCommutatorExpansion) {
  for (int n = 3; n <= 4; ++n)
    for (int w = 2; w <= 6; w += 2)
      EXPECT_EQ(sigma_bar(n, w).element(), ad_oracle(n, 1, w - 1) - ad_oracle(n, n - 1, w - 1));
}

TEST(SigmaBar, HomogeneousDepthOne) {
  for (int n = 2; n <= 4; ++n) {
    for (int w = 1; w <= 7; ++w) {
      if (!is_valid_generator(n, w)) continue;
      const auto g = sigma_bar(n, w).element().homogeneous_grading();
      ASSERT_TRUE(g.has_value());
      EXPECT_EQ(*g, (WeightDepth{w, 1}));
    }
  }
}

TEST(SigmaBar, InvalidGenerators) {
  EXPECT_THROW(sigma_bar(2, 2), DomainError);
  EXPECT_THROW(sigma_bar(3, 0), DomainError);
  EXPECT_THROW(sigma_bar(4, -1), DomainError);
  EXPECT_FALSE(is_valid_generator(2, 4));
  EXPECT_TRUE(is_valid_generator(4, 4));
  EXPECT_THROW(SigmaBar(2, 2, L({{"1", 1}}, 2)), DomainError);
}

TEST(DbarDual, ModulusTwoWeightOne) {
  EXPECT_EQ(dbar_dual(2, 1, W("1,1", 2)), L({{"1", 1}}, 2));
}

TEST(DbarDual, ModulusTwoWeightThree) {
  EXPECT_EQ(dbar_dual(2, 3, W("1,x,x,1", 2)), L({{"1", -3}}, 2));
  // Independent check: coefficient of e_{-1} e_0^2 e_{-1} in sigma_3 o v for v = e_{+-1}.
  const Word target = W("1,x,x,1", 2);
  const LinComb s3 = Rational(-3) * ad_oracle(2, 1, 2) + Rational(4) * ad_oracle(2, 0, 2);
  EXPECT_EQ(circ_oracle(s3, W("1", 2)).coefficient(target), -3);
  EXPECT_EQ(circ_oracle(s3, W("0", 2)).coefficient(target), 0);
}

TEST(DbarDual, MatchesTransposeOfOracle) {
  for (int n = 2; n <= 4; ++n) {
    for (int g = 1; g <= 3; ++g) {
      if (!is_valid_generator(n, g)) continue;
      const LinComb s = sigma_bar(n, g).element();
      for (int weight = g; weight <= g + 2; ++weight) {
        for (int depth = 1; depth <= weight - g + 1; ++depth) {
          std::map<Word, LinComb> expected;
          for (const Word& v : all_words(n, weight - g, depth - 1))
            for (const auto& [u, c] : circ_oracle(s, v)) expected.try_emplace(u, n).first->second.add(v, c);
          for (const Word& u : all_words(n, weight, depth)) {
            auto it = expected.find(u);
            EXPECT_EQ(dbar_dual(n, g, u), it == expected.end() ? LinComb(n) : it->second) << format_word(u);
          }
        }
      }
    }
  }
}

TEST(DbarDual, HigherGeneratorsVanishOnUnitWords) {
  for (int n = 2; n <= 4; ++n)
    for (int g = 2; g <= 4; ++g) {
      if (!is_valid_generator(n, g)) continue;
      for (int s = g; s <= 5; ++s)
        for (const Word& u : unit_words(n, s)) EXPECT_TRUE(dbar_dual(n, g, u).is_zero());
    }
}

TEST(DbarDual, Errors) {
  EXPECT_THROW(dbar_dual(2, 2, W("1,1", 2)), DomainError);
  EXPECT_THROW(dbar_dual(2, 3, W("1,1", 2)), DomainError);
  EXPECT_THROW(dbar_dual(2, 1, W("x,x", 2)), DomainError);
  EXPECT_THROW(dbar_dual(3, 1, W("1,1", 2)), ModulusMismatch);
}

TEST(DbarDual, LinearOverCombinations) {
  const LinComb x = L({{"1,1", 2}, {"1,x,0", -1}, {"0,1,1", Rational(1, 3)}}, 2);
  LinComb expected(2);
  for (const auto& [w, c] : x) expected.add(dbar_dual(2, 1, w), c);
  EXPECT_EQ(dbar_dual(2, 1, x), expected);
}

TEST(DualMatrix, ShapeAndSerialization) {
  const DualMatrix m = dual_matrix(2, 1, 2, 2);
  ASSERT_EQ(m.rows.size(), 4u);
  ASSERT_EQ(m.cols.size(), 2u);
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j)
      EXPECT_EQ(m.entries[i][j], dbar_dual(2, 1, m.rows[i]).coefficient(m.cols[j]));

  const auto j = to_json(m);
  EXPECT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["cols"][0], format_word(m.cols[0]));
  EXPECT_EQ(j["entries"][0][0], to_string(m.entries[0][0]));
  EXPECT_EQ(j.dump().substr(0, 34), R"({"N":2,"n":1,"weight":2,"depth":2,)");

  const std::string csv = to_csv(m);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "word,\"" + format_word(m.cols[0]) + "\",\"" + format_word(m.cols[1]) + "\"");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}
