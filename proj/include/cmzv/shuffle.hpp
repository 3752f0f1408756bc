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
// Shuffle product and shuffle regularization of trailing e^1 letters.

#ifndef CMZV_SHUFFLE_HPP
#define CMZV_SHUFFLE_HPP

#include <map>
#include <vector>

#include "cmzv/lincomb.hpp"

namespace cmzv {

namespace detail {

inline void shuffle_into(const Word& a, std::size_t i, const Word& b, std::size_t j,
                         std::vector<Letter>& prefix, LinComb& out) {
  if (i == a.size() || j == b.size()) {
    std::vector<Letter> full = prefix;
    for (; i < a.size(); ++i) full.push_back(a[i]);
    for (; j < b.size(); ++j) full.push_back(b[j]);
    out.add(Word(a.modulus(), std::move(full)), 1);
    return;
  }
  // u w1 ш v w2 = u (w1 ш v w2) + v (u w1 ш w2)
  prefix.push_back(a[i]);
  shuffle_into(a, i + 1, b, j, prefix, out);
  prefix.back() = b[j];
  shuffle_into(a, i, b, j + 1, prefix, out);
  prefix.pop_back();
}

inline Letter unit_letter() { return Letter::root(0); }

inline std::size_t trailing_unit_letters(const Word& w) {
  std::size_t m = 0;
  while (m < w.size() && w[w.size() - 1 - m] == unit_letter()) ++m;
  return m;
}

}  // namespace detail

inline LinComb shuffle(const Word& w1, const Word& w2) {
  if (w1.modulus() != w2.modulus()) throw ModulusMismatch(w1.modulus(), w2.modulus());
  LinComb out(w1.modulus());
  std::vector<Letter> prefix;
  prefix.reserve(w1.size() + w2.size());
  detail::shuffle_into(w1, 0, w2, 0, prefix, out);
  return out;
}

inline LinComb shuffle(const LinComb& x, const LinComb& y) {
  if (x.modulus() != y.modulus()) throw ModulusMismatch(x.modulus(), y.modulus());
  LinComb out(x.modulus());
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) out.add(shuffle(u, v), a * b);
  return out;
}

/// First letter is not e^0 and last letter is not e^1.
inline bool is_convergent(const Word& w) {
  if (w.empty()) throw DomainError("convergence is undefined for the empty word");
  return !w.front().is_zero() && w.back() != detail::unit_letter();
}

/// Rewrites trailing e^1 blocks away using dch(e^1) = 0.
///
/// For w = v (e^1)^m with v not ending in e^1 and m >= 1,
///   v (e^1)^(m-1) ш e^1 = m v (e^1)^m + sum_{p < |v|} ins_p(v) (e^1)^(m-1),
/// where ins_p inserts e^1 before position p of v. The left side lies in the
/// kernel, so v (e^1)^m is replaced by -(1/m) times the sum, whose words all
/// have a trailing block of length exactly m-1. Weight, depth and the letter
/// multiset of each surviving word match the source word.
class Regularizer {
 public:
  LinComb operator()(const Word& w) {
    if (!w.empty() && w.front().is_zero())
      throw DomainError("regularization of words with leading e^0 is not supported: " +
                        format_word(w));
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    const std::size_t m = detail::trailing_unit_letters(w);
    LinComb out(w.modulus());
    if (m == 0) {
      out.add(w, 1);
    } else {
      const Word v = w.subword(0, w.size() - m);
      const Word tail = w.subword(w.size() - m + 1, m - 1);
      for (std::size_t p = 0; p < v.size(); ++p)
        out.add((*this)(v.with_inserted(p, detail::unit_letter()) + tail), 1);
      out *= Rational(-1, static_cast<long>(m));
    }
    memo_.emplace(w, out);
    return out;
  }

  LinComb operator()(const LinComb& x) {
    LinComb out(x.modulus());
    for (const auto& [w, c] : x) out.add((*this)(w), c);
    return out;
  }

 private:
  std::map<Word, LinComb> memo_;
};

inline LinComb regularize(const LinComb& x) { return Regularizer{}(x); }
inline LinComb regularize(const Word& w) { return Regularizer{}(w); }

}  // namespace cmzv

#endif  // CMZV_SHUFFLE_HPP
