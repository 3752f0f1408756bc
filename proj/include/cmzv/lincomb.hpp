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
// Sparse rational linear combinations of words.

#ifndef CMZV_LINCOMB_HPP
#define CMZV_LINCOMB_HPP

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>

#include "cmzv/word.hpp"

namespace cmzv {

/// Finite Word -> Rational association. Zero coefficients are never stored,
/// so structural equality is equality of elements.
class LinComb {
 public:
  using Terms = std::map<Word, Rational>;
  using const_iterator = Terms::const_iterator;

  explicit LinComb(int modulus) : modulus_(modulus) { check_modulus(modulus); }
  LinComb(const Word& w, const Rational& coefficient = 1) : modulus_(w.modulus()) {
    add(w, coefficient);
  }

  int modulus() const { return modulus_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Word& w, const Rational& coefficient) {
    if (w.modulus() != modulus_) throw ModulusMismatch(modulus_, w.modulus());
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale) {
    if (other.modulus_ != modulus_) throw ModulusMismatch(modulus_, other.modulus_);
    if (scale == 0) return;
    for (const auto& [w, c] : other.terms_) add(w, scale * c);
  }

  LinComb& operator+=(const LinComb& rhs) {
    add(rhs, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& rhs) {
    add(rhs, -1);
    return *this;
  }
  LinComb& operator*=(const Rational& scale) {
    if (scale == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= scale;
    }
    return *this;
  }

  friend LinComb operator+(LinComb lhs, const LinComb& rhs) { return lhs += rhs; }
  friend LinComb operator-(LinComb lhs, const LinComb& rhs) { return lhs -= rhs; }
  friend LinComb operator-(LinComb x) { return x *= -1; }
  friend LinComb operator*(const Rational& scale, LinComb x) { return x *= scale; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

  /// Weight and depth when every term shares them; nullopt otherwise or when zero.
  std::optional<WeightDepth> homogeneous_grading() const {
    if (terms_.empty()) return std::nullopt;
    const WeightDepth g = weight_and_depth(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
      if (weight_and_depth(w) != g) return std::nullopt;
    return g;
  }

 private:
  int modulus_;
  Terms terms_;
};

/// Canonical sum of scaled combinations, all of one modulus.
inline LinComb lc_combine(std::span<const std::pair<Rational, LinComb>> terms) {
  if (terms.empty()) throw DomainError("lc_combine needs at least one term to fix the modulus");
  LinComb out(terms.front().second.modulus());
  for (const auto& [scale, x] : terms) out.add(x, scale);
  return out;
}

/// Concatenation product, extended bilinearly.
inline LinComb concat(const LinComb& lhs, const LinComb& rhs) {
  if (lhs.modulus() != rhs.modulus()) throw ModulusMismatch(lhs.modulus(), rhs.modulus());
  LinComb out(lhs.modulus());
  for (const auto& [u, a] : lhs)
    for (const auto& [v, b] : rhs) out.add(u + v, a * b);
  return out;
}

inline LinComb concat(const Word& prefix, const LinComb& x, const Word& suffix) {
  LinComb out(x.modulus());
  for (const auto& [w, c] : x) out.add(prefix + w + suffix, c);
  return out;
}

/// Text form, highest word first: "1,0 + 0,1", "-1/2*1 - 3*x,1", "0" for zero.
/// The empty word prints as "()".
inline std::string format_lincomb(const LinComb& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += w.empty() ? std::string("()") : format_word(w);
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LinComb& x) { return os << format_lincomb(x); }

}  // namespace cmzv

#endif  // CMZV_LINCOMB_HPP
