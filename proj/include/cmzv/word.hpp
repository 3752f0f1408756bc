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
// Exact rationals, root-of-unity exponents, letters and words over the
// alphabet {e^0} u {e^(eps^k) : 0 <= k < N}.

#ifndef CMZV_WORD_HPP
#define CMZV_WORD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmzv/error.hpp"

namespace cmzv {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms with the sign on p; integers print without "/1".
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(std::string_view text) {
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
}

inline constexpr int kMinModulus = 2;
inline constexpr int kMaxModulus = 4;

inline void check_modulus(int modulus) {
  if (modulus < kMinModulus || modulus > kMaxModulus)
    throw DomainError("unsupported modulus N=" + std::to_string(modulus) +
                      " (expected 2, 3 or 4)");
}

/// eps^k for the fixed primitive root eps = exp(2 pi i / N).
class RootExp {
 public:
  RootExp(int modulus, int exponent) : modulus_(modulus), exponent_(exponent) {
    check_modulus(modulus);
    if (exponent < 0 || exponent >= modulus)
      throw DomainError("root exponent " + std::to_string(exponent) +
                        " out of range for N=" + std::to_string(modulus));
  }

  /// Any integer exponent, reduced mod N.
  static RootExp reduced(int modulus, long long exponent) {
    check_modulus(modulus);
    long long k = exponent % modulus;
    if (k < 0) k += modulus;
    return RootExp(modulus, static_cast<int>(k));
  }

  static RootExp one(int modulus) { return RootExp(modulus, 0); }
  static RootExp minus_one(int modulus) {
    if (modulus % 2 != 0) throw DomainError("-1 is not in mu_" + std::to_string(modulus));
    return RootExp(modulus, modulus / 2);
  }

  int modulus() const { return modulus_; }
  int exponent() const { return exponent_; }
  bool is_one() const { return exponent_ == 0; }

  RootExp inverse() const { return reduced(modulus_, -exponent_); }

  friend RootExp operator*(RootExp lhs, RootExp rhs) {
    if (lhs.modulus_ != rhs.modulus_) throw ModulusMismatch(lhs.modulus_, rhs.modulus_);
    return reduced(lhs.modulus_, lhs.exponent_ + rhs.exponent_);
  }

  friend auto operator<=>(const RootExp&, const RootExp&) = default;

 private:
  int modulus_;
  int exponent_;
};

/// Either e^0 or e^(eps^k). The exponent range is checked by the owning Word.
class Letter {
 public:
  static constexpr Letter zero() { return Letter(0); }
  static constexpr Letter root(int exponent) {
    return Letter(static_cast<std::uint8_t>(exponent + 1));
  }
  static Letter root(RootExp r) { return root(r.exponent()); }

  constexpr bool is_zero() const { return code_ == 0; }
  constexpr bool is_root() const { return code_ != 0; }
  /// Only meaningful for root letters.
  constexpr int exponent() const { return static_cast<int>(code_) - 1; }
  constexpr std::uint8_t code() const { return code_; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;

 private:
  constexpr explicit Letter(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

struct WeightDepth {
  int weight = 0;
  int depth = 0;
  friend auto operator<=>(const WeightDepth&, const WeightDepth&) = default;
};

/// A finite sequence of letters for a fixed modulus. The same type is used
/// for function-side words e^eta and for Lie-side words e_eta.
class Word {
 public:
  explicit Word(int modulus) : modulus_(modulus) { check_modulus(modulus); }

  Word(int modulus, std::vector<Letter> letters)
      : modulus_(modulus), letters_(std::move(letters)) {
    check_modulus(modulus);
    for (Letter l : letters_) check_letter(l);
  }

  /// All root letters, given by exponent.
  static Word from_exponents(int modulus, std::span<const int> exponents) {
    Word w(modulus);
    w.letters_.reserve(exponents.size());
    for (int k : exponents) w.push_back(Letter::root(RootExp(modulus, k)));
    return w;
  }

  int modulus() const { return modulus_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  int weight() const { return static_cast<int>(letters_.size()); }
  int depth() const {
    int d = 0;
    for (Letter l : letters_) d += l.is_root() ? 1 : 0;
    return d;
  }
  /// Depth equals weight: every letter is a root letter.
  bool is_unit() const { return depth() == weight(); }

  void push_back(Letter l) {
    check_letter(l);
    letters_.push_back(l);
  }

  Word& operator+=(const Word& rhs) {
    if (rhs.modulus_ != modulus_) throw ModulusMismatch(modulus_, rhs.modulus_);
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  Word subword(std::size_t pos, std::size_t count) const {
    Word w(modulus_);
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
    return w;
  }

  Word without(std::size_t pos) const {
    Word w(*this);
    w.letters_.erase(w.letters_.begin() + static_cast<std::ptrdiff_t>(pos));
    return w;
  }

  Word with_inserted(std::size_t pos, Letter l) const {
    check_letter(l);
    Word w(*this);
    w.letters_.insert(w.letters_.begin() + static_cast<std::ptrdiff_t>(pos), l);
    return w;
  }

  Word with_replaced(std::size_t pos, Letter l) const {
    check_letter(l);
    Word w(*this);
    w.letters_[pos] = l;
    return w;
  }

  Word reversed() const {
    Word w(modulus_);
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
  }

  /// Canonical order: modulus, then length, then lexicographic with e^0
  /// before the root letters and roots by increasing exponent.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.modulus_ == b.modulus_ && a.letters_ == b.letters_;
  }

 private:
  void check_letter(Letter l) const {
    if (l.is_root() && l.exponent() >= modulus_)
      throw DomainError("letter exponent " + std::to_string(l.exponent()) +
                        " out of range for N=" + std::to_string(modulus_));
  }

  int modulus_;
  std::vector<Letter> letters_;
};

inline WeightDepth weight_and_depth(const Word& w) { return {w.weight(), w.depth()}; }

inline Word zero_power(int modulus, int count) {
  return Word(modulus, std::vector<Letter>(static_cast<std::size_t>(count), Letter::zero()));
}

inline Word single_letter(int modulus, Letter l) { return Word(modulus, {l}); }

// Word grammar: tokens separated by ',', "x" is e^0, a decimal k < N is
// e^(eps^k); the empty string is the empty word.
inline Word parse_word(std::string_view text, int modulus) {
  Word w(modulus);
  if (text.empty()) return w;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (token.empty())
      throw ParseError("malformed separators in word '" + std::string(text) + "'");
    if (token == "x") {
      w.push_back(Letter::zero());
    } else {
      int k = 0;
      for (char ch : token) {
        if (ch < '0' || ch > '9' || k > 1000)
          throw ParseError("unknown token '" + std::string(token) + "' in word");
        k = k * 10 + (ch - '0');
      }
      if (token.size() > 1 && token.front() == '0')
        throw ParseError("non-canonical token '" + std::string(token) + "' in word");
      if (k >= modulus)
        throw ParseError("exponent " + std::string(token) + " >= N=" + std::to_string(modulus));
      w.push_back(Letter::root(k));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

inline std::string format_letter(Letter l) {
  return l.is_zero() ? std::string("x") : std::to_string(l.exponent());
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ',';
    out += format_letter(w[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '[' << format_word(w) << ']'; }

/// Every word of the given weight and depth, in canonical order.
inline std::vector<Word> all_words(int modulus, int weight, int depth) {
  check_modulus(modulus);
  std::vector<Word> out;
  if (weight < 0 || depth < 0 || depth > weight) return out;
  // Letter codes run 0 (e^0) .. N; odometer over codes, filtered by depth.
  std::vector<Letter> letters(static_cast<std::size_t>(weight), Letter::zero());
  std::vector<int> code(static_cast<std::size_t>(weight), 0);
  while (true) {
    int d = 0;
    for (int c : code) d += c != 0 ? 1 : 0;
    if (d == depth) {
      for (std::size_t i = 0; i < code.size(); ++i)
        letters[i] = code[i] == 0 ? Letter::zero() : Letter::root(code[i] - 1);
      out.emplace_back(modulus, letters);
    }
    int pos = weight - 1;
    while (pos >= 0 && code[static_cast<std::size_t>(pos)] == modulus) {
      code[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++code[static_cast<std::size_t>(pos)];
  }
  return out;
}

/// Every word of the given weight with only root letters.
inline std::vector<Word> unit_words(int modulus, int weight) {
  return all_words(modulus, weight, weight);
}

/// Every exponent tuple in {0,...,N-1}^r, lexicographic.
inline std::vector<std::vector<int>> exponent_tuples(int modulus, int r) {
  check_modulus(modulus);
  std::vector<std::vector<int>> out;
  if (r < 0) return out;
  std::vector<int> t(static_cast<std::size_t>(r), 0);
  while (true) {
    out.push_back(t);
    int pos = r - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == modulus - 1) {
      t[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace cmzv

#endif  // CMZV_WORD_HPP
