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
// Cyclotomic MZV indices and their word encoding.

#ifndef CMZV_ZETA_HPP
#define CMZV_ZETA_HPP

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "cmzv/shuffle.hpp"

namespace cmzv {

/// zeta(k_1,...,k_r; eps^a_1,...,eps^a_r) summed over 0 < n_1 < ... < n_r.
/// Divergent indices (k_r = 1, a_r = 0) are representable; only their
/// series evaluation is refused.
class ZetaArg {
 public:
  ZetaArg(int modulus, std::vector<int> ks, std::vector<int> eps)
      : modulus_(modulus), ks_(std::move(ks)), eps_(std::move(eps)) {
    check_modulus(modulus);
    if (ks_.empty()) throw DomainError("zeta index needs depth >= 1");
    if (ks_.size() != eps_.size())
      throw DomainError("zeta index: ks and eps lengths differ");
    for (int k : ks_)
      if (k < 1) throw DomainError("zeta index: k_i must be >= 1");
    for (int a : eps_) RootExp(modulus, a);
  }

  /// All k_i = 1.
  static ZetaArg unit(int modulus, std::vector<int> eps) {
    std::vector<int> ks(eps.size(), 1);
    return ZetaArg(modulus, std::move(ks), std::move(eps));
  }

  int modulus() const { return modulus_; }
  const std::vector<int>& ks() const { return ks_; }
  const std::vector<int>& eps() const { return eps_; }
  int depth() const { return static_cast<int>(ks_.size()); }
  int weight() const {
    int w = 0;
    for (int k : ks_) w += k;
    return w;
  }
  bool is_convergent() const { return !(ks_.back() == 1 && eps_.back() == 0); }

  friend auto operator<=>(const ZetaArg&, const ZetaArg&) = default;

 private:
  int modulus_;
  std::vector<int> ks_;
  std::vector<int> eps_;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace detail

/// Comma-separated non-negative decimal integers; used for ks and eps lists.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw ParseError("empty integer list");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (token.empty()) throw ParseError("malformed separators in '" + std::string(text) + "'");
    int v = 0;
    for (char ch : token) {
      if (ch < '0' || ch > '9' || v > 100000)
        throw ParseError("bad integer '" + std::string(token) + "'");
      v = v * 10 + (ch - '0');
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// "ks=k1,...,kr; eps=a1,...,ar"
inline std::string format_zeta(const ZetaArg& z) {
  return "ks=" + detail::join_ints(z.ks()) + "; eps=" + detail::join_ints(z.eps());
}

inline ZetaArg parse_zeta(std::string_view text, int modulus) {
  const std::size_t semi = text.find("; ");
  if (text.substr(0, 3) != "ks=" || semi == std::string_view::npos ||
      text.substr(semi + 2, 4) != "eps=")
    throw ParseError("expected 'ks=...; eps=...', got '" + std::string(text) + "'");
  return ZetaArg(modulus, parse_int_list(text.substr(3, semi - 3)),
                 parse_int_list(text.substr(semi + 6)));
}

inline nlohmann::ordered_json zeta_to_json(const ZetaArg& z) {
  nlohmann::ordered_json j;
  j["ks"] = z.ks();
  j["eps"] = z.eps();
  j["N"] = z.modulus();
  return j;
}

inline ZetaArg zeta_from_json(const nlohmann::json& j) {
  try {
    return ZetaArg(j.at("N").get<int>(), j.at("ks").get<std::vector<int>>(),
                   j.at("eps").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad zeta index JSON: ") + e.what());
  }
}

/// e^{(eps_1...eps_r)^-1} (e^0)^{k_1-1} e^{(eps_2...eps_r)^-1} ... e^{eps_r^-1} (e^0)^{k_r-1}
inline Word word_of_zeta(const ZetaArg& z) {
  const int n = z.modulus();
  const int r = z.depth();
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(z.weight()));
  for (int j = 0; j < r; ++j) {
    long long tail = 0;
    for (int i = j; i < r; ++i) tail += z.eps()[static_cast<std::size_t>(i)];
    letters.push_back(Letter::root(RootExp::reduced(n, -tail)));
    for (int z0 = 1; z0 < z.ks()[static_cast<std::size_t>(j)]; ++z0) letters.push_back(Letter::zero());
  }
  return Word(n, std::move(letters));
}

/// Inverse of word_of_zeta: e^{eta_1}(e^0)^{k_1-1} ... e^{eta_r}(e^0)^{k_r-1}
/// gives eps_j = eta_j^-1 eta_{j+1} with eta_{r+1} = 1.
inline ZetaArg zeta_of_word(const Word& w) {
  if (w.empty()) throw DomainError("zeta_of_word: empty word");
  if (w.front().is_zero()) throw DomainError("zeta_of_word: leading e^0 in " + format_word(w));
  const int n = w.modulus();
  std::vector<int> ks;
  std::vector<int> etas;
  for (Letter l : w.letters()) {
    if (l.is_root()) {
      etas.push_back(l.exponent());
      ks.push_back(1);
    } else {
      ++ks.back();
    }
  }
  std::vector<int> eps(etas.size());
  for (std::size_t j = 0; j < etas.size(); ++j) {
    const int next = j + 1 < etas.size() ? etas[j + 1] : 0;
    eps[j] = RootExp::reduced(n, next - etas[j]).exponent();
  }
  return ZetaArg(n, std::move(ks), std::move(eps));
}

struct ZetaTerm {
  Rational coefficient;
  ZetaArg index;
};

/// Symbolic dch: regularize, then read each convergent word as an index.
inline std::vector<ZetaTerm> dch_symbolic(const LinComb& x) {
  std::vector<ZetaTerm> out;
  for (const auto& [w, c] : regularize(x)) {
    if (w.empty()) {
      throw DomainError("dch_symbolic: the empty word has no zeta index");
    }
    out.push_back({c, zeta_of_word(w)});
  }
  return out;
}

inline std::vector<ZetaTerm> dch_symbolic(const Word& w) {
  if (!w.empty() && w.front().is_zero())
    throw DomainError("dch_symbolic: leading e^0 in " + format_word(w));
  return dch_symbolic(LinComb(w));
}

}  // namespace cmzv

#endif  // CMZV_ZETA_HPP
