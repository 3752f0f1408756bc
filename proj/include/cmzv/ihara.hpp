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
// The circ-action on Lie-side words, the depth-one parts of the generator
// images sigma_n, and the depth-graded derivations obtained by transposing
// the action.

#ifndef CMZV_IHARA_HPP
#define CMZV_IHARA_HPP

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cmzv/lincomb.hpp"

namespace cmzv {

/// [eps](w): multiply every root letter by eps; e_0 letters are fixed.
inline Word twist(RootExp e, const Word& w) {
  if (e.modulus() != w.modulus()) throw ModulusMismatch(w.modulus(), e.modulus());
  if (e.is_one()) return w;
  Word out(w.modulus());
  for (Letter l : w.letters())
    out.push_back(l.is_zero() ? l : Letter::root(RootExp(w.modulus(), l.exponent()) * e));
  return out;
}

inline LinComb twist(RootExp e, const LinComb& x) {
  LinComb out(x.modulus());
  for (const auto& [w, c] : x) out.add(twist(e, w), c);
  return out;
}

/// (u_1...u_n)* = (-1)^n u_n...u_1
inline std::pair<Rational, Word> star(const Word& w) {
  return {Rational(w.size() % 2 == 0 ? 1 : -1), w.reversed()};
}

inline LinComb star(const LinComb& x) {
  LinComb out(x.modulus());
  for (const auto& [w, c] : x) {
    auto [sign, r] = star(w);
    out.add(r, sign * c);
  }
  return out;
}

/// a o w, by the recursion
///   a o (e_0^n e_eps w) = e_0^n [([eps]a) e_eps + e_eps ([eps]a)*] w + e_0^n e_eps (a o w),
///   a o e_0^n = e_0^n a.
inline LinComb circ(const LinComb& a, const Word& w) {
  if (a.modulus() != w.modulus()) throw ModulusMismatch(a.modulus(), w.modulus());
  const int n = w.modulus();
  std::size_t p = 0;
  while (p < w.size() && w[p].is_zero()) ++p;
  const Word zeros = zero_power(n, static_cast<int>(p));
  if (p == w.size()) return concat(zeros, a, Word(n));

  const Letter root = w[p];
  const Word e_eps = single_letter(n, root);
  const Word rest = w.subword(p + 1, w.size() - p - 1);
  const LinComb twisted = twist(RootExp(n, root.exponent()), a);

  LinComb out(n);
  out += concat(zeros, twisted, e_eps + rest);
  out += concat(zeros + e_eps, star(twisted), rest);
  out += concat(zeros + e_eps, circ(a, rest), Word(n));
  return out;
}

inline LinComb circ(const LinComb& a, const LinComb& x) {
  LinComb out(a.modulus());
  for (const auto& [w, c] : x) out.add(circ(a, w), c);
  return out;
}

/// ad(e_0)^m e_eta = sum_k (-1)^k C(m,k) e_0^(m-k) e_eta e_0^k
inline LinComb ad_power(RootExp eta, int m) {
  const int n = eta.modulus();
  LinComb out(n);
  Rational binom = 1;
  for (int k = 0; k <= m; ++k) {
    const Word w = zero_power(n, m - k) + single_letter(n, Letter::root(eta)) + zero_power(n, k);
    out.add(w, k % 2 == 0 ? binom : Rational(-binom));
    binom = binom * (m - k) / (k + 1);
  }
  return out;
}

/// Depth-one part of the image of the motivic generator sigma_n.
class SigmaBar {
 public:
  SigmaBar(int modulus, int weight, LinComb element)
      : modulus_(modulus), weight_(weight), element_(std::move(element)) {
    for (const auto& [w, c] : element_)
      if (w.weight() != weight_ || w.depth() != 1)
        throw DomainError("sigma-bar term " + format_word(w) + " is not of weight " +
                          std::to_string(weight_) + " and depth 1");
  }

  int modulus() const { return modulus_; }
  int weight() const { return weight_; }
  const LinComb& element() const { return element_; }

 private:
  int modulus_;
  int weight_;
  LinComb element_;
};

inline bool is_valid_generator(int modulus, int weight) {
  check_modulus(modulus);
  if (weight < 1) return false;
  return modulus != 2 || weight % 2 == 1;
}

inline void check_generator(int modulus, int weight) {
  if (!is_valid_generator(modulus, weight))
    throw DomainError("no generator sigma_" + std::to_string(weight) + " for N=" +
                      std::to_string(modulus));
}

inline SigmaBar sigma_bar(int modulus, int weight) {
  check_generator(modulus, weight);
  const int n = modulus;
  const RootExp one = RootExp::one(n);
  const RootExp eps(n, 1);
  const RootExp eps_inv = eps.inverse();
  LinComb s(n);
  const auto e = [&](RootExp r) { return LinComb(single_letter(n, Letter::root(r))); };

  if (weight == 1) {
    switch (n) {
      case 2: s = e(RootExp::minus_one(2)); break;
      case 3: s = e(eps) + e(eps_inv); break;
      default: s = e(eps) + e(eps_inv) + 2 * e(RootExp::minus_one(4)); break;
    }
    return SigmaBar(n, 1, std::move(s));
  }

  const int m = weight - 1;
  if (weight % 2 == 0) {
    // N = 3, 4: E^(2n-1)_eps - E^(2n-1)_eps^-1
    s = ad_power(eps, m) - ad_power(eps_inv, m);
    return SigmaBar(n, weight, std::move(s));
  }

  // weight = 2j + 1
  const Rational p = boost::multiprecision::pow(boost::multiprecision::cpp_int(n == 3 ? 3 : 2), m);
  switch (n) {
    case 2:
      s.add(ad_power(RootExp::minus_one(2), m), 1 - p);
      s.add(ad_power(one, m), p);
      break;
    case 3:
      s.add(ad_power(eps, m) + ad_power(eps_inv, m), 1 - p);
      s.add(ad_power(one, m), 2 * p);
      break;
    default:
      s.add(ad_power(eps, m) + ad_power(eps_inv, m), 1 - p);
      s.add(ad_power(RootExp::minus_one(4), m), 2 * p * (1 - p));
      s.add(ad_power(one, m), 2 * p * p);
      break;
  }
  return SigmaBar(n, weight, std::move(s));
}

/// Transpose of v -> sigma_bar(N, n) o v between graded word spaces:
/// function-side words of (weight, depth) map to combinations of words of
/// (weight - n, depth - 1), words being an orthonormal basis.
class GradedDual {
 public:
  GradedDual(int modulus, int n, int weight, int depth)
      : modulus_(modulus), n_(n), weight_(weight), depth_(depth) {
    check_generator(modulus, n);
    const SigmaBar sigma = sigma_bar(modulus, n);
    sources_ = all_words(modulus, weight - n, depth - 1);
    for (const Word& v : sources_) {
      for (const auto& [u, c] : circ(sigma.element(), v)) {
        auto it = image_.try_emplace(u, modulus).first;
        it->second.add(v, c);
      }
    }
  }

  int modulus() const { return modulus_; }
  int derivation_weight() const { return n_; }
  int weight() const { return weight_; }
  int depth() const { return depth_; }
  /// Basis of the target graded piece, canonical order.
  const std::vector<Word>& sources() const { return sources_; }

  LinComb apply(const Word& w) const {
    if (w.modulus() != modulus_) throw ModulusMismatch(modulus_, w.modulus());
    if (w.weight() != weight_ || w.depth() != depth_)
      throw DomainError("word " + format_word(w) + " is outside the graded piece (" +
                        std::to_string(weight_) + ", " + std::to_string(depth_) + ")");
    auto it = image_.find(w);
    return it == image_.end() ? LinComb(modulus_) : it->second;
  }

 private:
  int modulus_;
  int n_;
  int weight_;
  int depth_;
  std::vector<Word> sources_;
  std::map<Word, LinComb> image_;
};

inline LinComb dbar_dual(int modulus, int n, const Word& w) {
  check_generator(modulus, n);
  if (w.modulus() != modulus) throw ModulusMismatch(modulus, w.modulus());
  if (w.depth() < 1 || w.weight() < n)
    throw DomainError("dbar_dual needs depth >= 1 and weight >= " + std::to_string(n));
  return GradedDual(modulus, n, w.weight(), w.depth()).apply(w);
}

inline LinComb dbar_dual(int modulus, int n, const LinComb& x) {
  LinComb out(modulus);
  std::map<WeightDepth, GradedDual> pieces;
  for (const auto& [w, c] : x) {
    if (w.depth() < 1 || w.weight() < n)
      throw DomainError("dbar_dual needs depth >= 1 and weight >= " + std::to_string(n));
    const WeightDepth g = weight_and_depth(w);
    auto it = pieces.find(g);
    if (it == pieces.end()) it = pieces.emplace(g, GradedDual(modulus, n, g.weight, g.depth)).first;
    out.add(it->second.apply(w), c);
  }
  return out;
}

/// Matrix of dbar_dual on one graded piece. Rows: words of (weight, depth);
/// columns: words of (weight - n, depth - 1); both in canonical order.
struct DualMatrix {
  int modulus;
  int n;
  int weight;
  int depth;
  std::vector<Word> rows;
  std::vector<Word> cols;
  std::vector<std::vector<Rational>> entries;
};

inline DualMatrix dual_matrix(int modulus, int n, int weight, int depth) {
  GradedDual dual(modulus, n, weight, depth);
  DualMatrix m{modulus, n, weight, depth, all_words(modulus, weight, depth), dual.sources(), {}};
  std::map<Word, std::size_t> col_index;
  for (std::size_t j = 0; j < m.cols.size(); ++j) col_index.emplace(m.cols[j], j);
  for (const Word& u : m.rows) {
    std::vector<Rational> row(m.cols.size(), Rational(0));
    for (const auto& [v, c] : dual.apply(u)) row[col_index.at(v)] = c;
    m.entries.push_back(std::move(row));
  }
  return m;
}

inline nlohmann::ordered_json to_json(const DualMatrix& m) {
  nlohmann::ordered_json j;
  j["N"] = m.modulus;
  j["n"] = m.n;
  j["weight"] = m.weight;
  j["depth"] = m.depth;
  j["rows"] = nlohmann::ordered_json::array();
  for (const Word& w : m.rows) j["rows"].push_back(format_word(w));
  j["cols"] = nlohmann::ordered_json::array();
  for (const Word& w : m.cols) j["cols"].push_back(format_word(w));
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& row : m.entries) {
    auto r = nlohmann::ordered_json::array();
    for (const Rational& q : row) r.push_back(to_string(q));
    j["entries"].push_back(std::move(r));
  }
  return j;
}

/// CSV with a quoted word in the first column; header row lists the columns.
inline std::string to_csv(const DualMatrix& m) {
  const auto quoted = [](const Word& w) { return "\"" + format_word(w) + "\""; };
  std::string out = "word";
  for (const Word& v : m.cols) out += "," + quoted(v);
  out += "\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    out += quoted(m.rows[i]);
    for (const Rational& q : m.entries[i]) out += "," + to_string(q);
    out += "\n";
  }
  return out;
}

}  // namespace cmzv

#endif  // CMZV_IHARA_HPP
