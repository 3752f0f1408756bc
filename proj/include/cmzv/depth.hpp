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
// Depth-graded derivation dbar_1 on unit words, its iteration down to
// depth one, and the leading coefficients a, b (N = 3, 4) and c (N = 2) of
// unit cyclotomic MZVs.

#ifndef CMZV_DEPTH_HPP
#define CMZV_DEPTH_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "cmzv/ihara.hpp"
#include "cmzv/shuffle.hpp"
#include "cmzv/zeta.hpp"

namespace cmzv {

namespace detail {

inline void check_unit_word(int modulus, const Word& w) {
  if (w.modulus() != modulus) throw ModulusMismatch(modulus, w.modulus());
  if (w.empty() || !w.is_unit())
    throw DomainError("expected a nonempty unit word, got '" + format_word(w) + "'");
}

inline Word replace_pair(const Word& w, std::size_t k, Letter l) {
  return w.without(k + 1).with_replaced(k, l);
}

// N = 2, i_k in {+1, -1}:
//   sum_k d(i_k i_{k+1} = -1) (e^{-i_k} - e^{i_k}) at the pair + d(i_s = -1) (drop i_s)
inline LinComb dbar1_mu2(const Word& w) {
  LinComb out(2);
  const std::size_t s = w.size();
  for (std::size_t k = 0; k + 1 < s; ++k) {
    const RootExp ik(2, w[k].exponent());
    const RootExp ik1(2, w[k + 1].exponent());
    if (ik * ik1 == RootExp::minus_one(2)) {
      out.add(replace_pair(w, k, Letter::root(ik * RootExp::minus_one(2))), 1);
      out.add(replace_pair(w, k, Letter::root(ik)), -1);
    }
  }
  if (RootExp(2, w[s - 1].exponent()) == RootExp::minus_one(2)) out.add(w.without(s - 1), 1);
  return out;
}

// N = 3:
//   sum_k [d(i_k = i_{k+1} eps) + d(i_k = i_{k+1} eps^-1)] (drop i_k)
//   + [d(i_s = eps) + d(i_s = eps^-1)] (drop i_s)
//   - sum_k [d(i_k = i_{k+1} eps) e^{i_{k+1} eps} + d(i_k = i_{k+1} eps^-1) e^{i_{k+1} eps^-1}] at the pair
inline LinComb dbar1_mu3(const Word& w) {
  LinComb out(3);
  const RootExp eps(3, 1);
  const RootExp eps_inv = eps.inverse();
  const std::size_t s = w.size();
  for (std::size_t k = 0; k + 1 < s; ++k) {
    const RootExp ik(3, w[k].exponent());
    const RootExp ik1(3, w[k + 1].exponent());
    for (RootExp rho : {eps, eps_inv}) {
      if (ik == ik1 * rho) {
        out.add(w.without(k), 1);
        out.add(replace_pair(w, k, Letter::root(ik1 * rho)), -1);
      }
    }
  }
  const RootExp is(3, w[s - 1].exponent());
  if (is == eps || is == eps_inv) out.add(w.without(s - 1), 1);
  return out;
}

// N = 4, with c(eps) = c(eps^-1) = 1, c(-1) = 2, c(1) = 0:
//   sum_k c(i_k / i_{k+1}) (drop i_k) - sum_k c(i_{k+1} / i_k) (drop i_{k+1}) + c(i_s) (drop i_s)
inline LinComb dbar1_mu4(const Word& w) {
  LinComb out(4);
  const RootExp eps(4, 1);
  const RootExp eps_inv = eps.inverse();
  const RootExp minus_one = RootExp::minus_one(4);
  const auto weight_of = [&](RootExp ratio) -> int {
    return (ratio == eps ? 1 : 0) + (ratio == eps_inv ? 1 : 0) + (ratio == minus_one ? 2 : 0);
  };
  const std::size_t s = w.size();
  for (std::size_t k = 0; k + 1 < s; ++k) {
    const RootExp ik(4, w[k].exponent());
    const RootExp ik1(4, w[k + 1].exponent());
    if (int c = weight_of(ik * ik1.inverse()); c != 0) out.add(w.without(k), c);
    if (int c = weight_of(ik1 * ik.inverse()); c != 0) out.add(w.without(k + 1), -c);
  }
  if (int c = weight_of(RootExp(4, w[s - 1].exponent())); c != 0) out.add(w.without(s - 1), c);
  return out;
}

}  // namespace detail

/// Closed-form dbar_1 on a unit word (depth = weight = s >= 1).
inline LinComb dbar1_direct(int modulus, const Word& w) {
  check_modulus(modulus);
  detail::check_unit_word(modulus, w);
  switch (modulus) {
    case 2: return detail::dbar1_mu2(w);
    case 3: return detail::dbar1_mu3(w);
    default: return detail::dbar1_mu4(w);
  }
}

inline LinComb dbar1_direct(int modulus, const LinComb& x) {
  LinComb out(modulus);
  for (const auto& [w, c] : x) out.add(dbar1_direct(modulus, w), c);
  return out;
}

/// dbar_1 applied `times` times to a combination of unit words of one weight r.
inline LinComb iterate_dbar1(int modulus, const LinComb& x, int times) {
  check_modulus(modulus);
  if (x.modulus() != modulus) throw ModulusMismatch(modulus, x.modulus());
  if (times < 0) throw DomainError("iterate_dbar1: negative iteration count");
  int r = -1;
  for (const auto& [w, c] : x) {
    detail::check_unit_word(modulus, w);
    if (r >= 0 && w.weight() != r) throw DomainError("iterate_dbar1: mixed weights in input");
    r = w.weight();
  }
  if (r >= 0 && times > r - 1)
    throw DomainError("iterate_dbar1: " + std::to_string(times) + " iterations on weight " +
                      std::to_string(r) + " exceeds r - 1");
  LinComb y = x;
  for (int i = 0; i < times; ++i) y = dbar1_direct(modulus, y);
  return y;
}

/// Coordinates of a depth-one class in the generator basis: beta_plus on the
/// class of e^{eps^-1}, beta_minus on the class of e^{eps}. For N = 2 the two
/// generators coincide (eps = eps^-1 = -1) and only beta() is meaningful.
struct ReducedDepthOne {
  int modulus = 2;
  Rational beta_plus = 0;
  Rational beta_minus = 0;

  const Rational& beta() const { return beta_plus; }
  friend bool operator==(const ReducedDepthOne&, const ReducedDepthOne&) = default;
};

/// Relations: e^1 has class 0; for N = 4, e^{-1} = e^{eps} + e^{eps^-1}
/// (Li_1(i) + Li_1(-i) = Li_1(-1)).
inline ReducedDepthOne reduce_depth1(int modulus, const LinComb& x) {
  check_modulus(modulus);
  if (x.modulus() != modulus) throw ModulusMismatch(modulus, x.modulus());
  std::vector<Rational> by_exp(static_cast<std::size_t>(modulus), Rational(0));
  for (const auto& [w, c] : x) {
    if (w.size() != 1 || w[0].is_zero())
      throw DomainError("reduce_depth1: '" + format_word(w) + "' is not a single root letter");
    by_exp[static_cast<std::size_t>(w[0].exponent())] += c;
  }
  ReducedDepthOne out{modulus, 0, 0};
  switch (modulus) {
    case 2:
      out.beta_plus = by_exp[1];
      break;
    case 3:
      out.beta_plus = by_exp[2];
      out.beta_minus = by_exp[1];
      break;
    default:
      out.beta_plus = by_exp[3] + by_exp[2];
      out.beta_minus = by_exp[1] + by_exp[2];
      break;
  }
  return out;
}

/// zeta(1,...,1; eps_1,...,eps_r) = a L+^r + b L-^r + lower depth, with
/// L+ = log(1 - eps), L- = log(1 - eps^-1). For N = 2, c = a and b = 0.
struct LeadingCoeffs {
  int modulus = 2;
  std::vector<int> eps;
  int r = 0;
  Rational a = 0;
  Rational b = 0;

  const Rational& c() const { return a; }
  friend bool operator==(const LeadingCoeffs&, const LeadingCoeffs&) = default;
};

/// Every stage of the leading-coefficient computation for one tuple.
struct Decomposition {
  std::vector<int> eps;
  Word word;          // word_of_zeta of the unit index
  LinComb start;      // regularized word
  LinComb residue;    // after r - 1 applications of dbar_1
  ReducedDepthOne beta;
  LeadingCoeffs coeffs;
};

inline Rational canonical_scale(int r) {
  Rational f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return Rational(r % 2 == 0 ? 1 : -1) / f;
}

inline Decomposition decompose(int modulus, const std::vector<int>& eps) {
  check_modulus(modulus);
  if (eps.empty()) throw DomainError("decompose: empty exponent tuple");
  for (int a : eps)
    if (a < 0 || a >= modulus)
      throw DomainError("decompose: exponent " + std::to_string(a) + " out of range for N=" +
                        std::to_string(modulus));
  const int r = static_cast<int>(eps.size());
  Word w = word_of_zeta(ZetaArg::unit(modulus, eps));
  LinComb start = is_convergent(w) ? LinComb(w) : regularize(w);
  LinComb residue = iterate_dbar1(modulus, start, r - 1);
  ReducedDepthOne beta = reduce_depth1(modulus, residue);
  const Rational scale = canonical_scale(r);
  LeadingCoeffs coeffs{modulus, eps, r, beta.beta_plus * scale,
                       modulus == 2 ? Rational(0) : Rational(beta.beta_minus * scale)};
  return {eps, std::move(w), std::move(start), std::move(residue), beta, std::move(coeffs)};
}

inline LeadingCoeffs leading_coefficients(int modulus, const std::vector<int>& eps) {
  return decompose(modulus, eps).coeffs;
}

/// One row per tuple in {0,...,N-1}^r, lexicographic.
inline std::vector<Decomposition> batch_table(int modulus, int r) {
  if (r < 1) throw DomainError("batch_table: r must be >= 1");
  std::vector<Decomposition> rows;
  for (const auto& eps : exponent_tuples(modulus, r)) rows.push_back(decompose(modulus, eps));
  return rows;
}

inline nlohmann::ordered_json to_json(const LeadingCoeffs& lc) {
  nlohmann::ordered_json j;
  j["N"] = lc.modulus;
  j["r"] = lc.r;
  if (lc.modulus == 2) {
    j["c"] = to_string(lc.c());
  } else {
    j["a"] = to_string(lc.a);
    j["b"] = to_string(lc.b);
  }
  return j;
}

inline std::string format_coeffs(const LeadingCoeffs& lc) {
  std::string out = "N=" + std::to_string(lc.modulus) + " r=" + std::to_string(lc.r);
  if (lc.modulus == 2) return out + " c=" + to_string(lc.c());
  return out + " a=" + to_string(lc.a) + " b=" + to_string(lc.b);
}

inline nlohmann::ordered_json table_row_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["N"] = d.coeffs.modulus;
  j["r"] = d.coeffs.r;
  j["eps"] = d.eps;
  j["word"] = format_word(d.word);
  if (d.coeffs.modulus == 2) {
    j["beta"] = to_string(d.beta.beta());
    j["c"] = to_string(d.coeffs.c());
  } else {
    j["beta_plus"] = to_string(d.beta.beta_plus);
    j["beta_minus"] = to_string(d.beta.beta_minus);
    j["a"] = to_string(d.coeffs.a);
    j["b"] = to_string(d.coeffs.b);
  }
  return j;
}

inline constexpr const char* kTableCsvHeader = "N,r,eps,a,b,c";

/// N,r,"eps",a,b,c with empty cells where a column does not apply.
inline std::string table_row_csv(const Decomposition& d) {
  const LeadingCoeffs& lc = d.coeffs;
  std::string out = std::to_string(lc.modulus) + "," + std::to_string(lc.r) + ",\"" +
                    detail::join_ints(d.eps) + "\",";
  if (lc.modulus == 2) return out + ",," + to_string(lc.c());
  return out + to_string(lc.a) + "," + to_string(lc.b) + ",";
}

inline std::string table_row_text(const Decomposition& d) {
  const LeadingCoeffs& lc = d.coeffs;
  std::string out = "eps=" + detail::join_ints(d.eps) + " word=" + format_word(d.word);
  if (lc.modulus == 2)
    return out + " beta=" + to_string(d.beta.beta()) + " c=" + to_string(lc.c());
  return out + " beta+=" + to_string(d.beta.beta_plus) + " beta-=" +
         to_string(d.beta.beta_minus) + " a=" + to_string(lc.a) + " b=" + to_string(lc.b);
}

}  // namespace cmzv

#endif  // CMZV_DEPTH_HPP
