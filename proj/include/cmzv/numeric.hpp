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
// Double-precision evaluation of cyclotomic MZVs by truncated nested sums,
// used to cross-check symbolic results.

#ifndef CMZV_NUMERIC_HPP
#define CMZV_NUMERIC_HPP

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "cmzv/depth.hpp"
#include "cmzv/zeta.hpp"

namespace cmzv {

using Complex = std::complex<double>;

/// A value with a heuristic absolute error estimate (not a rigorous bound).
struct ComplexVal {
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;

  Complex value() const { return {re, im}; }
};

inline constexpr int kDefaultTerms = 200000;
inline constexpr int kDefaultAccel = 8;
inline constexpr int kMinTerms = 1000;

/// eps^k with eps = exp(2 pi i / N); exact components where they are rational.
inline Complex root_value(int modulus, int exponent) {
  check_modulus(modulus);
  const int k = ((exponent % modulus) + modulus) % modulus;
  if (4 % modulus == 0) {
    static constexpr Complex kFourth[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kFourth[k * (4 / modulus)];
  }
  const double h = std::sqrt(3.0) / 2.0;
  static const Complex kThird[] = {{1, 0}, {-0.5, h}, {-0.5, -h}};
  return kThird[k];
}

/// zeta(1; eps^a) = -log(1 - eps^a), principal branch.
inline ComplexVal numeric_li1(int modulus, int a) {
  RootExp root(modulus, a);
  if (root.is_one()) throw DomainError("Li_1(1) diverges");
  const Complex v = -std::log(Complex(1.0) - root_value(modulus, a));
  return {v.real(), v.imag(), std::numeric_limits<double>::epsilon() * std::abs(v)};
}

namespace detail {

// Solves the square system in place; partial pivoting.
inline std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace detail

/// Nested partial sums up to n <= terms, then `accel` rounds of averaging
/// the outer partial sums over N consecutive indices, then a fit of the averaged sequence
/// at n = M, M/2, M/4, ... to s + sum_j c_j log^j(n) / n, which removes the
/// non-oscillating tail left by products of oscillating inner sums.
/// err is the size of the last two acceleration corrections.
inline ComplexVal numeric_zeta(const ZetaArg& z, int terms = kDefaultTerms, int accel = kDefaultAccel) {
  if (!z.is_convergent())
    throw DomainError("numeric_zeta: divergent index " + format_zeta(z));
  if (terms < kMinTerms)
    throw DomainError("numeric_zeta: truncation must be >= " + std::to_string(kMinTerms));
  if (accel < 0) throw DomainError("numeric_zeta: negative acceleration depth");

  const std::size_t m = static_cast<std::size_t>(terms);
  const int modulus = z.modulus();
  std::vector<Complex> inner(m + 1, Complex(1.0));
  std::vector<Complex> sums(m + 1);
  for (int j = 0; j < z.depth(); ++j) {
    const int k = z.ks()[static_cast<std::size_t>(j)];
    const int a = z.eps()[static_cast<std::size_t>(j)];
    sums[0] = 0.0;
    for (std::size_t n = 1; n <= m; ++n) {
      const double nd = static_cast<double>(n);
      const double denom = k == 1 ? nd : std::pow(nd, k);
      const Complex phase = root_value(modulus, static_cast<int>((static_cast<long long>(a) * static_cast<long long>(n)) % modulus));
      sums[n] = sums[n - 1] + phase * inner[n - 1] / denom;
    }
    std::swap(inner, sums);
  }
  // inner[n] now holds the outer partial sums S(n).
  // Each round replaces S(n) by the mean of S(n-N+1..n); every phase is an
  // N-th root of unity, so this cancels the oscillating part to leading order.
  // For N = 2 it is the pairwise mean.
  std::vector<Complex>& avg = inner;
  const std::size_t window = static_cast<std::size_t>(modulus);
  std::vector<Complex> next(m + 1);
  Complex previous_round = avg[m];
  for (int round = 1; round <= accel; ++round) {
    previous_round = avg[m];
    const std::size_t first = static_cast<std::size_t>(round) * (window - 1) + 1;
    Complex running = 0.0;
    for (std::size_t j = 0; j < window; ++j) running += avg[first - j];
    for (std::size_t n = first; n <= m; ++n) {
      if (n > first) running += avg[n] - avg[n - window];
      next[n] = running / static_cast<double>(window);
    }
    std::swap(avg, next);
  }
  const Complex averaged = avg[m];

  int log_powers = std::min(z.depth() - 1, 4);
  const auto smallest_sample = [&](int lp) { return m >> (lp + 1); };
  const std::size_t min_sample = static_cast<std::size_t>(4 * (accel + 1)) * window + 16;
  while (log_powers >= 0 && smallest_sample(log_powers) < min_sample) --log_powers;

  Complex value = averaged;
  if (log_powers >= 0) {
    const std::size_t unknowns = static_cast<std::size_t>(log_powers) + 2;
    std::vector<std::vector<Complex>> a(unknowns, std::vector<Complex>(unknowns));
    std::vector<Complex> b(unknowns);
    for (std::size_t q = 0; q < unknowns; ++q) {
      const std::size_t n = m >> q;
      const double ratio = static_cast<double>(m) / static_cast<double>(n);
      const double u = std::log(static_cast<double>(n) / static_cast<double>(m));
      a[q][0] = 1.0;
      double up = 1.0;
      for (std::size_t c = 1; c < unknowns; ++c) {
        a[q][c] = ratio * up;
        up *= u;
      }
      b[q] = avg[n];
    }
    value = detail::solve_dense(std::move(a), std::move(b))[0];
  }
  const double err = std::abs(value - averaged) + (accel > 0 ? std::abs(averaged - previous_round) : 0.0) +
                     16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(value));
  return {value.real(), value.imag(), err};
}

/// Memoizing evaluator for repeated indices at fixed (terms, accel).
class NumericEvaluator {
 public:
  explicit NumericEvaluator(int terms = kDefaultTerms, int accel = kDefaultAccel)
      : terms_(terms), accel_(accel) {}

  ComplexVal zeta(const ZetaArg& z) {
    if (auto it = memo_.find(z); it != memo_.end()) return it->second;
    const ComplexVal v = numeric_zeta(z, terms_, accel_);
    memo_.emplace(z, v);
    return v;
  }

  /// Numeric dch of a combination; the empty word contributes its coefficient.
  ComplexVal word(const LinComb& x) {
    Complex total = 0.0;
    double err = 0.0;
    LinComb nonempty(x.modulus());
    for (const auto& [w, c] : x) {
      if (w.empty()) {
        total += c.convert_to<double>();
      } else {
        nonempty.add(w, c);
      }
    }
    for (const ZetaTerm& t : dch_symbolic(nonempty)) {
      const ComplexVal v = zeta(t.index);
      const double c = t.coefficient.convert_to<double>();
      total += c * v.value();
      err += std::abs(c) * v.err;
    }
    return {total.real(), total.imag(), err};
  }

  ComplexVal word(const Word& w) {
    if (!w.empty() && w.front().is_zero())
      throw DomainError("numeric_word: leading e^0 in " + format_word(w));
    return word(LinComb(w));
  }

 private:
  int terms_;
  int accel_;
  std::map<ZetaArg, ComplexVal> memo_;
};

inline ComplexVal numeric_word(const Word& w, int terms = kDefaultTerms, int accel = kDefaultAccel) {
  return NumericEvaluator(terms, accel).word(w);
}

inline ComplexVal numeric_word(const LinComb& x, int terms = kDefaultTerms, int accel = kDefaultAccel) {
  return NumericEvaluator(terms, accel).word(x);
}

// ---------------------------------------------------------------------------
// Closed-form fixtures

namespace detail {

inline constexpr double kZeta3 = 1.2020569031595942854;

/// Li_2(exp(i theta)) by direct summation; the tail is O(1 / terms^2).
inline Complex li2_on_circle(double theta, int terms = 1000000) {
  Complex s = 0.0;
  for (int n = terms; n >= 1; --n) {
    const double nd = n;
    s += Complex(std::cos(nd * theta), std::sin(nd * theta)) / (nd * nd);
  }
  return s;
}

}  // namespace detail

struct Fixture {
  std::string name;
  int modulus;
  std::vector<int> eps;
  double tolerance;
  std::string description;
  /// Closed-form lower-depth part of the full value.
  std::function<Complex()> tail;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> kFixtures = [] {
    const double pi = std::numbers::pi;
    const double log2 = std::numbers::ln2;
    const double zeta2 = pi * pi / 6.0;
    std::vector<Fixture> f;
    f.push_back({"n2-w2-mm", 2, {1, 1}, 1e-6, "zeta(1,1;-1,-1) = 1/2 log^2 2 - pi^2/12",
                 [=] { return Complex(-zeta2 / 2.0); }});
    f.push_back({"n2-w3-mmm", 2, {1, 1, 1}, 1e-5,
                 "zeta(1,1,1;-1,-1,-1) = -1/6 log^3 2 + log2 zeta(2)/2 - zeta(3)/4",
                 [=] { return Complex(log2 * zeta2 / 2.0 - detail::kZeta3 / 4.0); }});
    f.push_back({"n3-w2-ee", 3, {1, 1}, 1e-6, "zeta(1,1;w,w) = 1/2 (Li1(w)^2 - Li2(w^2))",
                 [=] { return -0.5 * detail::li2_on_circle(4.0 * pi / 3.0); }});
    f.push_back({"n4-w2-ii", 4, {1, 1}, 1e-6, "zeta(1,1;i,i) = 1/2 log^2(1-i) + pi^2/24",
                 [=] { return Complex(pi * pi / 24.0); }});
    f.push_back({"n2-w4-canonical", 2, {0, 0, 0, 1}, 1e-5, "zeta(1,1,1,1;1,1,1,-1) = log^4 2 / 24",
                 [] { return Complex(0.0); }});
    f.push_back({"n3-w3-canonical", 3, {0, 0, 1}, 1e-6, "zeta(1,1,1;1,1,w) = -1/6 log^3(1-w)",
                 [] { return Complex(0.0); }});
    f.push_back({"n4-w3-canonical-inv", 4, {0, 0, 3}, 1e-6,
                 "zeta(1,1,1;1,1,-i) = -1/6 log^3(1+i)", [] { return Complex(0.0); }});
    return f;
  }();
  return kFixtures;
}

inline const Fixture& find_fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  throw DomainError("unknown fixture '" + name + "'");
}

struct FixtureReport {
  std::string fixture;
  LeadingCoeffs coeffs;
  Complex predicted;
  ComplexVal numeric;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Leading coefficients times numeric powers of L+ and L-, plus the
/// registered tail, against the series value.
inline FixtureReport check_fixture(const std::string& name, int terms = kDefaultTerms,
                                   int accel = kDefaultAccel) {
  const Fixture& f = find_fixture(name);
  const LeadingCoeffs lc = leading_coefficients(f.modulus, f.eps);
  const Complex l_plus = std::log(Complex(1.0) - root_value(f.modulus, 1));
  const Complex l_minus = std::log(Complex(1.0) - root_value(f.modulus, -1));
  const double r = lc.r;
  Complex predicted = lc.a.convert_to<double>() * std::pow(l_plus, r) + f.tail();
  if (f.modulus != 2) predicted += lc.b.convert_to<double>() * std::pow(l_minus, r);
  const ComplexVal numeric = numeric_zeta(ZetaArg::unit(f.modulus, f.eps), terms, accel);
  const double residual = std::abs(predicted - numeric.value());
  return {f.name, lc, predicted, numeric, residual, f.tolerance, residual <= f.tolerance};
}

inline nlohmann::ordered_json to_json(const FixtureReport& r) {
  nlohmann::ordered_json j;
  j["fixture"] = r.fixture;
  j["predicted"] = {{"re", r.predicted.real()}, {"im", r.predicted.imag()}};
  j["numeric"] = {{"re", r.numeric.re}, {"im", r.numeric.im}, {"err", r.numeric.err}};
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

}  // namespace cmzv

#endif  // CMZV_NUMERIC_HPP
