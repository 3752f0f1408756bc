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
// Acceptance criteria, shared by the acceptance test binary and
// `cmzv selftest`.

#ifndef CMZV_ACCEPTANCE_HPP
#define CMZV_ACCEPTANCE_HPP

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmzv/depth.hpp"
#include "cmzv/ihara.hpp"
#include "cmzv/numeric.hpp"
#include "cmzv/shuffle.hpp"
#include "cmzv/zeta.hpp"

namespace cmzv::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  /// Caps every exhaustive corpus; criteria never exceed their own limits.
  int max_weight = 6;
  unsigned seed = 20240601u;
};

namespace detail {

struct Outcome {
  bool pass = true;
  std::string detail;
  long checked = 0;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

inline Word random_unit_word(std::mt19937& rng, int modulus, int weight) {
  std::uniform_int_distribution<int> pick(0, modulus - 1);
  std::vector<int> exps(static_cast<std::size_t>(weight));
  for (int& e : exps) e = pick(rng);
  return Word::from_exponents(modulus, exps);
}

/// Random word whose first letter is a root letter.
inline Word random_word(std::mt19937& rng, int modulus, int weight) {
  std::uniform_int_distribution<int> pick_root(0, modulus - 1);
  std::uniform_int_distribution<int> pick_any(-1, modulus - 1);
  Word w(modulus);
  for (int i = 0; i < weight; ++i) {
    const int k = i == 0 ? pick_root(rng) : pick_any(rng);
    w.push_back(k < 0 ? Letter::zero() : Letter::root(k));
  }
  return w;
}

inline std::vector<int> canonical_tuple(int r, int last) {
  std::vector<int> eps(static_cast<std::size_t>(r), 0);
  eps.back() = last;
  return eps;
}

inline Outcome canonical_values(const Options&) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r <= 10; ++r) {
      const Rational expected = canonical_scale(r);
      const LeadingCoeffs lc = leading_coefficients(n, canonical_tuple(r, 1));
      if (lc.a != expected || lc.b != 0)
        o.fail("N=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + format_coeffs(lc));
      ++o.checked;
      if (n != 2) {
        const LeadingCoeffs inv = leading_coefficients(n, canonical_tuple(r, n - 1));
        if (inv.a != 0 || inv.b != expected)
          o.fail("N=" + std::to_string(n) + " r=" + std::to_string(r) + " (eps^-1): " +
                 format_coeffs(inv));
        ++o.checked;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) o.fail("runtime " + std::to_string(secs) + " s >= 1 s");
  if (o.pass) o.detail = std::to_string(o.checked) + " tuples exact, r <= 10";
  return o;
}

inline Outcome closed_form_fixtures(const Options&) {
  Outcome o;
  struct Expect {
    const char* fixture;
    Rational a;
    Rational b;
  };
  const Expect expected[] = {{"n2-w2-mm", Rational(1, 2), 0},
                             {"n2-w3-mmm", Rational(-1, 6), 0},
                             {"n3-w2-ee", Rational(1, 2), 0},
                             {"n4-w2-ii", Rational(1, 2), 0}};
  std::ostringstream residuals;
  for (const Expect& e : expected) {
    const FixtureReport rep = check_fixture(e.fixture);
    if (rep.coeffs.a != e.a || rep.coeffs.b != e.b)
      o.fail(std::string(e.fixture) + ": symbolic " + format_coeffs(rep.coeffs));
    if (!rep.pass) {
      std::ostringstream msg;
      msg << e.fixture << ": residual " << rep.residual << " > " << rep.tolerance;
      o.fail(msg.str());
    }
    residuals << (o.checked == 0 ? "" : ", ") << e.fixture << " " << rep.residual;
    ++o.checked;
  }
  if (o.pass) o.detail = "residuals: " + residuals.str();
  return o;
}

inline Outcome oracle_equivalence(const Options& opt) {
  Outcome o;
  const int top = std::min(6, opt.max_weight);
  for (int n = 2; n <= 4; ++n) {
    for (int s = 1; s <= top; ++s) {
      const GradedDual dual(n, 1, s, s);
      for (const Word& w : unit_words(n, s)) {
        if (dual.apply(w) != dbar1_direct(n, w))
          o.fail("N=" + std::to_string(n) + " word " + format_word(w) + ": direct " +
                 format_lincomb(dbar1_direct(n, w)) + " vs dual " + format_lincomb(dual.apply(w)));
        ++o.checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(o.checked) + " unit words, weight <= " + std::to_string(top);
  return o;
}

inline Outcome higher_vanishing(const Options& opt) {
  Outcome o;
  const int top = std::min(6, opt.max_weight);
  for (int n = 2; n <= 4; ++n) {
    for (int s = 2; s <= top; ++s) {
      for (int d = 2; d <= s; ++d) {
        if (!is_valid_generator(n, d)) continue;
        const GradedDual dual(n, d, s, s);
        for (const Word& w : unit_words(n, s)) {
          if (!dual.apply(w).is_zero())
            o.fail("N=" + std::to_string(n) + " n=" + std::to_string(d) + " word " + format_word(w));
          ++o.checked;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(o.checked) + " (n, word) pairs vanish";
  return o;
}

inline Outcome leibniz(const Options& opt) {
  Outcome o;
  std::mt19937 rng(opt.seed);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> first(1, 7);
      const int w1 = first(rng);
      std::uniform_int_distribution<int> second(1, 8 - w1);
      const int w2 = second(rng);
      const Word a = random_unit_word(rng, n, w1);
      const Word b = random_unit_word(rng, n, w2);
      const LinComb lhs = dbar1_direct(n, shuffle(a, b));
      const LinComb rhs = shuffle(dbar1_direct(n, LinComb(a)), LinComb(b)) +
                          shuffle(LinComb(a), dbar1_direct(n, LinComb(b)));
      if (lhs != rhs) o.fail("N=" + std::to_string(n) + " pair " + format_word(a) + " | " + format_word(b));
      ++o.checked;
    }
  }
  if (o.pass) o.detail = std::to_string(o.checked) + " random pairs, combined weight <= 8";
  return o;
}

inline Outcome regularization(const Options& opt) {
  Outcome o;
  const int top = std::min(5, opt.max_weight);
  for (int n = 2; n <= 4; ++n) {
    const Word e1 = single_letter(n, Letter::root(0));
    Regularizer reg;
    for (int s = 0; s <= top; ++s) {
      for (const Word& w : unit_words(n, s)) {
        if (!reg(shuffle(w, e1)).is_zero()) o.fail("N=" + std::to_string(n) + " reg(w sh e^1) != 0 for " + format_word(w));
        const LinComb once = reg(w);
        if (reg(once) != once) o.fail("N=" + std::to_string(n) + " not idempotent on " + format_word(w));
        for (const auto& [u, c] : once) {
          if (weight_and_depth(u) != weight_and_depth(w) || (!u.empty() && u.back() == Letter::root(0)))
            o.fail("N=" + std::to_string(n) + " bad output word " + format_word(u) + " from " + format_word(w));
        }
        ++o.checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(o.checked) + " unit words, weight <= " + std::to_string(top);
  return o;
}

inline Outcome round_trips(const Options& opt) {
  Outcome o;
  const int top = std::min(5, opt.max_weight);
  for (int n = 2; n <= 4; ++n) {
    for (int s = 1; s <= top; ++s) {
      for (int d = 1; d <= s; ++d) {
        for (const Word& w : all_words(n, s, d)) {
          if (w.front().is_zero()) continue;
          if (word_of_zeta(zeta_of_word(w)) != w) o.fail("word " + format_word(w));
          ++o.checked;
        }
      }
      // Compositions of s: bit i set means a part boundary after position i.
      for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
        std::vector<int> ks{1};
        for (int i = 0; i < s - 1; ++i) {
          if (mask & (1u << i)) {
            ks.push_back(1);
          } else {
            ++ks.back();
          }
        }
        for (const auto& eps : exponent_tuples(n, static_cast<int>(ks.size()))) {
          const ZetaArg z(n, ks, eps);
          if (zeta_of_word(word_of_zeta(z)) != z) o.fail("index " + format_zeta(z));
          ++o.checked;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(o.checked) + " words and indices, weight <= " + std::to_string(top);
  return o;
}

inline Outcome conjugation_swap(const Options& opt) {
  Outcome o;
  const int top = std::min(5, opt.max_weight);
  for (int n = 3; n <= 4; ++n) {
    for (int r = 1; r <= top; ++r) {
      for (const auto& eps : exponent_tuples(n, r)) {
        std::vector<int> conj(eps.size());
        std::transform(eps.begin(), eps.end(), conj.begin(), [n](int a) { return (n - a) % n; });
        const LeadingCoeffs x = leading_coefficients(n, eps);
        const LeadingCoeffs y = leading_coefficients(n, conj);
        if (x.a != y.b || x.b != y.a)
          o.fail("N=" + std::to_string(n) + " eps=" + cmzv::detail::join_ints(eps));
        ++o.checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(o.checked) + " tuples, weight <= " + std::to_string(top);
  return o;
}

inline Outcome spanning(const Options& opt) {
  Outcome o;
  const int top = std::min(6, opt.max_weight);
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r <= top; ++r) {
      for (const auto& eps : exponent_tuples(n, r)) {
        try {
          const Decomposition d = decompose(n, eps);
          for (const auto& [w, c] : d.residue)
            if (w.size() != 1 || w[0].is_zero())
              o.fail("N=" + std::to_string(n) + " eps=" + cmzv::detail::join_ints(eps) +
                     " leaves " + format_word(w));
        } catch (const std::exception& e) {
          o.fail("N=" + std::to_string(n) + " eps=" + cmzv::detail::join_ints(eps) + ": " + e.what());
        }
        ++o.checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(o.checked) + " tuples reduce to generators, weight <= " + std::to_string(top);
  return o;
}

inline Outcome numeric_infrastructure(const Options& opt) {
  Outcome o;
  std::mt19937 rng(opt.seed + 7);
  double worst = 0.0;
  std::vector<NumericEvaluator> evals(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 4);
    std::uniform_int_distribution<int> pick_w(1, 3);
    const int n = pick_n(rng);
    const Word a = random_word(rng, n, pick_w(rng));
    const Word b = random_word(rng, n, pick_w(rng));
    NumericEvaluator& ev = evals[static_cast<std::size_t>(n)];
    const Complex lhs = ev.word(a).value() * ev.word(b).value();
    const Complex rhs = ev.word(shuffle(a, b)).value();
    const double diff = std::abs(lhs - rhs);
    worst = std::max(worst, diff);
    if (!(diff <= 1e-5)) {
      std::ostringstream msg;
      msg << "N=" << n << " pair " << format_word(a) << " | " << format_word(b) << " differs by " << diff;
      o.fail(msg.str());
    }
    ++o.checked;
  }
  const double dist = std::abs(numeric_li1(4, 1).value() + numeric_li1(4, 3).value() -
                               numeric_li1(4, 2).value());
  if (!(dist <= 1e-12)) o.fail("distribution relation off by " + std::to_string(dist));
  if (o.pass) {
    std::ostringstream msg;
    msg << "20 shuffle pairs, worst " << worst << "; distribution " << dist;
    o.detail = msg.str();
  }
  return o;
}

}  // namespace detail

struct Criterion {
  int id;
  const char* title;
  std::function<detail::Outcome(const Options&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> kCriteria = {
      {1, "canonical values", detail::canonical_values},
      {2, "weight-2/3 closed-form fixtures", detail::closed_form_fixtures},
      {3, "dbar_1 direct vs dual oracle", detail::oracle_equivalence},
      {4, "higher derivations vanish on unit words", detail::higher_vanishing},
      {5, "Leibniz rule for dbar_1", detail::leibniz},
      {6, "regularization exactness", detail::regularization},
      {7, "word/index round trips", detail::round_trips},
      {8, "conjugation swaps (a, b)", detail::conjugation_swap},
      {9, "spanning by the generators", detail::spanning},
      {10, "numeric infrastructure", detail::numeric_infrastructure},
  };
  return kCriteria;
}

inline CriterionResult run_criterion(const Criterion& c, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  detail::Outcome o;
  try {
    o = c.run(opt);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {c.id, c.title, o.pass, o.detail, secs};
}

inline std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + ". " + r.title +
         ": " + r.detail + " (" + secs + " s)";
}

/// Runs every criterion, printing one line each to `log` when given.
inline std::vector<CriterionResult> run_all(const Options& opt = {}, std::ostream* log = nullptr) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria()) {
    out.push_back(run_criterion(c, opt));
    if (log) *log << format_result(out.back()) << std::endl;
  }
  return out;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

}  // namespace cmzv::acceptance

#endif  // CMZV_ACCEPTANCE_HPP
