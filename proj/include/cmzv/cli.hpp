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
// Command-line front end. Every subcommand is a thin adapter over one
// library call; output is deterministic.

#ifndef CMZV_CLI_HPP
#define CMZV_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cmzv/acceptance.hpp"
#include "cmzv/depth.hpp"
#include "cmzv/ihara.hpp"
#include "cmzv/numeric.hpp"
#include "cmzv/shuffle.hpp"
#include "cmzv/zeta.hpp"

namespace cmzv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string format_complex(const ComplexVal& v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.15g %+.15gi err=%.3g", v.re, v.im, v.err);
  return buf;
}

inline nlohmann::ordered_json complex_json(const ComplexVal& v) {
  nlohmann::ordered_json j;
  j["re"] = v.re;
  j["im"] = v.im;
  j["err"] = v.err;
  return j;
}

}  // namespace detail

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leading depth-graded coefficients of unit cyclotomic multiple zeta values", "cmzv"};
  app.require_subcommand(1);

  int modulus = 2;
  bool json = false;
  bool csv = false;
  std::string word_text;
  std::string eps_text;
  std::string ks_text;

  const auto add_modulus = [&](CLI::App* sub) {
    sub->add_option("--N", modulus, "modulus N in {2,3,4}")->required()->check(CLI::Range(2, 4));
  };

  auto* decompose_cmd = app.add_subcommand("decompose", "leading coefficients of zeta(1,...,1; eps^a1,...,eps^ar)");
  add_modulus(decompose_cmd);
  decompose_cmd->add_option("--eps", eps_text, "root exponents a1,...,ar")->required();
  decompose_cmd->add_flag("--json", json);

  int times = 1;
  auto* derive_cmd = app.add_subcommand("derive", "iterate dbar_1 on a unit word");
  add_modulus(derive_cmd);
  derive_cmd->add_option("--word", word_text)->required();
  derive_cmd->add_option("--times", times)->check(CLI::NonNegativeNumber);

  int derivation_weight = 1;
  auto* dual_cmd = app.add_subcommand("dual", "dbar_n as the transpose of the sigma_n action");
  add_modulus(dual_cmd);
  dual_cmd->add_option("--weight", derivation_weight, "derivation weight n")->required();
  dual_cmd->add_option("--word", word_text)->required();

  int piece_weight = 1;
  int piece_depth = 1;
  auto* matrix_cmd = app.add_subcommand("dual-matrix", "matrix of dbar_n on one graded piece");
  add_modulus(matrix_cmd);
  matrix_cmd->add_option("--weight", derivation_weight, "derivation weight n")->required();
  matrix_cmd->add_option("--word-weight", piece_weight, "weight of the source words")->required();
  matrix_cmd->add_option("--depth", piece_depth, "depth of the source words")->required();
  matrix_cmd->add_flag("--csv", csv);

  std::string w1_text;
  std::string w2_text;
  auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffle product of two words");
  add_modulus(shuffle_cmd);
  shuffle_cmd->add_option("--w1", w1_text)->required();
  shuffle_cmd->add_option("--w2", w2_text)->required();

  auto* regularize_cmd = app.add_subcommand("regularize", "remove trailing e^1 letters");
  add_modulus(regularize_cmd);
  regularize_cmd->add_option("--word", word_text)->required();

  auto* woz_cmd = app.add_subcommand("word-of-zeta", "word encoding of an index");
  add_modulus(woz_cmd);
  woz_cmd->add_option("--ks", ks_text)->required();
  woz_cmd->add_option("--eps", eps_text)->required();

  auto* zow_cmd = app.add_subcommand("zeta-of-word", "index of a word");
  add_modulus(zow_cmd);
  zow_cmd->add_option("--word", word_text)->required();
  zow_cmd->add_flag("--json", json);

  int terms = kDefaultTerms;
  int accel = kDefaultAccel;
  auto* eval_cmd = app.add_subcommand("eval", "numeric series value of an index");
  add_modulus(eval_cmd);
  eval_cmd->add_option("--ks", ks_text)->required();
  eval_cmd->add_option("--eps", eps_text)->required();
  eval_cmd->add_option("--terms", terms);
  eval_cmd->add_option("--accel", accel);
  eval_cmd->add_flag("--json", json);

  int depth_r = 1;
  auto* table_cmd = app.add_subcommand("table", "leading coefficients for every tuple of one weight");
  add_modulus(table_cmd);
  table_cmd->add_option("--r", depth_r)->required()->check(CLI::PositiveNumber);
  auto* csv_flag = table_cmd->add_flag("--csv", csv);
  auto* json_flag = table_cmd->add_flag("--json", json);
  csv_flag->excludes(json_flag);

  std::string fixture_name;
  auto* fixture_cmd = app.add_subcommand("fixture", "check a registered closed-form fixture");
  fixture_cmd->add_option("name", fixture_name)->required();

  int max_weight = 6;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  selftest_cmd->add_option("--max-weight", max_weight)->check(CLI::Range(1, 6));

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("cmzv");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (decompose_cmd->parsed()) {
      const LeadingCoeffs lc = leading_coefficients(modulus, parse_int_list(eps_text));
      out << (json ? to_json(lc).dump() : format_coeffs(lc)) << "\n";
    } else if (derive_cmd->parsed()) {
      out << format_lincomb(iterate_dbar1(modulus, LinComb(parse_word(word_text, modulus)), times)) << "\n";
    } else if (dual_cmd->parsed()) {
      out << format_lincomb(dbar_dual(modulus, derivation_weight, parse_word(word_text, modulus))) << "\n";
    } else if (matrix_cmd->parsed()) {
      const DualMatrix m = dual_matrix(modulus, derivation_weight, piece_weight, piece_depth);
      out << (csv ? to_csv(m) : to_json(m).dump() + "\n");
    } else if (shuffle_cmd->parsed()) {
      out << format_lincomb(shuffle(parse_word(w1_text, modulus), parse_word(w2_text, modulus))) << "\n";
    } else if (regularize_cmd->parsed()) {
      out << format_lincomb(regularize(parse_word(word_text, modulus))) << "\n";
    } else if (woz_cmd->parsed()) {
      out << format_word(word_of_zeta(ZetaArg(modulus, parse_int_list(ks_text), parse_int_list(eps_text)))) << "\n";
    } else if (zow_cmd->parsed()) {
      const ZetaArg z = zeta_of_word(parse_word(word_text, modulus));
      out << (json ? zeta_to_json(z).dump() : format_zeta(z)) << "\n";
    } else if (eval_cmd->parsed()) {
      const ComplexVal v = numeric_zeta(ZetaArg(modulus, parse_int_list(ks_text), parse_int_list(eps_text)), terms, accel);
      out << (json ? detail::complex_json(v).dump() : detail::format_complex(v)) << "\n";
    } else if (table_cmd->parsed()) {
      if (csv) out << kTableCsvHeader << "\n";
      for (const Decomposition& row : batch_table(modulus, depth_r)) {
        if (csv) {
          out << table_row_csv(row) << "\n";
        } else if (json) {
          out << table_row_json(row).dump() << "\n";
        } else {
          out << table_row_text(row) << "\n";
        }
      }
    } else if (fixture_cmd->parsed()) {
      const FixtureReport rep = check_fixture(fixture_name);
      out << to_json(rep).dump() << "\n";
      return rep.pass ? kExitOk : kExitDomain;
    } else if (selftest_cmd->parsed()) {
      acceptance::Options opt;
      opt.max_weight = max_weight;
      const auto results = acceptance::run_all(opt, &out);
      return acceptance::all_passed(results) ? kExitOk : kExitDomain;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace cmzv::cli

#endif  // CMZV_CLI_HPP
