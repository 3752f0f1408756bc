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
#include <sstream>

#include "cmzv/cli.hpp"

using namespace cmzv;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DecomposeJson) {
  EXPECT_EQ(run({"decompose", "--N", "2", "--eps", "1,1,1", "--json"}).out, "{\"N\":2,\"r\":3,\"c\":\"-1/6\"}\n");
  EXPECT_EQ(run({"decompose", "--N", "4", "--eps", "1,1", "--json"}).out,
            "{\"N\":4,\"r\":2,\"a\":\"1/2\",\"b\":\"0\"}\n");
}

TEST(Cli, DecomposeText) {
  const Outcome o = run({"decompose", "--N", "4", "--eps", "1,2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, format_coeffs(leading_coefficients(4, {1, 2})) + "\n");
}

TEST(Cli, Shuffle) {
  EXPECT_EQ(run({"shuffle", "--N", "2", "--w1", "1", "--w2", "0"}).out, "1,0 + 0,1\n");
}

TEST(Cli, Derive) {
  EXPECT_EQ(run({"derive", "--N", "4", "--word", "2,3"}).out, "3\n");
  EXPECT_EQ(run({"derive", "--N", "2", "--word", "1,0,1", "--times", "2"}).out, "1\n");
  EXPECT_EQ(run({"derive", "--N", "2", "--word", "1,1", "--times", "0"}).out, "1,1\n");
}

TEST(Cli, Dual) {
  EXPECT_EQ(run({"dual", "--N", "2", "--weight", "3", "--word", "1,x,x,1"}).out, "-3*1\n");
  EXPECT_EQ(run({"dual", "--N", "3", "--weight", "2", "--word", "1,2"}).out, "0\n");
}

TEST(Cli, DualMatrix) {
  const DualMatrix m = dual_matrix(2, 1, 2, 2);
  EXPECT_EQ(run({"dual-matrix", "--N", "2", "--weight", "1", "--word-weight", "2", "--depth", "2"}).out,
            to_json(m).dump() + "\n");
  EXPECT_EQ(run({"dual-matrix", "--N", "2", "--weight", "1", "--word-weight", "2", "--depth", "2", "--csv"}).out,
            to_csv(m));
}

TEST(Cli, Regularize) {
  EXPECT_EQ(run({"regularize", "--N", "2", "--word", "1,0,0"}).out, "0,0,1\n");
  EXPECT_EQ(run({"regularize", "--N", "2", "--word", "1,0"}).out, "-0,1\n");
}

TEST(Cli, WordAndZeta) {
  EXPECT_EQ(run({"word-of-zeta", "--N", "2", "--ks", "2", "--eps", "1"}).out, "1,x\n");
  EXPECT_EQ(run({"zeta-of-word", "--N", "4", "--word", "1,2"}).out, "ks=1,1; eps=1,2\n");
  EXPECT_EQ(run({"zeta-of-word", "--N", "2", "--word", "1,x,x,1", "--json"}).out,
            "{\"ks\":[3,1],\"eps\":[0,1],\"N\":2}\n");
}

TEST(Cli, Eval) {
  const Outcome o = run({"eval", "--N", "2", "--ks", "1", "--eps", "1", "--terms", "100000", "--json"});
  EXPECT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  const ComplexVal v = numeric_zeta(ZetaArg(2, {1}, {1}), 100000);
  EXPECT_EQ(j["re"].get<double>(), v.re);
  EXPECT_EQ(j["im"].get<double>(), v.im);
  EXPECT_EQ(j["err"].get<double>(), v.err);
}

TEST(Cli, Table) {
  EXPECT_EQ(run({"table", "--N", "2", "--r", "1", "--csv"}).out, "N,r,eps,a,b,c\n2,1,\"0\",,,0\n2,1,\"1\",,,-1\n");
  const Outcome json = run({"table", "--N", "3", "--r", "2", "--json"});
  EXPECT_EQ(std::count(json.out.begin(), json.out.end(), '\n'), 9);
  const Outcome text = run({"table", "--N", "2", "--r", "1"});
  EXPECT_EQ(text.out, table_row_text(batch_table(2, 1)[0]) + "\n" + table_row_text(batch_table(2, 1)[1]) + "\n");
  EXPECT_EQ(run({"table", "--N", "2", "--r", "1", "--csv", "--json"}).code, 2);
}

TEST(Cli, Fixture) {
  const Outcome o = run({"fixture", "n2-w2-mm"});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(o.out)["pass"].get<bool>());
  EXPECT_EQ(run({"fixture", "nope"}).code, 1);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"table", "--N", "4", "--r", "2", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"decompose", "--eps", "1"}).code, 2);
  EXPECT_EQ(run({"decompose", "--N", "5", "--eps", "1"}).code, 2);
  EXPECT_EQ(run({"shuffle", "--N", "2", "--w1", "1,,0", "--w2", "0"}).code, 2);
  EXPECT_EQ(run({"decompose", "--N", "2", "--eps", "a"}).code, 2);
  EXPECT_EQ(run({"selftest", "--max-weight", "9"}).code, 2);
  EXPECT_FALSE(run({"frobnicate"}).err.empty());
}

TEST(Cli, DomainErrorsExitOne) {
  const Outcome divergent = run({"eval", "--N", "2", "--ks", "1", "--eps", "0"});
  EXPECT_EQ(divergent.code, 1);
  EXPECT_NE(divergent.err.find("divergent"), std::string::npos);
  EXPECT_EQ(run({"regularize", "--N", "2", "--word", "x,1"}).code, 1);
  EXPECT_EQ(run({"derive", "--N", "2", "--word", "1,1", "--times", "2"}).code, 1);
  EXPECT_EQ(run({"dual", "--N", "2", "--weight", "2", "--word", "1,1"}).code, 1);
  EXPECT_EQ(run({"decompose", "--N", "2", "--eps", "2"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  const Outcome o = run({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("decompose"), std::string::npos);
}

TEST(Cli, SelftestSmallWeight) {
  const Outcome o = run({"selftest", "--max-weight", "2"});
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n') >= 10, true);
}
