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
// Prints the leading coefficients of every unit index of weight 3 for
// N = 3, together with the series value of the first few.

#include <cstdio>
#include <iostream>

#include "cmzv/cmzv.hpp"

int main() {
  for (const cmzv::Decomposition& row : cmzv::batch_table(3, 3))
    std::cout << cmzv::table_row_text(row) << "\n";

  const cmzv::ZetaArg z = cmzv::ZetaArg::unit(3, {1, 1});
  const cmzv::ComplexVal v = cmzv::numeric_zeta(z);
  std::printf("zeta(%s) ~ %.12f %+.12fi\n", cmzv::format_zeta(z).c_str(), v.re, v.im);
}
