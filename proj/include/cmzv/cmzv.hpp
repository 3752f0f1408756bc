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
// Umbrella header.

#ifndef CMZV_CMZV_HPP
#define CMZV_CMZV_HPP

#include "cmzv/word.hpp"
#include "cmzv/lincomb.hpp"
#include "cmzv/shuffle.hpp"
#include "cmzv/zeta.hpp"
#include "cmzv/ihara.hpp"
#include "cmzv/depth.hpp"
#include "cmzv/numeric.hpp"

#endif  // CMZV_CMZV_HPP
