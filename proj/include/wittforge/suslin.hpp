/*
 * Copyright 2026 The Wittforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file suslin.hpp
 * @brief Recursively defined Suslin matrices of size 2^(n-1) and the checks
 *        for their determinant and SL-membership laws.
 */

#pragma once

#include "wittforge/matrix.hpp"

namespace wittforge {

/// A pair of equal-length rows over one ring.
struct SuslinPair {
    std::vector<Element> a;
    std::vector<Element> b;
};

/// The recursive construction: the 1x1 matrix (a_1) for n = 1, and for
/// n >= 2 the block matrix with a_1*Id upper left, the (n-1)-st matrix of
/// the tails upper right, minus the transposed swap of the tails lower
/// left and b_1*Id lower right. Size doubles with n and is capped at
/// n = 8 (256 x 256) to bound memory.
MatrixExact suslin_matrix(const SuslinPair& p, std::size_t max_n = 8);

struct SuslinDetCheck {
    Element det_value;  // det of the constructed matrix
    Element expected;   // (a.b^t)^(2^(n-2))
    bool equal;
};

/// Compares the determinant with (a.b^t)^(2^(n-2)); defined for n >= 2.
SuslinDetCheck suslin_det_check(const SuslinPair& p);

/// True iff a.b^t = 1; in that case the determinant is additionally
/// asserted to be exactly 1. Defined for n >= 2.
bool suslin_sl_membership(const SuslinPair& p);

}  // namespace wittforge
