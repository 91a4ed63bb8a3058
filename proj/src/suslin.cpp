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

#include "wittforge/suslin.hpp"

#include <span>
#include <stdexcept>

namespace wittforge {

namespace {

[[noreturn]] void bad_input(const std::string& msg) {
    throw std::invalid_argument(msg);
}

MatrixExact build(const RingHandle& ring, std::span<const Element> a,
                  std::span<const Element> b) {
    const std::size_t n = a.size();
    if (n == 1) return {ring, 1, 1, {a[0]}};
    MatrixExact upper_right = build(ring, a.subspan(1), b.subspan(1));
    MatrixExact lower_left =
        build(ring, b.subspan(1), a.subspan(1)).transpose().negate();
    const std::size_t h = upper_right.rows();
    std::vector<Element> e;
    e.reserve(4 * h * h);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j)
            e.push_back(i == j ? a[0] : ring->zero());
        for (std::size_t j = 0; j < h; ++j) e.push_back(upper_right(i, j));
    }
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) e.push_back(lower_left(i, j));
        for (std::size_t j = 0; j < h; ++j)
            e.push_back(i == j ? b[0] : ring->zero());
    }
    return {ring, 2 * h, 2 * h, std::move(e)};
}

void validate(const SuslinPair& p) {
    if (p.a.empty() || p.a.size() != p.b.size())
        bad_input("suslin pair: rows must be nonempty and of equal length");
    for (const Element& e : p.a) require_same_ring(p.a[0], e);
    for (const Element& e : p.b) require_same_ring(p.a[0], e);
}

}  // namespace

MatrixExact suslin_matrix(const SuslinPair& p, std::size_t max_n) {
    validate(p);
    if (p.a.size() > max_n)
        bad_input("suslin_matrix: length exceeds the configured cap");
    return build(p.a[0].ring(), p.a, p.b);
}

SuslinDetCheck suslin_det_check(const SuslinPair& p) {
    validate(p);
    if (p.a.size() < 2)
        bad_input("suslin_det_check: the determinant law is stated for n >= 2");
    Element det_value = suslin_matrix(p).det();
    Int exponent = Int(1) << (p.a.size() - 2);
    Element expected = dot(p.a, p.b).pow(exponent);
    bool equal = det_value == expected;
    return {std::move(det_value), std::move(expected), equal};
}

bool suslin_sl_membership(const SuslinPair& p) {
    validate(p);
    if (p.a.size() < 2)
        bad_input("suslin_sl_membership: defined for n >= 2");
    if (!dot(p.a, p.b).is_one()) return false;
    if (!suslin_matrix(p).det().is_one())
        throw std::logic_error(
            "suslin_sl_membership: determinant law violated");
    return true;
}

}  // namespace wittforge
