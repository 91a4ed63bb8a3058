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

#include "doctest.h"
#include "oracles.hpp"
#include "wittforge/suslin.hpp"

using namespace wittforge;

namespace {

std::vector<Element> parse_row(const RingHandle& ring,
                               const std::vector<const char*>& text) {
    std::vector<Element> out;
    for (const char* t : text) out.push_back(ring->parse(t));
    return out;
}

}  // namespace

TEST_CASE("construction at small lengths") {
    auto z = ring_parse("Z");

    SuslinPair p1{parse_row(z, {"7"}), parse_row(z, {"9"})};
    MatrixExact m1 = suslin_matrix(p1);
    CHECK(m1.rows() == 1);
    CHECK(m1(0, 0) == z->from_int(7));

    SuslinPair p2{parse_row(z, {"2", "3"}), parse_row(z, {"5", "7"})};
    MatrixExact m2 = suslin_matrix(p2);
    CHECK(m2.rows() == 2);
    CHECK(m2(0, 0) == z->from_int(2));
    CHECK(m2(0, 1) == z->from_int(3));
    CHECK(m2(1, 0) == z->from_int(-7));
    CHECK(m2(1, 1) == z->from_int(5));

    SuslinPair p3{parse_row(z, {"1", "2", "3"}), parse_row(z, {"1", "0", "0"})};
    MatrixExact m3 = suslin_matrix(p3);
    CHECK(m3.rows() == 4);
    CHECK(m3.det() == z->one());
    CHECK(oracles::laplace_det(m3) == z->one());

    SuslinPair bad{parse_row(z, {"1", "2"}), parse_row(z, {"1"})};
    CHECK_THROWS_AS(suslin_matrix(bad), std::invalid_argument);

    SuslinPair big{std::vector<Element>(9, z->one()),
                   std::vector<Element>(9, z->one())};
    CHECK_THROWS_AS(suslin_matrix(big), std::invalid_argument);
}

TEST_CASE("determinant law") {
    auto z = ring_parse("Z");
    SuslinPair p{parse_row(z, {"2", "3"}), parse_row(z, {"5", "7"})};
    auto check = suslin_det_check(p);
    // 2x2 case: det [[2,3],[-7,5]] = 10 + 21 = 31 = a.b^t.
    CHECK(check.det_value == z->from_int(31));
    CHECK(check.expected == z->from_int(31));
    CHECK(check.equal);
    CHECK(oracles::laplace_det(suslin_matrix(p)) == z->from_int(31));

    SuslinPair p1{parse_row(z, {"3"}), parse_row(z, {"4"})};
    CHECK_THROWS_AS(suslin_det_check(p1), std::invalid_argument);

    Rng rng(81);
    for (const char* desc : {"Z", "GF(7)", "Z/6"}) {
        auto ring = ring_parse(desc);
        for (std::size_t n = 2; n <= 4; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                SuslinPair q;
                for (std::size_t i = 0; i < n; ++i) {
                    q.a.push_back(ring->sample(rng));
                    q.b.push_back(ring->sample(rng));
                }
                CHECK(suslin_det_check(q).equal);
            }
        }
    }
}

TEST_CASE("basepoint rows give determinant one") {
    auto z = ring_parse("Z");
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<Element> e(n, z->zero());
        e[0] = z->one();
        SuslinPair p{e, e};
        CHECK(suslin_matrix(p).det() == z->one());
        CHECK(suslin_sl_membership(p));
    }
}

TEST_CASE("sl membership") {
    auto z = ring_parse("Z");
    SuslinPair good{parse_row(z, {"1", "2", "3"}),
                    parse_row(z, {"1", "0", "0"})};
    CHECK(suslin_sl_membership(good));

    SuslinPair off{parse_row(z, {"2", "0", "0"}),
                   parse_row(z, {"1", "0", "0"})};
    CHECK_FALSE(suslin_sl_membership(off));

    auto dual = ring_parse("GF(7)[x]/(x^2)");
    SuslinPair nil{parse_row(dual, {"x", "1-x", "0"}),
                   parse_row(dual, {"1", "1", "0"})};
    CHECK(suslin_sl_membership(nil));
}

TEST_CASE("substitution commutes with construction") {
    // Building over Z[x] and evaluating entrywise equals building from the
    // evaluated entries.
    auto zx = ring_parse("Z[x]");
    auto z = ring_parse("Z");
    Rng rng(82);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng.below(2);
        SuslinPair generic;
        for (std::size_t i = 0; i < n; ++i) {
            generic.a.push_back(zx->sample(rng));
            generic.b.push_back(zx->sample(rng));
        }
        Element point = z->from_int(rng.range(-4, 4));
        MatrixExact symbolic = suslin_matrix(generic);

        SuslinPair concrete;
        for (std::size_t i = 0; i < n; ++i) {
            concrete.a.push_back(poly_eval(generic.a[i], point));
            concrete.b.push_back(poly_eval(generic.b[i], point));
        }
        MatrixExact direct = suslin_matrix(concrete);

        for (std::size_t i = 0; i < symbolic.rows(); ++i)
            for (std::size_t j = 0; j < symbolic.cols(); ++j)
                CHECK(poly_eval(symbolic(i, j), point) == direct(i, j));
    }
}
