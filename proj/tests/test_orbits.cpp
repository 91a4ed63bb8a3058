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
#include "wittforge/orbits.hpp"

#include <set>

using namespace wittforge;

namespace {

const Int kBudget(1000000);

UnimodularRow pi1(const RingHandle& ring, std::size_t n) {
    UnimodularRow u;
    u.coords.assign(n, ring->zero());
    u.coords[0] = ring->one();
    u.section = u.coords;
    return u;
}

}  // namespace

TEST_CASE("section verification") {
    auto z = ring_parse("Z");
    UnimodularRow p = pi1(z, 3);
    CHECK(verify_section(p));

    UnimodularRow u{{z->from_int(2), z->from_int(3)},
                    {{z->from_int(-1), z->from_int(1)}}};
    CHECK(verify_section(u));

    UnimodularRow bad{{z->from_int(2), z->from_int(3)},
                      {{z->from_int(1), z->from_int(1)}}};
    CHECK_FALSE(verify_section(bad));

    UnimodularRow none{{z->one()}, std::nullopt};
    CHECK_THROWS_AS(verify_section(none), std::invalid_argument);
}

TEST_CASE("symplectic membership") {
    auto f3 = ring_parse("GF(3)");
    auto psi2 = standard_symplectic(f3, 2);
    CHECK(is_symplectic(MatrixExact::identity(f3, 2), psi2));

    // Sp_2 = SL_2: every determinant-1 matrix of rank 2 is symplectic.
    GroupSpec sl{GroupKind::SpecialLinear, std::nullopt};
    auto sl2 = group_elements(f3, 2, sl, kBudget);
    CHECK(sl2.size() == 24);
    for (const MatrixExact& g : sl2) CHECK(is_symplectic(g, psi2));

    auto f7 = ring_parse("GF(7)");
    auto psi2_7 = standard_symplectic(f7, 2);
    auto d = MatrixExact::diagonal(f7, {f7->from_int(2), f7->one()});
    CHECK_FALSE(is_symplectic(d, psi2_7));

    CHECK_THROWS_AS(is_symplectic(MatrixExact::identity(f3, 4), psi2),
                    std::invalid_argument);
}

TEST_CASE("right action and section transport") {
    auto z = ring_parse("Z");
    UnimodularRow p = pi1(z, 2);
    CHECK(act(p, MatrixExact::identity(z, 2)).coords == p.coords);

    auto e12 = MatrixExact::elementary(z, 2, 0, 1, z->from_int(4));
    auto moved = act(p, e12);
    CHECK(moved.coords ==
          std::vector<Element>{z->one(), z->from_int(4)});
    CHECK(verify_section(moved));

    Rng rng(91);
    UnimodularRow u{{z->from_int(2), z->from_int(3)},
                    {{z->from_int(-1), z->from_int(1)}}};
    for (int trial = 0; trial < 30; ++trial) {
        MatrixExact g = MatrixExact::identity(z, 2);
        for (int k = 0; k < 4; ++k) {
            std::size_t i = rng.below(2), j = rng.below(2);
            if (i == j) continue;
            g = g * MatrixExact::elementary(z, 2, i, j,
                                            z->from_int(rng.range(-3, 3)));
        }
        CHECK(verify_section(act(u, g)));
    }

    auto sing = MatrixExact::diagonal(z, {z->from_int(2), z->one()});
    CHECK_THROWS_AS(act(u, sing), std::domain_error);
}

TEST_CASE("orbits of Um_2(GF(2)) under SL_2") {
    auto f2 = ring_parse("GF(2)");
    GroupSpec sl{GroupKind::SpecialLinear, std::nullopt};
    auto part = orbit_enumerate(f2, 2, sl, std::nullopt, kBudget);
    CHECK(part.universe_size == 3);
    REQUIRE(part.orbits.size() == 1);
    CHECK(part.orbits[0].rows.size() == 3);
}

TEST_CASE("trivial generator list gives singleton orbits") {
    auto z4 = ring_parse("Z/4");
    auto part =
        orbit_closure(z4, 2, {}, pi1(z4, 2), kBudget);
    REQUIRE(part.orbits.size() == 1);
    CHECK(part.orbits[0].rows.size() == 1);
    CHECK(part.orbits[0].rows[0] == pi1(z4, 2).coords);
}

TEST_CASE("elementary orbits over Z/4 reach every unimodular row") {
    auto z4 = ring_parse("Z/4");
    GroupSpec el{GroupKind::Elementary, std::nullopt};
    auto part = orbit_enumerate(z4, 2, el, std::nullopt, kBudget);
    // Z/4 is local: a row is unimodular iff some coordinate is a unit.
    CHECK(part.universe_size == 12);
    REQUIRE(part.orbits.size() == 1);
    CHECK(part.orbits[0].rows.size() == 12);

    auto from_start = orbit_enumerate(z4, 2, el, pi1(z4, 2), kBudget);
    REQUIRE(from_start.orbits.size() == 1);
    CHECK(from_start.orbits[0].rows.size() == 12);
}

TEST_CASE("orbit output is a partition and closed under generators") {
    for (const char* desc : {"Z/6", "GF(3)", "GF(4)"}) {
        auto ring = ring_parse(desc);
        GroupSpec sl{GroupKind::SpecialLinear, std::nullopt};
        auto gens = group_elements(ring, 2, sl, kBudget);
        auto part = orbit_enumerate(ring, 2, sl, std::nullopt, kBudget);

        std::set<std::string> all;
        std::size_t total = 0;
        for (const Orbit& orbit : part.orbits) {
            total += orbit.rows.size();
            std::set<std::string> members;
            for (const auto& row : orbit.rows) {
                all.insert(encode_row(row));
                members.insert(encode_row(row));
            }
            for (const auto& row : orbit.rows)
                for (const MatrixExact& g : gens)
                    CHECK(members.count(encode_row(row_times(row, g))) == 1);
        }
        CHECK(total == part.universe_size);
        CHECK(all.size() == total);

        auto universe = enumerate_unimodular_rows(ring, 2, kBudget);
        CHECK(universe.size() == total);
    }
}

TEST_CASE("budget and precondition errors") {
    auto big = ring_parse("Z/1009");
    GroupSpec el{GroupKind::Elementary, std::nullopt};
    CHECK_THROWS_AS(orbit_enumerate(big, 3, el, std::nullopt, kBudget),
                    std::domain_error);

    auto f3 = ring_parse("GF(3)");
    GroupSpec sp{GroupKind::Symplectic, standard_symplectic(f3, 2)};
    CHECK_THROWS_AS(orbit_enumerate(f3, 3, sp, std::nullopt, kBudget),
                    std::invalid_argument);

    auto f17 = ring_parse("GF(17)");
    GroupSpec sl{GroupKind::SpecialLinear, std::nullopt};
    CHECK_THROWS_AS(group_elements(f17, 2, sl, kBudget),
                    std::invalid_argument);
}

TEST_CASE("symplectic orbit enumeration matches SL at rank 2") {
    auto f3 = ring_parse("GF(3)");
    GroupSpec sp{GroupKind::Symplectic, standard_symplectic(f3, 2)};
    GroupSpec sl{GroupKind::SpecialLinear, std::nullopt};
    auto a = orbit_enumerate(f3, 2, sp, std::nullopt, kBudget);
    auto b = orbit_enumerate(f3, 2, sl, std::nullopt, kBudget);
    REQUIRE(a.orbits.size() == b.orbits.size());
    for (std::size_t i = 0; i < a.orbits.size(); ++i)
        CHECK(a.orbits[i].rows == b.orbits[i].rows);
}

TEST_CASE("elementary symplectic generator pool") {
    auto f2 = ring_parse("GF(2)");
    auto psi2 = standard_symplectic(f2, 2);
    auto pool2 = elementary_symplectic_generators(psi2, 1);
    bool found_e12 = false;
    for (const auto& g : pool2) {
        CHECK(is_symplectic(g.matrix, psi2));
        CHECK(g.certificate.eval() == g.matrix);
        if (g.matrix == MatrixExact::elementary(f2, 2, 0, 1, f2->one()))
            found_e12 = true;
    }
    CHECK(found_e12);

    auto f3 = ring_parse("GF(3)");
    auto psi2_3 = standard_symplectic(f3, 2);
    auto pool3 = elementary_symplectic_generators(psi2_3, 1);
    CHECK(pool3.size() == 4);  // E_12(1), E_12(2), E_21(1), E_21(2)

    auto psi4 = standard_symplectic(f2, 4);
    auto pool4 = elementary_symplectic_generators(psi4, 2);
    auto e13 = MatrixExact::elementary(f2, 4, 0, 2, f2->one());
    CHECK_FALSE(is_symplectic(e13, psi4));
    for (const auto& g : pool4) {
        CHECK(g.matrix != e13);
        CHECK(is_symplectic(g.matrix, psi4));
        CHECK(g.certificate.eval() == g.matrix);
    }
    CHECK(pool4.size() > 4);
}
