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
#include "wittforge/witt.hpp"

using namespace wittforge;

namespace {

MatrixExact random_alternating(const RingHandle& ring, std::size_t rank,
                               Rng& rng) {
    std::vector<Element> e(rank * rank, ring->zero());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) {
            Element v = ring->sample(rng);
            e[i * rank + j] = v;
            e[j * rank + i] = -v;
        }
    return {ring, rank, rank, std::move(e)};
}

MatrixExact random_invertible(const RingHandle& ring, std::size_t n, Rng& rng) {
    std::vector<Element> diag;
    for (std::size_t i = 0; i < n; ++i) {
        Element u = ring->sample(rng);
        while (!u.is_unit()) u = ring->sample(rng);
        diag.push_back(u);
    }
    MatrixExact m = MatrixExact::diagonal(ring, diag);
    for (std::size_t k = 0; k < 2 * n + 2; ++k) {
        std::size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        m = m * MatrixExact::elementary(ring, n, i, j, ring->sample(rng));
    }
    return m;
}

AlternatingMatrix random_invertible_alternating(const RingHandle& ring,
                                                std::size_t rank, Rng& rng) {
    MatrixExact g = random_invertible(ring, rank, rng);
    AlternatingMatrix psi = standard_symplectic_any(ring, rank);
    return AlternatingMatrix::checked(g.transpose() * psi.matrix() * g);
}

}  // namespace

TEST_CASE("standard forms") {
    auto z = ring_parse("Z");
    auto psi2 = standard_symplectic(z, 2);
    CHECK(psi2.matrix()(0, 1) == z->one());
    CHECK(psi2.matrix()(1, 0) == z->from_int(-1));
    CHECK(psi2.matrix()(0, 0).is_zero());

    auto psi4 = standard_symplectic(z, 4);
    CHECK(psi4 == orthogonal_sum(psi2, psi2));

    CHECK_THROWS_AS(standard_symplectic(z, 3), std::invalid_argument);
    CHECK_THROWS_AS(standard_symplectic(z, 0), std::invalid_argument);

    auto sigma2 = pair_swap(z, 2);
    CHECK(sigma2(0, 1) == z->one());
    CHECK(sigma2(1, 0) == z->one());
    CHECK(pair_swap(z, 4) ==
          MatrixExact::block_diag(sigma2, sigma2));
    CHECK(pair_swap(z, 4).det() == z->one());
    CHECK(sigma2.det() == z->from_int(-1));
}

TEST_CASE("pfaffian basics") {
    auto z = ring_parse("Z");
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(standard_symplectic(z, 2 * n).pfaffian_value() == z->one());
    }
    MatrixExact split(z, 2, 2,
                      {z->zero(), z->from_int(5), z->from_int(-5), z->zero()});
    CHECK(pfaffian(split) == z->from_int(5));

    CHECK(pfaffian(MatrixExact::zeros(z, 0, 0)) == z->one());
    CHECK_THROWS_AS(pfaffian(MatrixExact::identity(z, 2)),
                    std::invalid_argument);
    // Alternating of odd rank is rejected.
    CHECK_THROWS_AS(pfaffian(MatrixExact::zeros(z, 3, 3)),
                    std::invalid_argument);
    // Skew-symmetric but with nonzero diagonal over Z/2 is not alternating.
    auto z2 = ring_parse("Z/2");
    MatrixExact skew(z2, 2, 2,
                     {z2->one(), z2->one(), z2->one(), z2->one()});
    CHECK_THROWS_AS(pfaffian(skew), std::invalid_argument);
}

TEST_CASE("pfaffian agrees with the perfect-matching oracle") {
    Rng rng(71);
    for (const char* desc : {"Z", "GF(7)", "Z/6"}) {
        auto ring = ring_parse(desc);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rank = 2 * (1 + rng.below(3));
            MatrixExact m = random_alternating(ring, rank, rng);
            CHECK(pfaffian(m) == oracles::matchings_pfaffian(m));
        }
    }
}

TEST_CASE("pfaffian transforms by the determinant") {
    Rng rng(72);
    auto f7 = ring_parse("GF(7)");
    auto psi4 = standard_symplectic(f7, 4);
    for (int trial = 0; trial < 25; ++trial) {
        MatrixExact g = random_invertible(f7, 4, rng);
        MatrixExact h = g.transpose() * psi4.matrix() * g;
        CHECK(pfaffian(h) == oracles::laplace_det(g));
    }
}

TEST_CASE("orthogonal sum and pfaffian multiplicativity") {
    auto z = ring_parse("Z");
    auto psi2 = standard_symplectic(z, 2);
    CHECK(orthogonal_sum(psi2, AlternatingMatrix::empty(z)) == psi2);
    CHECK(orthogonal_sum(AlternatingMatrix::empty(z), psi2) == psi2);

    Rng rng(73);
    for (const char* desc : {"Z", "GF(7)", "Z/6"}) {
        auto ring = ring_parse(desc);
        for (int trial = 0; trial < 25; ++trial) {
            MatrixExact a = random_alternating(ring, 2 + 2 * rng.below(2), rng);
            MatrixExact b = random_alternating(ring, 2 + 2 * rng.below(2), rng);
            CHECK(pfaffian(MatrixExact::block_diag(a, b)) ==
                  pfaffian(a) * pfaffian(b));
        }
    }
}

TEST_CASE("hyperbolic map") {
    auto z = ring_parse("Z");
    CHECK(hyperbolic(MatrixExact::identity(z, 4)) ==
          standard_symplectic(z, 4));

    auto e12 = MatrixExact::elementary(z, 2, 0, 1, z->one());
    auto h = hyperbolic(e12);
    CHECK(h.matrix() ==
          e12.transpose() * standard_symplectic(z, 2).matrix() * e12);
    ElementaryFactorization cert(z, 4, {{0, 1, z->one()}});
    CHECK(check_witt_equivalence(h, standard_symplectic(z, 2), 0, cert));

    auto f7 = ring_parse("GF(7)");
    auto d = MatrixExact::diagonal(
        f7, {f7->from_int(3), f7->from_int(5), f7->one(), f7->one()});
    CHECK(hyperbolic(d).pfaffian_value() == f7->one());  // det = 15 = 1 mod 7

    CHECK_THROWS_AS(hyperbolic(MatrixExact::identity(z, 3)),
                    std::invalid_argument);
    auto sing = MatrixExact::diagonal(z, {z->from_int(2), z->one()});
    CHECK_THROWS_AS(hyperbolic(sing), std::invalid_argument);
}

TEST_CASE("witt inverse") {
    auto z = ring_parse("Z");
    auto psi2 = standard_symplectic(z, 2);
    CHECK(witt_inverse(psi2) == psi2);
    auto psi4 = standard_symplectic(z, 4);
    CHECK(witt_inverse(psi4) == psi4);

    Rng rng(74);
    auto f7 = ring_parse("GF(7)");
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rank = 2 * (1 + rng.below(3));
        AlternatingMatrix n = random_invertible_alternating(f7, rank, rng);
        AlternatingMatrix w = witt_inverse(n);
        CHECK(is_alternating(w.matrix()));
        CHECK(witt_inverse(w) == n);
        CHECK((w.pfaffian_value() * n.pfaffian_value()).is_one());
    }
}

TEST_CASE("witt equivalence certificates") {
    auto z = ring_parse("Z");
    auto psi2 = standard_symplectic(z, 2);
    for (std::size_t s : {0u, 1u, 2u}) {
        auto cert = ElementaryFactorization::identity(z, 4 + 2 * s);
        CHECK(check_witt_equivalence(psi2, psi2, s, cert));
    }

    // Distinct Pfaffians can never be certified equivalent.
    auto f7 = ring_parse("GF(7)");
    auto psi2_7 = standard_symplectic(f7, 2);
    MatrixExact split(f7, 2, 2,
                      {f7->zero(), f7->from_int(5), f7->from_int(-5),
                       f7->zero()});
    auto m5 = AlternatingMatrix::checked(split);
    Rng rng(75);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<ElementaryStep> steps;
        for (int k = 0; k < 5; ++k) {
            std::size_t i = rng.below(4), j = rng.below(4);
            if (i == j) continue;
            steps.push_back({i, j, f7->sample(rng)});
        }
        ElementaryFactorization cert(f7, 4, steps);
        CHECK_FALSE(check_witt_equivalence(psi2_7, m5, 0, cert));
    }

    auto bad_size = ElementaryFactorization::identity(z, 5);
    CHECK_THROWS_AS(check_witt_equivalence(psi2, psi2, 0, bad_size),
                    std::invalid_argument);
}

TEST_CASE("pfaffian classes") {
    auto z = ring_parse("Z");
    auto cls = pfaffian_class({standard_symplectic(z, 6)});
    CHECK(cls.value.is_one());
    CHECK(cls.in_kernel);

    auto z9 = ring_parse("Z/9");
    MatrixExact split(z9, 2, 2,
                      {z9->zero(), z9->from_int(2), z9->from_int(-2),
                       z9->zero()});
    auto cls2 = pfaffian_class({AlternatingMatrix::checked(split)});
    CHECK(cls2.value == z9->from_int(2));
    CHECK_FALSE(cls2.in_kernel);

    Rng rng(76);
    auto f7 = ring_parse("GF(7)");
    for (int trial = 0; trial < 10; ++trial) {
        // Hyperbolic images of determinant-1 matrices land in the kernel.
        MatrixExact g = MatrixExact::identity(f7, 4);
        for (int k = 0; k < 6; ++k) {
            std::size_t i = rng.below(4), j = rng.below(4);
            if (i == j) continue;
            g = g * MatrixExact::elementary(f7, 4, i, j, f7->sample(rng));
        }
        CHECK(pfaffian_class({hyperbolic(g)}).in_kernel);
    }
}
