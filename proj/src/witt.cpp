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

#include "wittforge/witt.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace wittforge {

namespace {

[[noreturn]] void bad_input(const std::string& msg) {
    throw std::invalid_argument(msg);
}

}  // namespace

bool is_alternating(const MatrixExact& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m(j, i) != -m(i, j)) return false;
        }
    }
    return true;
}

Element pfaffian(const MatrixExact& m) {
    if (!is_alternating(m))
        bad_input("pfaffian: matrix is not alternating");
    const std::size_t n = m.rows();
    if (n % 2 != 0) bad_input("pfaffian: rank must be even");
    if (n == 0) return m.ring()->one();
    if (n > 32) bad_input("pfaffian: rank exceeds the supported bound of 32");

    const RingHandle& ring = m.ring();
    std::unordered_map<std::uint64_t, Element> memo;

    // Expansion along the least remaining index: for the sorted subset
    // {s_1 < ... < s_2k}, Pf = sum_{p=2}^{2k} (-1)^p a(s_1, s_p) Pf(rest).
    std::function<Element(std::uint64_t)> pf = [&](std::uint64_t mask) -> Element {
        if (mask == 0) return ring->one();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t first = 0;
        while (((mask >> first) & 1u) == 0) ++first;
        Element acc = ring->zero();
        std::size_t pos = 1;
        for (std::size_t j = first + 1; j < n; ++j) {
            if (((mask >> j) & 1u) == 0) continue;
            ++pos;
            if (!m(first, j).is_zero()) {
                std::uint64_t rest =
                    mask & ~(std::uint64_t(1) << first) & ~(std::uint64_t(1) << j);
                Element term = m(first, j) * pf(rest);
                acc = (pos % 2 == 0) ? acc + term : acc - term;
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };

    std::uint64_t full =
        n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    return pf(full);
}

AlternatingMatrix AlternatingMatrix::checked(MatrixExact m) {
    if (!m.square() || m.rows() % 2 != 0)
        bad_input("alternating matrix: rank must be even");
    if (!is_alternating(m))
        bad_input("alternating matrix: need m^t = -m with zero diagonal");
    if (!m.det().is_unit())
        bad_input("alternating matrix: determinant is not a unit");
    return {std::move(m), unchecked_tag{}};
}

AlternatingMatrix AlternatingMatrix::empty(const RingHandle& ring) {
    return {MatrixExact::zeros(ring, 0, 0), unchecked_tag{}};
}

AlternatingMatrix standard_symplectic_any(const RingHandle& ring,
                                          std::size_t rank) {
    if (rank % 2 != 0)
        bad_input("standard symplectic form: rank must be even");
    MatrixExact m = MatrixExact::zeros(ring, rank, rank);
    std::vector<Element> e;
    e.reserve(rank * rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            if (i % 2 == 0 && j == i + 1)
                e.push_back(ring->one());
            else if (i % 2 == 1 && j == i - 1)
                e.push_back(-ring->one());
            else
                e.push_back(ring->zero());
        }
    return {MatrixExact(ring, rank, rank, std::move(e)),
            AlternatingMatrix::unchecked_tag{}};
}

AlternatingMatrix standard_symplectic(const RingHandle& ring,
                                      std::size_t rank) {
    if (rank == 0 || rank % 2 != 0)
        bad_input("standard symplectic form: rank must be even and positive");
    return standard_symplectic_any(ring, rank);
}

MatrixExact pair_swap(const RingHandle& ring, std::size_t rank) {
    if (rank == 0 || rank % 2 != 0)
        bad_input("pair swap form: rank must be even and positive");
    std::vector<Element> e;
    e.reserve(rank * rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            bool hit = (i % 2 == 0 && j == i + 1) || (i % 2 == 1 && j == i - 1);
            e.push_back(hit ? ring->one() : ring->zero());
        }
    return {ring, rank, rank, std::move(e)};
}

AlternatingMatrix orthogonal_sum(const AlternatingMatrix& a,
                                 const AlternatingMatrix& b) {
    if (!same_ring(*a.ring(), *b.ring()))
        bad_input("orthogonal_sum: ring mismatch");
    return {MatrixExact::block_diag(a.matrix(), b.matrix()),
            AlternatingMatrix::unchecked_tag{}};
}

AlternatingMatrix hyperbolic(const MatrixExact& g) {
    if (!g.square() || g.rows() % 2 != 0)
        bad_input("hyperbolic: matrix rank must be even");
    if (!g.invertible())
        bad_input("hyperbolic: matrix is not invertible");
    AlternatingMatrix psi = standard_symplectic_any(g.ring(), g.rows());
    return AlternatingMatrix::checked(g.transpose() * psi.matrix() * g);
}

AlternatingMatrix witt_inverse(const AlternatingMatrix& n) {
    if (n.rank() == 0) return n;
    MatrixExact sigma = pair_swap(n.ring(), n.rank());
    return AlternatingMatrix::checked(sigma * n.matrix().inverse() * sigma);
}

bool check_witt_equivalence(const AlternatingMatrix& m,
                            const AlternatingMatrix& n, std::size_t s,
                            const ElementaryFactorization& cert) {
    if (!same_ring(*m.ring(), *n.ring()) ||
        !same_ring(*m.ring(), *cert.ring()))
        bad_input("check_witt_equivalence: ring mismatch");
    const std::size_t total = m.rank() + n.rank() + 2 * s;
    if (cert.size() != total)
        bad_input("check_witt_equivalence: certificate size must be "
                  "rank(M) + rank(N) + 2s");
    MatrixExact lhs = MatrixExact::block_diag(
        m.matrix(),
        standard_symplectic_any(m.ring(), n.rank() + 2 * s).matrix());
    MatrixExact stabilized_n = MatrixExact::block_diag(
        n.matrix(),
        standard_symplectic_any(n.ring(), m.rank() + 2 * s).matrix());
    MatrixExact e = cert.eval();
    return lhs == e.transpose() * stabilized_n * e;
}

PfaffianClass pfaffian_class(const WittRepresentative& w) {
    Element value = w.matrix.pfaffian_value();
    return {value, value.is_one()};
}

}  // namespace wittforge
