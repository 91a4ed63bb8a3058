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
 * @file witt.hpp
 * @brief Invertible alternating matrices and the elementary symplectic Witt
 *        machinery built on them: standard forms, Pfaffians, orthogonal
 *        sums, the hyperbolic map, class inverses and certificate-checked
 *        stable equivalence.
 *
 * Alternating means skew-symmetric with an exactly zero diagonal; the two
 * notions differ in characteristic 2 and the Witt theory needs the former.
 */

#pragma once

#include "wittforge/matrix.hpp"

namespace wittforge {

bool is_alternating(const MatrixExact& m);

/// Pfaffian by expansion along the first row with subset memoization;
/// division-free, valid over any commutative ring. Requires an alternating
/// matrix of even rank (invertibility is not required). Sign convention:
/// Pf([[0,1],[-1,0]]) = 1 and Pf([[0,t],[-t,0]]) = t.
Element pfaffian(const MatrixExact& m);

/// Invertible alternating matrix of even rank; carrier of Witt-class
/// representatives. Construction validates both properties exactly.
class AlternatingMatrix {
public:
    static AlternatingMatrix checked(MatrixExact m);
    static AlternatingMatrix empty(const RingHandle& ring);

    const MatrixExact& matrix() const { return m_; }
    const RingHandle& ring() const { return m_.ring(); }
    std::size_t rank() const { return m_.rows(); }
    Element pfaffian_value() const { return pfaffian(m_); }

    bool operator==(const AlternatingMatrix& other) const {
        return m_ == other.m_;
    }

private:
    struct unchecked_tag {};
    AlternatingMatrix(MatrixExact m, unchecked_tag) : m_(std::move(m)) {}
    MatrixExact m_;

    friend AlternatingMatrix orthogonal_sum(const AlternatingMatrix&,
                                            const AlternatingMatrix&);
    friend AlternatingMatrix standard_symplectic_any(const RingHandle&,
                                                     std::size_t);
};

/// The standard form built from [[0,1],[-1,0]] blocks; rank must be even
/// and positive.
AlternatingMatrix standard_symplectic(const RingHandle& ring,
                                      std::size_t rank);

/// Same recursion but admits rank 0 (the neutral representative).
AlternatingMatrix standard_symplectic_any(const RingHandle& ring,
                                          std::size_t rank);

/// Orthogonal sum of [[0,1],[1,0]] blocks; conjugation by it realizes
/// Witt-class inversion. Rank must be even and positive.
MatrixExact pair_swap(const RingHandle& ring, std::size_t rank);

/// Block-diagonal sum; ranks add. Both arguments must share a ring.
AlternatingMatrix orthogonal_sum(const AlternatingMatrix& a,
                                 const AlternatingMatrix& b);

/// The hyperbolic map: g -> g^t psi g for invertible g of even rank.
AlternatingMatrix hyperbolic(const MatrixExact& g);

/// Witt-class inverse at the representative level: sigma * n^-1 * sigma.
AlternatingMatrix witt_inverse(const AlternatingMatrix& n);

/// Checks the stable-equivalence identity
///   M | psi_{2n+2s} = E^t (N | psi_{2m+2s}) E
/// exactly, where 2m = rank(M), 2n = rank(N) and E is the evaluated
/// certificate. The certificate size must equal 2m+2n+2s.
bool check_witt_equivalence(const AlternatingMatrix& m,
                            const AlternatingMatrix& n, std::size_t s,
                            const ElementaryFactorization& cert);

/// A Witt-class representative: the matrix together with its declared rank.
struct WittRepresentative {
    AlternatingMatrix matrix;
    std::size_t rank() const { return matrix.rank(); }
};

struct PfaffianClass {
    Element value;
    bool in_kernel;  // value == 1, membership in the Pfaffian kernel
};

PfaffianClass pfaffian_class(const WittRepresentative& w);

}  // namespace wittforge
