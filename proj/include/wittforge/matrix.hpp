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
 * @file matrix.hpp
 * @brief Dense exact matrices over any Ring: division-free determinants
 *        (Berkowitz), adjugate inverses, elementary matrices and
 *        elementary-factorization certificates.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "wittforge/ring.hpp"

namespace wittforge {

/// Immutable dense matrix of ring elements, row major.
class MatrixExact {
public:
    MatrixExact(RingHandle ring, std::size_t rows, std::size_t cols,
                std::vector<Element> entries);

    static MatrixExact identity(const RingHandle& ring, std::size_t n);
    static MatrixExact zeros(const RingHandle& ring, std::size_t rows,
                             std::size_t cols);
    static MatrixExact from_rows(const RingHandle& ring,
                                 const std::vector<std::vector<Element>>& rows);
    static MatrixExact diagonal(const RingHandle& ring,
                                const std::vector<Element>& diag);
    /// Id + lambda in slot (i, j), i != j, zero-based.
    static MatrixExact elementary(const RingHandle& ring, std::size_t n,
                                  std::size_t i, std::size_t j,
                                  const Element& lambda);
    static MatrixExact block_diag(const MatrixExact& a, const MatrixExact& b);

    const RingHandle& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Element& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::vector<Element> row(std::size_t i) const;
    std::vector<Element> col(std::size_t j) const;
    /// Upper-left k-by-k block.
    MatrixExact top_left(std::size_t k) const;

    MatrixExact transpose() const;
    MatrixExact negate() const;
    MatrixExact operator+(const MatrixExact& other) const;
    MatrixExact operator*(const MatrixExact& other) const;
    bool operator==(const MatrixExact& other) const;
    bool operator!=(const MatrixExact& other) const { return !(*this == other); }

    bool is_identity() const;

    /// Characteristic polynomial coefficients c_0..c_n (c_0 = 1) by the
    /// Berkowitz algorithm; division-free, valid over any commutative ring.
    std::vector<Element> char_poly() const;

    /// Determinant, division-free. Throws std::invalid_argument when not
    /// square.
    Element det() const;

    /// Classical adjugate, computed from the characteristic polynomial.
    MatrixExact adjugate() const;

    /// Adjugate inverse: adj(M) * det(M)^-1. Throws std::domain_error when
    /// the determinant is not a unit.
    MatrixExact inverse() const;

    bool invertible() const;

private:
    RingHandle ring_;
    std::size_t rows_, cols_;
    std::vector<Element> entries_;
};

/// Row vector times matrix.
std::vector<Element> row_times(const std::vector<Element>& v,
                               const MatrixExact& m);
/// Matrix times column vector.
std::vector<Element> times_col(const MatrixExact& m,
                               const std::vector<Element>& v);

/// One elementary row operation record: Id + scalar in slot (row, col),
/// zero-based, row != col.
struct ElementaryStep {
    std::size_t row;
    std::size_t col;
    Element scalar;
};

/// Ordered list of elementary steps whose product certifies membership in
/// E_n(R). Evaluation multiplies the steps left to right.
class ElementaryFactorization {
public:
    ElementaryFactorization(RingHandle ring, std::size_t size,
                            std::vector<ElementaryStep> steps);

    static ElementaryFactorization identity(const RingHandle& ring,
                                            std::size_t size);

    const RingHandle& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    const std::vector<ElementaryStep>& steps() const { return steps_; }

    MatrixExact eval() const;

    /// Reversed steps with negated scalars.
    ElementaryFactorization inverse() const;

    /// Same steps inside a larger identity, indices shifted by offset.
    ElementaryFactorization embedded(std::size_t new_size,
                                     std::size_t offset = 0) const;

    static ElementaryFactorization concat(const ElementaryFactorization& a,
                                          const ElementaryFactorization& b);

private:
    RingHandle ring_;
    std::size_t size_;
    std::vector<ElementaryStep> steps_;
};

/// Factorization of size 2n evaluating exactly to A | A^-1 (block diagonal)
/// for an invertible n-by-n matrix A, via the block identity
/// [[A,0],[0,A^-1]] = [[1,A],[0,1]] [[1,0],[-A^-1,1]] [[1,A],[0,1]] [[0,-1],[1,0]]
/// with the final signed swap expanded blockwise into three-step rotations.
ElementaryFactorization whitehead_factorization(const MatrixExact& a);

/// Factorization of size r+s evaluating exactly to the block matrix with
/// id_s upper right and id_r lower left. Requires r*s even (the matrix has
/// determinant -1 otherwise).
ElementaryFactorization block_swap_factorization(const RingHandle& ring,
                                                 std::size_t r, std::size_t s);

}  // namespace wittforge
