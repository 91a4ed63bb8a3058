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

#include "wittforge/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace wittforge {

namespace {

[[noreturn]] void bad_input(const std::string& msg) {
    throw std::invalid_argument(msg);
}

}  // namespace

MatrixExact::MatrixExact(RingHandle ring, std::size_t rows, std::size_t cols,
                         std::vector<Element> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        bad_input("matrix: entry count does not match dimensions");
    for (const Element& e : entries_) {
        if (e.ring().get() != ring_.get() && !same_ring(*e.ring(), *ring_))
            bad_input("matrix: entry ring mismatch");
    }
}

MatrixExact MatrixExact::identity(const RingHandle& ring, std::size_t n) {
    std::vector<Element> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e.push_back(i == j ? ring->one() : ring->zero());
    return {ring, n, n, std::move(e)};
}

MatrixExact MatrixExact::zeros(const RingHandle& ring, std::size_t rows,
                               std::size_t cols) {
    return {ring, rows, cols, std::vector<Element>(rows * cols, ring->zero())};
}

MatrixExact MatrixExact::from_rows(
    const RingHandle& ring, const std::vector<std::vector<Element>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    std::vector<Element> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) bad_input("matrix: ragged rows");
        for (const Element& x : row) e.push_back(x);
    }
    return {ring, r, c, std::move(e)};
}

MatrixExact MatrixExact::diagonal(const RingHandle& ring,
                                  const std::vector<Element>& diag) {
    std::size_t n = diag.size();
    std::vector<Element> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e.push_back(i == j ? diag[i] : ring->zero());
    return {ring, n, n, std::move(e)};
}

MatrixExact MatrixExact::elementary(const RingHandle& ring, std::size_t n,
                                    std::size_t i, std::size_t j,
                                    const Element& lambda) {
    if (i == j || i >= n || j >= n)
        bad_input("elementary matrix: need i != j within range");
    std::vector<Element> e;
    e.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c)
                e.push_back(ring->one());
            else if (r == i && c == j)
                e.push_back(lambda);
            else
                e.push_back(ring->zero());
        }
    return {ring, n, n, std::move(e)};
}

MatrixExact MatrixExact::block_diag(const MatrixExact& a, const MatrixExact& b) {
    if (!same_ring(*a.ring(), *b.ring()))
        bad_input("block_diag: ring mismatch");
    std::size_t r = a.rows() + b.rows();
    std::size_t c = a.cols() + b.cols();
    std::vector<Element> e(r * c, a.ring()->zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            e[i * c + j] = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            e[(a.rows() + i) * c + (a.cols() + j)] = b(i, j);
    return {a.ring(), r, c, std::move(e)};
}

std::vector<Element> MatrixExact::row(std::size_t i) const {
    std::vector<Element> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
    return out;
}

std::vector<Element> MatrixExact::col(std::size_t j) const {
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

MatrixExact MatrixExact::top_left(std::size_t k) const {
    if (k > rows_ || k > cols_) bad_input("top_left: block too large");
    std::vector<Element> e;
    e.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) e.push_back((*this)(i, j));
    return {ring_, k, k, std::move(e)};
}

MatrixExact MatrixExact::transpose() const {
    std::vector<Element> e;
    e.reserve(rows_ * cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) e.push_back((*this)(i, j));
    return {ring_, cols_, rows_, std::move(e)};
}

MatrixExact MatrixExact::negate() const {
    std::vector<Element> e;
    e.reserve(entries_.size());
    for (const Element& x : entries_) e.push_back(-x);
    return {ring_, rows_, cols_, std::move(e)};
}

MatrixExact MatrixExact::operator+(const MatrixExact& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        bad_input("matrix addition: dimension mismatch");
    std::vector<Element> e;
    e.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        e.push_back(entries_[i] + other.entries_[i]);
    return {ring_, rows_, cols_, std::move(e)};
}

MatrixExact MatrixExact::operator*(const MatrixExact& other) const {
    if (cols_ != other.rows_)
        bad_input("matrix product: dimension mismatch");
    std::vector<Element> e(rows_ * other.cols_, ring_->zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Element& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Element& bkj = other(k, j);
                if (bkj.is_zero()) continue;
                e[i * other.cols_ + j] = e[i * other.cols_ + j] + aik * bkj;
            }
        }
    }
    return {ring_, rows_, other.cols_, std::move(e)};
}

bool MatrixExact::operator==(const MatrixExact& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (!same_ring(*ring_, *other.ring_)) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != other.entries_[i]) return false;
    return true;
}

bool MatrixExact::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j && !(*this)(i, j).is_one()) return false;
            if (i != j && !(*this)(i, j).is_zero()) return false;
        }
    return true;
}

std::vector<Element> MatrixExact::char_poly() const {
    if (!square()) bad_input("char_poly: matrix must be square");
    const std::size_t n = rows_;
    std::vector<Element> c{ring_->one()};
    if (n == 0) return c;
    c.push_back(-(*this)(0, 0));
    for (std::size_t k = 1; k < n; ++k) {
        // Toeplitz coefficients for the (k+1)-st leading block.
        std::vector<Element> t{ring_->one(), -(*this)(k, k)};
        std::vector<Element> v = col(k);
        v.resize(k, ring_->zero());  // rows 0..k-1 of column k
        v = std::vector<Element>(v.begin(), v.begin() + k);
        for (std::size_t j = 2; j <= k + 1; ++j) {
            Element s = ring_->zero();
            for (std::size_t i = 0; i < k; ++i) s = s + (*this)(k, i) * v[i];
            t.push_back(-s);
            if (j <= k) {
                std::vector<Element> w(k, ring_->zero());
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t l = 0; l < k; ++l)
                        w[i] = w[i] + (*this)(i, l) * v[l];
                v = std::move(w);
            }
        }
        std::vector<Element> cn;
        cn.reserve(k + 2);
        for (std::size_t m = 0; m <= k + 1; ++m) {
            Element s = ring_->zero();
            for (std::size_t l = 0; l <= m && l <= k + 1; ++l) {
                if (m - l < c.size() && !t[l].is_zero())
                    s = s + t[l] * c[m - l];
            }
            cn.push_back(std::move(s));
        }
        c = std::move(cn);
    }
    return c;
}

Element MatrixExact::det() const {
    if (!square()) bad_input("det: matrix must be square");
    if (rows_ == 0) return ring_->one();
    std::vector<Element> c = char_poly();
    Element d = c[rows_];
    return rows_ % 2 == 0 ? d : -d;
}

MatrixExact MatrixExact::adjugate() const {
    if (!square()) bad_input("adjugate: matrix must be square");
    const std::size_t n = rows_;
    if (n == 0) return *this;
    std::vector<Element> c = char_poly();
    MatrixExact x = identity(ring_, n);
    for (std::size_t k = 1; k < n; ++k) {
        x = *this * x;
        std::vector<Element> e;
        e.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                e.push_back(i == j ? x(i, j) + c[k] : x(i, j));
        x = MatrixExact(ring_, n, n, std::move(e));
    }
    return (n - 1) % 2 == 0 ? x : x.negate();
}

MatrixExact MatrixExact::inverse() const {
    Element d = det();
    auto dinv = d.inverse();
    if (!dinv)
        throw std::domain_error(
            "inverse: determinant is not a unit over " + ring_->descriptor());
    MatrixExact adj = adjugate();
    std::vector<Element> e;
    e.reserve(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e.push_back(adj(i, j) * *dinv);
    return {ring_, rows_, cols_, std::move(e)};
}

bool MatrixExact::invertible() const {
    return square() && det().is_unit();
}

std::vector<Element> row_times(const std::vector<Element>& v,
                               const MatrixExact& m) {
    if (v.size() != m.rows()) bad_input("row_times: dimension mismatch");
    std::vector<Element> out(m.cols(), m.ring()->zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = out[j] + v[i] * m(i, j);
    }
    return out;
}

std::vector<Element> times_col(const MatrixExact& m,
                               const std::vector<Element>& v) {
    if (v.size() != m.cols()) bad_input("times_col: dimension mismatch");
    std::vector<Element> out(m.rows(), m.ring()->zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j].is_zero()) out[i] = out[i] + m(i, j) * v[j];
        }
    return out;
}

ElementaryFactorization::ElementaryFactorization(
    RingHandle ring, std::size_t size, std::vector<ElementaryStep> steps)
    : ring_(std::move(ring)), size_(size), steps_(std::move(steps)) {
    for (const ElementaryStep& s : steps_) {
        if (s.row == s.col || s.row >= size_ || s.col >= size_)
            bad_input("elementary factorization: step indices out of range");
        if (!same_ring(*s.scalar.ring(), *ring_))
            bad_input("elementary factorization: scalar ring mismatch");
    }
}

ElementaryFactorization ElementaryFactorization::identity(
    const RingHandle& ring, std::size_t size) {
    return {ring, size, {}};
}

MatrixExact ElementaryFactorization::eval() const {
    MatrixExact m = MatrixExact::identity(ring_, size_);
    std::vector<Element> e;
    e.reserve(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) e.push_back(m(i, j));
    // Right-multiplying by Id + lambda e_{ij} adds lambda * column i to
    // column j.
    for (const ElementaryStep& s : steps_) {
        for (std::size_t r = 0; r < size_; ++r) {
            e[r * size_ + s.col] =
                e[r * size_ + s.col] + e[r * size_ + s.row] * s.scalar;
        }
    }
    return {ring_, size_, size_, std::move(e)};
}

ElementaryFactorization ElementaryFactorization::inverse() const {
    std::vector<ElementaryStep> out;
    out.reserve(steps_.size());
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
        out.push_back({it->row, it->col, -it->scalar});
    return {ring_, size_, std::move(out)};
}

ElementaryFactorization ElementaryFactorization::embedded(
    std::size_t new_size, std::size_t offset) const {
    if (new_size < size_ + offset)
        bad_input("embedded: target size too small");
    std::vector<ElementaryStep> out;
    out.reserve(steps_.size());
    for (const ElementaryStep& s : steps_)
        out.push_back({s.row + offset, s.col + offset, s.scalar});
    return {ring_, new_size, std::move(out)};
}

ElementaryFactorization ElementaryFactorization::concat(
    const ElementaryFactorization& a, const ElementaryFactorization& b) {
    if (a.size_ != b.size_ || !same_ring(*a.ring_, *b.ring_))
        bad_input("concat: factorization size or ring mismatch");
    std::vector<ElementaryStep> out = a.steps_;
    out.insert(out.end(), b.steps_.begin(), b.steps_.end());
    return {a.ring_, a.size_, std::move(out)};
}

ElementaryFactorization whitehead_factorization(const MatrixExact& a) {
    if (!a.square()) bad_input("whitehead_factorization: matrix must be square");
    const std::size_t n = a.rows();
    const RingHandle& ring = a.ring();
    MatrixExact ainv = a.inverse();  // throws when det is not a unit
    std::vector<ElementaryStep> steps;
    auto push_block = [&](const MatrixExact& blk, bool upper) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (blk(i, j).is_zero()) continue;
                if (upper)
                    steps.push_back({i, n + j, blk(i, j)});
                else
                    steps.push_back({n + i, j, blk(i, j)});
            }
    };
    push_block(a, true);
    push_block(ainv.negate(), false);
    push_block(a, true);
    Element one = ring->one();
    Element neg_one = -one;
    for (std::size_t k = 0; k < n; ++k) {
        steps.push_back({k, n + k, neg_one});
        steps.push_back({n + k, k, one});
        steps.push_back({k, n + k, neg_one});
    }
    return {ring, 2 * n, std::move(steps)};
}

ElementaryFactorization block_swap_factorization(const RingHandle& ring,
                                                 std::size_t r, std::size_t s) {
    if (r == 0 || s == 0)
        bad_input("block_swap_factorization: r and s must be positive");
    if ((r * s) % 2 != 0)
        bad_input("block_swap_factorization: r*s odd gives determinant -1, "
                  "not in SL");
    const std::size_t n = r + s;
    // Target column action: e_j -> e_{s+j} for j < r, e_{r+k} -> e_k for
    // k < s. Reduce to the identity by left rotations and emit the inverse
    // rotations, each as three elementary steps.
    std::vector<std::size_t> perm(n);
    std::vector<int> sign(n, 1);
    for (std::size_t j = 0; j < r; ++j) perm[j] = s + j;
    for (std::size_t k = 0; k < s; ++k) perm[r + k] = k;

    std::vector<std::pair<std::size_t, std::size_t>> rotations;
    auto apply_rotation = [&](std::size_t a, std::size_t b) {
        // rho_{a,b}: e_a -> -e_b, e_b -> e_a, applied on the left.
        for (std::size_t j = 0; j < n; ++j) {
            if (perm[j] == a) {
                perm[j] = b;
                sign[j] = -sign[j];
            } else if (perm[j] == b) {
                perm[j] = a;
            }
        }
        rotations.emplace_back(a, b);
    };

    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = perm[j];
        if (i == j && sign[j] == 1) continue;
        if (i != j) {
            if (sign[j] == 1)
                apply_rotation(j, i);
            else
                apply_rotation(i, j);
        } else {
            apply_rotation(j, j + 1);
            apply_rotation(j, j + 1);
        }
    }

    Element one = ring->one();
    Element neg_one = -one;
    std::vector<ElementaryStep> steps;
    steps.reserve(rotations.size() * 3);
    for (const auto& [a, b] : rotations) {
        steps.push_back({a, b, neg_one});
        steps.push_back({b, a, one});
        steps.push_back({a, b, neg_one});
    }
    return {ring, n, std::move(steps)};
}

}  // namespace wittforge
