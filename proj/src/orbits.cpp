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

#include "wittforge/orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace wittforge {

namespace {

[[noreturn]] void bad_input(const std::string& msg) {
    throw std::invalid_argument(msg);
}

[[noreturn]] void budget_exceeded(const std::string& what) {
    throw std::domain_error("budget exceeded: " + what);
}

Int int_pow(const Int& base, std::size_t e) {
    Int r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Odometer over all length-n tuples of ring elements, deterministic order.
template <typename Fn>
void for_each_tuple(const std::vector<Element>& elems, std::size_t n, Fn&& fn) {
    std::vector<std::size_t> idx(n, 0);
    std::vector<Element> tuple;
    while (true) {
        tuple.clear();
        for (std::size_t i = 0; i < n; ++i) tuple.push_back(elems[idx[i]]);
        if (!fn(tuple)) return;
        std::size_t k = 0;
        while (k < n) {
            if (++idx[k] < elems.size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == n) return;
    }
}

}  // namespace

std::string encode_row(const std::vector<Element>& row) {
    std::string out;
    for (const Element& e : row) {
        out += e.str();
        out.push_back(',');
    }
    return out;
}

bool verify_section(const UnimodularRow& u) {
    if (!u.section) bad_input("verify_section: row carries no section");
    if (u.section->size() != u.coords.size())
        bad_input("verify_section: section length mismatch");
    return dot(u.coords, *u.section).is_one();
}

bool is_symplectic(const MatrixExact& g, const AlternatingMatrix& chi) {
    if (!g.square() || g.rows() != chi.rank())
        bad_input("is_symplectic: rank mismatch");
    return g.transpose() * chi.matrix() * g == chi.matrix();
}

UnimodularRow act(const UnimodularRow& u, const MatrixExact& g) {
    if (g.rows() != u.coords.size())
        bad_input("act: row length does not match the matrix rank");
    UnimodularRow out;
    out.coords = row_times(u.coords, g);
    if (u.section) {
        MatrixExact ginv = g.inverse();  // throws when g is not invertible
        out.section = times_col(ginv, *u.section);
    } else if (!g.invertible()) {
        throw std::domain_error("act: matrix is not invertible");
    }
    return out;
}

std::optional<std::vector<Element>> exhaustive_section(
    const std::vector<Element>& row, const Int& budget) {
    if (row.empty()) bad_input("exhaustive_section: empty row");
    const RingHandle& ring = row[0].ring();
    if (!ring->finite())
        bad_input("exhaustive_section: ring must be finite");
    if (int_pow(ring->cardinality(), row.size()) > budget)
        budget_exceeded("section search over " + ring->descriptor());
    std::vector<Element> elems = ring->enumerate();
    std::optional<std::vector<Element>> found;
    for_each_tuple(elems, row.size(), [&](const std::vector<Element>& b) {
        if (dot(row, b).is_one()) {
            found = b;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<std::vector<Element>> enumerate_unimodular_rows(
    const RingHandle& ring, std::size_t n, const Int& budget) {
    if (n == 0) bad_input("enumerate_unimodular_rows: n must be positive");
    if (!ring->finite())
        bad_input("enumerate_unimodular_rows: ring must be finite");
    if (int_pow(ring->cardinality(), n) > budget)
        budget_exceeded("row enumeration over " + ring->descriptor());
    std::vector<Element> elems = ring->enumerate();
    std::vector<std::vector<Element>> rows;
    for_each_tuple(elems, n, [&](const std::vector<Element>& row) {
        if (exhaustive_section(row, budget)) rows.push_back(row);
        return true;
    });
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) {
                  return encode_row(a) < encode_row(b);
              });
    return rows;
}

std::vector<MatrixExact> group_elements(const RingHandle& ring, std::size_t n,
                                        const GroupSpec& group,
                                        const Int& budget) {
    if (!ring->finite()) bad_input("group_elements: ring must be finite");
    std::vector<Element> elems = ring->enumerate();
    std::vector<MatrixExact> out;

    if (group.kind == GroupKind::Elementary) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                for (const Element& lam : elems) {
                    if (lam.is_zero()) continue;
                    out.push_back(
                        MatrixExact::elementary(ring, n, i, j, lam));
                }
            }
        return out;
    }

    if (n > 4) bad_input("group_elements: exhaustive search capped at rank 4");
    if (ring->cardinality() > 9)
        bad_input("group_elements: exhaustive search capped at cardinality 9");
    if (int_pow(ring->cardinality(), n * n) > budget)
        budget_exceeded("group search over " + ring->descriptor());

    if (group.kind == GroupKind::Symplectic) {
        if (!group.form)
            bad_input("group_elements: symplectic kind needs a form");
        if (group.form->rank() != n)
            bad_input("group_elements: form rank must equal n");
        if (!same_ring(*group.form->ring(), *ring))
            bad_input("group_elements: form ring mismatch");
    }

    const Element one = ring->one();
    for_each_tuple(elems, n * n, [&](const std::vector<Element>& flat) {
        MatrixExact g(ring, n, n, flat);
        if (group.kind == GroupKind::SpecialLinear) {
            if (g.det() == one) out.push_back(g);
        } else {
            if (g.transpose() * group.form->matrix() * g ==
                group.form->matrix())
                out.push_back(g);
        }
        return true;
    });
    return out;
}

OrbitPartition orbit_closure(const RingHandle& ring, std::size_t n,
                             const std::vector<MatrixExact>& generators,
                             const std::optional<UnimodularRow>& start,
                             const Int& budget) {
    for (const MatrixExact& g : generators) {
        if (!g.square() || g.rows() != n)
            bad_input("orbit_closure: generator rank mismatch");
    }

    std::vector<std::vector<Element>> seeds;
    std::unordered_map<std::string, bool> universe;
    if (start) {
        if (start->coords.size() != n)
            bad_input("orbit_closure: start row length mismatch");
        bool unimodular = start->section
                              ? verify_section(*start)
                              : exhaustive_section(start->coords, budget)
                                    .has_value();
        if (!unimodular)
            bad_input("orbit_closure: start row is not unimodular");
        seeds.push_back(start->coords);
    } else {
        seeds = enumerate_unimodular_rows(ring, n, budget);
        for (const auto& row : seeds) universe.emplace(encode_row(row), true);
    }

    OrbitPartition result;
    result.universe_size = start ? 1 : seeds.size();

    std::unordered_map<std::string, std::size_t> orbit_of;
    for (const auto& seed : seeds) {
        std::string key = encode_row(seed);
        if (orbit_of.count(key)) continue;
        std::size_t id = result.orbits.size();
        Orbit orbit;
        std::deque<std::vector<Element>> frontier;
        orbit_of.emplace(key, id);
        orbit.rows.push_back(seed);
        frontier.push_back(seed);
        while (!frontier.empty()) {
            std::vector<Element> row = std::move(frontier.front());
            frontier.pop_front();
            for (const MatrixExact& g : generators) {
                std::vector<Element> image = row_times(row, g);
                std::string ikey = encode_row(image);
                if (orbit_of.count(ikey)) continue;
                if (!start && !universe.count(ikey))
                    throw std::logic_error(
                        "orbit_closure: action left the unimodular universe");
                orbit_of.emplace(ikey, id);
                orbit.rows.push_back(image);
                frontier.push_back(std::move(image));
            }
        }
        std::sort(orbit.rows.begin(), orbit.rows.end(),
                  [](const auto& a, const auto& b) {
                      return encode_row(a) < encode_row(b);
                  });
        result.orbits.push_back(std::move(orbit));
    }
    return result;
}

OrbitPartition orbit_enumerate(const RingHandle& ring, std::size_t n,
                               const GroupSpec& group,
                               const std::optional<UnimodularRow>& start,
                               const Int& budget) {
    if (group.kind == GroupKind::Symplectic && n % 2 != 0)
        bad_input("orbit_enumerate: symplectic kind needs even n");
    std::vector<MatrixExact> gens = group_elements(ring, n, group, budget);
    return orbit_closure(ring, n, gens, start, budget);
}

std::vector<SymplecticGenerator> elementary_symplectic_generators(
    const AlternatingMatrix& chi, std::size_t depth, const Int& budget) {
    const RingHandle& ring = chi.ring();
    if (!ring->finite())
        bad_input("elementary_symplectic_generators: ring must be finite");
    const std::size_t n = chi.rank();
    if (n > 4)
        bad_input("elementary_symplectic_generators: rank capped at 4");
    if (ring->cardinality() > 9)
        bad_input("elementary_symplectic_generators: cardinality capped at 9");
    if (int_pow(ring->cardinality(), n * n) > budget)
        budget_exceeded("symplectic generator pool over " + ring->descriptor());

    std::vector<SymplecticGenerator> singles;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (const Element& lam : ring->enumerate()) {
                if (lam.is_zero()) continue;
                MatrixExact e = MatrixExact::elementary(ring, n, i, j, lam);
                if (is_symplectic(e, chi)) {
                    singles.push_back(
                        {e, ElementaryFactorization(ring, n, {{i, j, lam}})});
                }
            }
        }

    std::vector<SymplecticGenerator> pool = singles;
    std::map<std::string, bool> seen;
    auto matrix_key = [](const MatrixExact& m) {
        std::string k;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                k += m(i, j).str();
                k.push_back(',');
            }
        return k;
    };
    for (const auto& g : pool) seen.emplace(matrix_key(g.matrix), true);

    std::vector<SymplecticGenerator> layer = singles;
    for (std::size_t d = 2; d <= depth; ++d) {
        std::vector<SymplecticGenerator> next;
        for (const auto& g : layer)
            for (const auto& h : singles) {
                MatrixExact prod = g.matrix * h.matrix;
                std::string key = matrix_key(prod);
                if (seen.count(key)) continue;
                seen.emplace(key, true);
                next.push_back(
                    {prod, ElementaryFactorization::concat(g.certificate,
                                                           h.certificate)});
            }
        pool.insert(pool.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return pool;
}

}  // namespace wittforge
