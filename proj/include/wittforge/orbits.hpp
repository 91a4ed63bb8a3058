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
 * @file orbits.hpp
 * @brief Unimodular rows with sections, right group actions, symplectic
 *        membership, and exhaustive orbit enumeration over finite rings.
 *
 * Everything here runs at desk scale: group elements over finite rings are
 * found by filtered exhaustive search under explicit budgets, and rows are
 * declared unimodular iff an exhaustive section search succeeds.
 */

#pragma once

#include <optional>

#include "wittforge/witt.hpp"

namespace wittforge {

/// Row vector with an optional section witness b satisfying a . b^t = 1.
struct UnimodularRow {
    std::vector<Element> coords;
    std::optional<std::vector<Element>> section;
};

/// True iff the stored section satisfies a . b^t = 1 exactly.
/// Throws std::invalid_argument when no section is present.
bool verify_section(const UnimodularRow& u);

/// True iff g^t chi g = chi exactly.
bool is_symplectic(const MatrixExact& g, const AlternatingMatrix& chi);

/// Right action: the row becomes a*g; a stored section b transports to
/// g^-1 b, so the transported pair still verifies.
UnimodularRow act(const UnimodularRow& u, const MatrixExact& g);

enum class GroupKind { Elementary, SpecialLinear, Symplectic };

struct GroupSpec {
    GroupKind kind;
    std::optional<AlternatingMatrix> form;  // required for Symplectic
};

/// One orbit, members sorted by their canonical encodings; rows.front() is
/// the orbit representative.
struct Orbit {
    std::vector<std::vector<Element>> rows;
};

struct OrbitPartition {
    std::vector<Orbit> orbits;       // ordered by representative encoding
    std::size_t universe_size = 0;   // number of unimodular rows considered
};

/// Exhaustive section search over a finite ring (the defining unimodularity
/// test at this scale). Budget bounds cardinality^n.
std::optional<std::vector<Element>> exhaustive_section(
    const std::vector<Element>& row, const Int& budget);

/// All unimodular rows of length n over a finite ring, sorted by encoding.
std::vector<std::vector<Element>> enumerate_unimodular_rows(
    const RingHandle& ring, std::size_t n, const Int& budget);

/// Generator sets per group kind. Elementary: every E_ij(lambda) with
/// lambda nonzero. SpecialLinear / Symplectic: filtered exhaustive search
/// over all rank-n matrices, bounded by cardinality^(n^2) <= budget with
/// hard caps n <= 4 and cardinality <= 9.
std::vector<MatrixExact> group_elements(const RingHandle& ring, std::size_t n,
                                        const GroupSpec& group,
                                        const Int& budget);

/// BFS closure under an explicit generator list. With a start row, returns
/// that single orbit; otherwise partitions the full unimodular-row universe.
OrbitPartition orbit_closure(const RingHandle& ring, std::size_t n,
                             const std::vector<MatrixExact>& generators,
                             const std::optional<UnimodularRow>& start,
                             const Int& budget);

/// Orbit enumeration for one of the three named group kinds.
OrbitPartition orbit_enumerate(const RingHandle& ring, std::size_t n,
                               const GroupSpec& group,
                               const std::optional<UnimodularRow>& start,
                               const Int& budget);

/// An elementary-symplectic generator: the matrix together with the
/// elementary factorization that certifies membership in E_n(R).
struct SymplecticGenerator {
    MatrixExact matrix;
    ElementaryFactorization certificate;
};

/// All elementary matrices symplectic with respect to chi, plus products of
/// up to `depth` of them (depth 2 by default), deduplicated. Requires a
/// finite ring, rank <= 4 and cardinality <= 9.
std::vector<SymplecticGenerator> elementary_symplectic_generators(
    const AlternatingMatrix& chi, std::size_t depth = 2,
    const Int& budget = Int(1000000));

/// Canonical encoding of a row, used for hashing and deterministic order.
std::string encode_row(const std::vector<Element>& row);

}  // namespace wittforge
