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

#pragma once

#include <cstdint>
#include <random>

namespace wittforge {

/// Deterministic random source. All randomness in the library and in the
/// property suites flows through this wrapper so that a fixed seed yields
/// byte-identical reports across runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform draw from [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    /// Uniform draw from [lo, hi], inclusive on both ends.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

}  // namespace wittforge
