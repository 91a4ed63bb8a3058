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
 * @file ring.hpp
 * @brief Exact commutative-ring tower: Z, Q, Z/n, GF(q), polynomial rings
 *        and monic quotients, with structural element equality.
 *
 * Rings are parsed from text descriptors ("Z", "Q", "Z/8", "GF(17)",
 * "GF(17)[x]/(x^8-3)", "Z[x]") and handed around as immutable shared
 * handles. Elements are immutable values carrying their ring; canonical
 * payloads (reduced residues, reduced fractions, remainder-reduced
 * polynomials) make equality a structural comparison.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wittforge/rng.hpp"

namespace wittforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Ring;
class Element;
using RingHandle = std::shared_ptr<const Ring>;

/// Immutable element of some ring. The payload is one of: a big integer
/// (Z, Z/n, GF(p)), a reduced fraction (Q), or a dense coefficient vector
/// over the base ring (polynomial and quotient rings, low degree first,
/// trailing zeros stripped).
class Element {
public:
    using Poly = std::vector<Element>;
    using Payload = std::variant<Int, Rat, Poly>;

    Element(RingHandle ring, Payload payload)
        : ring_(std::move(ring)), payload_(std::move(payload)) {}

    const RingHandle& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }

    const Int& as_int() const { return std::get<Int>(payload_); }
    const Rat& as_rat() const { return std::get<Rat>(payload_); }
    const Poly& as_poly() const { return std::get<Poly>(payload_); }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    std::optional<Element> inverse() const;

    /// Power by repeated squaring. Negative exponents require a unit base.
    Element pow(const Int& e) const;

    std::string str() const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator-(const Element& a);
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) {
        return !(a == b);
    }

private:
    RingHandle ring_;
    Payload payload_;
};

/// Abstract commutative ring with exact arithmetic, exact unit testing and,
/// for finite rings, element enumeration. Instances are immutable after
/// construction and safe to share across threads.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    virtual ~Ring() = default;

    /// Canonical text form; two handles denote the same ring iff their
    /// descriptors agree.
    const std::string& descriptor() const { return descriptor_; }

    virtual Int characteristic() const = 0;
    virtual bool finite() const = 0;
    /// Throws std::domain_error for infinite rings.
    virtual Int cardinality() const;
    virtual bool is_field() const = 0;
    virtual bool is_domain() const = 0;

    Element zero() const { return from_int(0); }
    Element one() const { return from_int(1); }
    virtual Element from_int(const Int& n) const = 0;

    virtual Element parse(std::string_view text) const = 0;
    virtual std::string to_string(const Element& e) const = 0;

    virtual Element add(const Element& a, const Element& b) const = 0;
    virtual Element negate(const Element& a) const = 0;
    virtual Element mul(const Element& a, const Element& b) const = 0;
    virtual bool is_zero(const Element& a) const = 0;
    /// Exact unit test: returns the inverse iff one exists.
    virtual std::optional<Element> inverse(const Element& a) const = 0;

    /// All elements of a finite ring in a deterministic order.
    /// Throws std::domain_error for infinite rings.
    virtual std::vector<Element> enumerate() const;

    virtual Element sample(Rng& rng) const = 0;

protected:
    explicit Ring(std::string descriptor)
        : descriptor_(std::move(descriptor)) {}
    RingHandle self() const { return shared_from_this(); }

private:
    std::string descriptor_;
};

/// Parses a ring descriptor. Grammar (whitespace ignored):
///   ring := atom | atom "[x]" | atom "[x]/(" monic-poly ")"
///   atom := "Z" | "Q" | "Z/" n | "GF(" q ")"
/// Throws std::invalid_argument on malformed descriptors, non-monic
/// moduli and GF(q) with q not a prime power.
RingHandle ring_parse(std::string_view descriptor);

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Element& a, const Element& b);

struct ExtGcd {
    Int g, x, y;  // g = x*a + y*b, g >= 0
};
ExtGcd ext_gcd(const Int& a, const Int& b);

bool is_prime(const Int& n);

/// Sum of componentwise products of two equal-length vectors.
Element dot(const std::vector<Element>& a, const std::vector<Element>& b);

/// Section search for a row over a ring with constructive gcd/lifting
/// (Z, Q, GF(q) and other fields, GF(q)[x], Z/n). Returns b with
/// a . b^t = 1 when the row is unimodular, nullopt when it is not, and
/// throws std::invalid_argument for rings where unimodularity is not
/// decidable here (a user-supplied witness is required in that case).
std::optional<std::vector<Element>> bezout_section(
    const std::vector<Element>& row);

// --- polynomial-ring helpers ------------------------------------------

/// The ring base[x]. base must be atomic (Z, Q, Z/n or GF(q)).
RingHandle polynomial_ring(const RingHandle& base);

bool is_polynomial_ring(const Ring& r);
/// Coefficient ring of base[x] or of a quotient base[x]/(f).
RingHandle polynomial_base(const Ring& r);

/// Builds an element of a polynomial ring from coefficients over its base
/// (low degree first; trailing zeros are stripped).
Element make_poly(const RingHandle& poly_ring, std::vector<Element> coeffs);

/// Degree of a polynomial-ring element; -1 for the zero polynomial.
long poly_degree(const Element& p);

/// Substitution of a base-ring point into a polynomial-ring element.
Element poly_eval(const Element& p, const Element& point);

/// Division with remainder in base[x]; the divisor's leading coefficient
/// must be a unit.
std::pair<Element, Element> poly_divmod(const Element& a, const Element& b);

/// Monic gcd in base[x] over a field base.
Element poly_gcd(const Element& a, const Element& b);

/// base^e mod m in base[x]; m monic, e >= 0.
Element poly_powmod(const Element& base, const Int& e, const Element& m);

}  // namespace wittforge
