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

#include "wittforge/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace wittforge {

namespace {

using Poly = Element::Poly;

[[noreturn]] void bad_input(const std::string& msg) {
    throw std::invalid_argument(msg);
}

[[noreturn]] void math_error(const std::string& msg) {
    throw std::domain_error(msg);
}

Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1ul) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Int smallest_prime_factor(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int i = 3; i * i <= n; i += 2) {
        if (n % i == 0) return i;
    }
    return n;
}

// q = p^m with p prime, m >= 1; nullopt when q is not a prime power.
std::optional<std::pair<Int, unsigned>> prime_power(const Int& q) {
    if (q < 2) return std::nullopt;
    Int p = smallest_prime_factor(q);
    Int t = q;
    unsigned m = 0;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) return std::nullopt;
    return std::make_pair(p, m);
}

std::string strip_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

Int parse_int_text(std::string_view s, const std::string& what) {
    if (s.empty()) bad_input(what + ": empty integer literal");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) bad_input(what + ": bad integer literal '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            bad_input(what + ": bad integer literal '" + std::string(s) + "'");
    }
    return Int(std::string(s));
}

// ---------------------------------------------------------------------
// Coefficient-vector arithmetic shared by polynomial and quotient rings.
// Vectors are low-degree-first with trailing zeros stripped.
// ---------------------------------------------------------------------
namespace pv {

Poly trim(Poly v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

long deg(const Poly& v) { return static_cast<long>(v.size()) - 1; }

Poly add(const Ring& base, const Poly& a, const Poly& b) {
    Poly out;
    const std::size_t n = std::max(a.size(), b.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.size() && i < b.size())
            out.push_back(base.add(a[i], b[i]));
        else if (i < a.size())
            out.push_back(a[i]);
        else
            out.push_back(b[i]);
    }
    return trim(std::move(out));
}

Poly neg(const Ring& base, const Poly& a) {
    Poly out;
    out.reserve(a.size());
    for (const Element& c : a) out.push_back(base.negate(c));
    return out;
}

Poly sub(const Ring& base, const Poly& a, const Poly& b) {
    return add(base, a, neg(base, b));
}

Poly mul(const Ring& base, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, base.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = base.add(out[i + j], base.mul(a[i], b[j]));
        }
    }
    return trim(std::move(out));
}

Poly scale(const Ring& base, const Poly& a, const Element& c) {
    Poly out;
    out.reserve(a.size());
    for (const Element& e : a) out.push_back(base.mul(e, c));
    return trim(std::move(out));
}

// Remainder modulo a monic divisor; valid over any base ring.
Poly mod_monic(const Ring& base, Poly a, const Poly& f) {
    const long df = deg(f);
    a = trim(std::move(a));
    while (deg(a) >= df) {
        const long da = deg(a);
        const Element c = a[static_cast<std::size_t>(da)];
        const long shift = da - df;
        for (long i = 0; i <= df; ++i) {
            auto k = static_cast<std::size_t>(shift + i);
            a[k] = base.add(a[k], base.negate(base.mul(c, f[static_cast<std::size_t>(i)])));
        }
        a = trim(std::move(a));
    }
    return a;
}

// Division with remainder; the divisor's leading coefficient must be a unit.
std::pair<Poly, Poly> divmod(const Ring& base, Poly a, const Poly& b) {
    const long db = deg(b);
    if (db < 0) math_error("polynomial division by zero");
    auto lead_inv = base.inverse(b[static_cast<std::size_t>(db)]);
    if (!lead_inv) math_error("polynomial division: leading coefficient is not a unit");
    a = trim(std::move(a));
    Poly q;
    if (deg(a) >= db) q.assign(static_cast<std::size_t>(deg(a) - db + 1), base.zero());
    while (deg(a) >= db) {
        const long da = deg(a);
        const Element c = base.mul(a[static_cast<std::size_t>(da)], *lead_inv);
        const long shift = da - db;
        q[static_cast<std::size_t>(shift)] = c;
        for (long i = 0; i <= db; ++i) {
            auto k = static_cast<std::size_t>(shift + i);
            a[k] = base.add(a[k], base.negate(base.mul(c, b[static_cast<std::size_t>(i)])));
        }
        a = trim(std::move(a));
    }
    return {trim(std::move(q)), std::move(a)};
}

struct PExtGcd {
    Poly g, u, v;  // u*a + v*b = g; g monic when nonzero
};

// Extended Euclid over base[x] for a field base.
PExtGcd ext_gcd_field(const Ring& base, Poly a, Poly b) {
    Poly r0 = trim(std::move(a)), r1 = trim(std::move(b));
    Poly u0 = {base.one()}, u1 = {};
    Poly v0 = {}, v1 = {base.one()};
    while (deg(r1) >= 0) {
        auto [q, r] = divmod(base, r0, r1);
        Poly u2 = sub(base, u0, mul(base, q, u1));
        Poly v2 = sub(base, v0, mul(base, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (deg(r0) >= 0) {
        auto inv = base.inverse(r0.back());
        if (!inv) math_error("polynomial gcd requires a field base");
        r0 = scale(base, r0, *inv);
        u0 = scale(base, u0, *inv);
        v0 = scale(base, v0, *inv);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

Poly gcd_field(const Ring& base, const Poly& a, const Poly& b) {
    return ext_gcd_field(base, a, b).g;
}

Poly powmod(const Ring& base, Poly a, Int e, const Poly& f) {
    Poly result = {base.one()};
    a = mod_monic(base, std::move(a), f);
    while (e > 0) {
        if ((e & 1) != 0) result = mod_monic(base, mul(base, result, a), f);
        e >>= 1;
        if (e > 0) a = mod_monic(base, mul(base, a, a), f);
    }
    return result;
}

bool equal(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

std::vector<long> prime_divisors(long d) {
    std::vector<long> out;
    for (long r = 2; r * r <= d; ++r) {
        if (d % r == 0) {
            out.push_back(r);
            while (d % r == 0) d /= r;
        }
    }
    if (d > 1) out.push_back(d);
    return out;
}

// Distinct-degree irreducibility test over a finite field base:
// f (monic, degree d) is irreducible iff x^(q^d) = x mod f and
// gcd(x^(q^(d/r)) - x, f) = 1 for every prime r dividing d.
bool irreducible_over_finite_field(const Ring& base, const Poly& f) {
    const long d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    const Int q = base.cardinality();
    Poly x = {base.zero(), base.one()};
    Poly xqd = powmod(base, x, ipow(q, static_cast<unsigned long>(d)), f);
    if (!equal(xqd, x)) return false;
    for (long r : prime_divisors(d)) {
        Poly xe = powmod(base, x, ipow(q, static_cast<unsigned long>(d / r)), f);
        Poly g = gcd_field(base, sub(base, xe, x), f);
        if (deg(g) != 0) return false;
    }
    return true;
}

}  // namespace pv

// ---------------------------------------------------------------------
// Sparse polynomial text: parsing and canonical printing.
// Accepted forms: "x^8-3", "2x^3+x-5", "2*x^3", "(t+1)x^2+t", "x", "-x", "5".
// Coefficients that are not plain integers must be parenthesized.
// ---------------------------------------------------------------------

struct PolyTextParser {
    const Ring& base;
    RingHandle base_handle;
    const std::string& var;
    std::string s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    Element parse_number() {
        std::size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (!eof() && peek() == '/' && pos + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            ++pos;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        }
        return base.parse(std::string_view(s).substr(start, pos - start));
    }

    Element parse_paren() {
        std::size_t depth = 0;
        std::size_t start = pos;
        do {
            if (eof()) bad_input("polynomial literal: unbalanced parentheses");
            if (peek() == '(') ++depth;
            if (peek() == ')') --depth;
            ++pos;
        } while (depth > 0);
        return base.parse(std::string_view(s).substr(start + 1, pos - start - 2));
    }

    unsigned long parse_exponent() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            bad_input("polynomial literal: missing exponent after '^'");
        unsigned long e = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + static_cast<unsigned long>(peek() - '0');
            if (e > 4096) bad_input("polynomial literal: exponent too large");
            ++pos;
        }
        return e;
    }

    bool at_var() const {
        if (s.compare(pos, var.size(), var) != 0) return false;
        std::size_t after = pos + var.size();
        if (after < s.size() &&
            std::isalnum(static_cast<unsigned char>(s[after])))
            return false;
        return true;
    }

    // term := factor (['*'] factor)*
    std::pair<Element, unsigned long> parse_term() {
        Element coeff = base.one();
        unsigned long degree = 0;
        bool saw_factor = false;
        while (!eof()) {
            char c = peek();
            if (c == '+' || c == '-') break;
            if (c == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = base.mul(coeff, parse_number());
                saw_factor = true;
                continue;
            }
            if (c == '(') {
                coeff = base.mul(coeff, parse_paren());
                saw_factor = true;
                continue;
            }
            if (at_var()) {
                pos += var.size();
                unsigned long e = 1;
                if (!eof() && peek() == '^') {
                    ++pos;
                    e = parse_exponent();
                }
                degree += e;
                saw_factor = true;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                // A bare coefficient identifier from the base ring, e.g. a
                // generator of an extension field.
                std::size_t start = pos;
                while (!eof() &&
                       std::isalpha(static_cast<unsigned char>(peek())))
                    ++pos;
                coeff = base.mul(coeff, base.parse(std::string_view(s).substr(
                                            start, pos - start)));
                saw_factor = true;
                continue;
            }
            bad_input("polynomial literal: unexpected character '" +
                      std::string(1, c) + "'");
        }
        if (!saw_factor) bad_input("polynomial literal: empty term");
        return {coeff, degree};
    }

    Poly parse() {
        Poly acc;
        bool negative = false;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            negative = (peek() == '-');
            ++pos;
        }
        if (eof()) bad_input("polynomial literal: empty input");
        while (true) {
            auto [coeff, degree] = parse_term();
            if (negative) coeff = base.negate(coeff);
            if (acc.size() <= degree) acc.resize(degree + 1, base.zero());
            acc[degree] = base.add(acc[degree], coeff);
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') {
                negative = (c == '-');
                ++pos;
                continue;
            }
            bad_input("polynomial literal: unexpected character '" +
                      std::string(1, c) + "'");
        }
        return pv::trim(std::move(acc));
    }
};

Poly parse_poly_text(const RingHandle& base, const std::string& var,
                     std::string_view text) {
    PolyTextParser p{*base, base, var, strip_ws(text)};
    return p.parse();
}

bool plain_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

std::string print_poly(const Ring& base, const std::string& var, const Poly& v,
                       bool signed_coeffs) {
    if (v.empty()) return "0";
    std::string out;
    for (long k = pv::deg(v); k >= 0; --k) {
        const Element& c = v[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string cs = base.to_string(c);
        bool negative = signed_coeffs && !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        std::string op = out.empty() ? (negative ? "-" : "")
                                     : (negative ? "-" : "+");
        std::string piece;
        if (k == 0) {
            piece = plain_integer_text(mag) ? mag : "(" + mag + ")";
        } else {
            std::string cpart;
            if (mag == "1")
                cpart = "";
            else if (plain_integer_text(mag))
                cpart = mag;
            else
                cpart = "(" + mag + ")";
            piece = cpart + var;
            if (k > 1) piece += "^" + std::to_string(k);
        }
        out += op + piece;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------
// Concrete rings
// ---------------------------------------------------------------------

class IntegerRing final : public Ring {
public:
    IntegerRing() : Ring("Z") {}

    Int characteristic() const override { return 0; }
    bool finite() const override { return false; }
    bool is_field() const override { return false; }
    bool is_domain() const override { return true; }

    Element from_int(const Int& n) const override { return {self(), n}; }

    Element parse(std::string_view text) const override {
        return from_int(parse_int_text(strip_ws(text), "Z"));
    }

    std::string to_string(const Element& e) const override {
        return e.as_int().str();
    }

    Element add(const Element& a, const Element& b) const override {
        return {self(), Int(a.as_int() + b.as_int())};
    }
    Element negate(const Element& a) const override {
        return {self(), Int(-a.as_int())};
    }
    Element mul(const Element& a, const Element& b) const override {
        return {self(), Int(a.as_int() * b.as_int())};
    }
    bool is_zero(const Element& a) const override { return a.as_int() == 0; }

    std::optional<Element> inverse(const Element& a) const override {
        if (a.as_int() == 1 || a.as_int() == -1) return a;
        return std::nullopt;
    }

    Element sample(Rng& rng) const override {
        return from_int(Int(rng.range(-10, 10)));
    }
};

class RationalField final : public Ring {
public:
    RationalField() : Ring("Q") {}

    Int characteristic() const override { return 0; }
    bool finite() const override { return false; }
    bool is_field() const override { return true; }
    bool is_domain() const override { return true; }

    Element from_int(const Int& n) const override { return {self(), Rat(n)}; }

    Element parse(std::string_view text) const override {
        std::string s = strip_ws(text);
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return from_int(parse_int_text(s, "Q"));
        }
        Int num = parse_int_text(s.substr(0, slash), "Q numerator");
        Int den = parse_int_text(s.substr(slash + 1), "Q denominator");
        if (den == 0) bad_input("Q: zero denominator");
        Rat r(num);
        r /= Rat(den);
        return {self(), r};
    }

    std::string to_string(const Element& e) const override {
        const Rat& r = e.as_rat();
        Int num = boost::multiprecision::numerator(r);
        Int den = boost::multiprecision::denominator(r);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    Element add(const Element& a, const Element& b) const override {
        return {self(), Rat(a.as_rat() + b.as_rat())};
    }
    Element negate(const Element& a) const override {
        return {self(), Rat(-a.as_rat())};
    }
    Element mul(const Element& a, const Element& b) const override {
        return {self(), Rat(a.as_rat() * b.as_rat())};
    }
    bool is_zero(const Element& a) const override { return a.as_rat() == 0; }

    std::optional<Element> inverse(const Element& a) const override {
        if (a.as_rat() == 0) return std::nullopt;
        return Element{self(), Rat(Rat(1) / a.as_rat())};
    }

    Element sample(Rng& rng) const override {
        Rat r(Int(rng.range(-10, 10)));
        r /= Rat(Int(rng.range(1, 10)));
        return {self(), r};
    }
};

class ResidueRing final : public Ring {
public:
    ResidueRing(const Int& modulus, bool gf_style)
        : Ring(gf_style ? "GF(" + modulus.str() + ")" : "Z/" + modulus.str()),
          modulus_(modulus),
          prime_(wittforge::is_prime(modulus)) {}

    const Int& modulus() const { return modulus_; }

    Int characteristic() const override { return modulus_; }
    bool finite() const override { return true; }
    Int cardinality() const override { return modulus_; }
    bool is_field() const override { return prime_; }
    bool is_domain() const override { return prime_; }

    Element from_int(const Int& n) const override {
        Int r = n % modulus_;
        if (r < 0) r += modulus_;
        return {self(), r};
    }

    Element parse(std::string_view text) const override {
        return from_int(parse_int_text(strip_ws(text), descriptor()));
    }

    std::string to_string(const Element& e) const override {
        return e.as_int().str();
    }

    Element add(const Element& a, const Element& b) const override {
        Int r = a.as_int() + b.as_int();
        if (r >= modulus_) r -= modulus_;
        return {self(), r};
    }
    Element negate(const Element& a) const override {
        if (a.as_int() == 0) return a;
        return {self(), Int(modulus_ - a.as_int())};
    }
    Element mul(const Element& a, const Element& b) const override {
        return {self(), Int((a.as_int() * b.as_int()) % modulus_)};
    }
    bool is_zero(const Element& a) const override { return a.as_int() == 0; }

    std::optional<Element> inverse(const Element& a) const override {
        ExtGcd e = ext_gcd(a.as_int(), modulus_);
        if (e.g != 1) return std::nullopt;
        return from_int(e.x);
    }

    std::vector<Element> enumerate() const override {
        if (modulus_ > (Int(1) << 22))
            math_error(descriptor() + ": enumeration too large");
        std::vector<Element> out;
        out.reserve(modulus_.convert_to<std::size_t>());
        for (Int i = 0; i < modulus_; ++i) out.push_back(Element{self(), i});
        return out;
    }

    Element sample(Rng& rng) const override {
        if (modulus_ <= std::numeric_limits<std::uint64_t>::max()) {
            return from_int(Int(rng.below(modulus_.convert_to<std::uint64_t>())));
        }
        Int r = 0;
        for (int i = 0; i < 4; ++i) r = (r << 64) + rng.next();
        return from_int(r);
    }

private:
    Int modulus_;
    bool prime_;
};

class PolynomialRing final : public Ring {
public:
    explicit PolynomialRing(RingHandle base)
        : Ring(base->descriptor() + "[x]"), base_(std::move(base)) {}

    const RingHandle& base() const { return base_; }

    Int characteristic() const override { return base_->characteristic(); }
    bool finite() const override { return false; }
    bool is_field() const override { return false; }
    bool is_domain() const override { return base_->is_domain(); }

    Element from_int(const Int& n) const override {
        Poly p;
        Element c = base_->from_int(n);
        if (!c.is_zero()) p.push_back(std::move(c));
        return {self(), std::move(p)};
    }

    Element parse(std::string_view text) const override {
        return {self(), parse_poly_text(base_, "x", text)};
    }

    std::string to_string(const Element& e) const override {
        return print_poly(*base_, "x", e.as_poly(),
                          base_->characteristic() == 0);
    }

    Element add(const Element& a, const Element& b) const override {
        return {self(), pv::add(*base_, a.as_poly(), b.as_poly())};
    }
    Element negate(const Element& a) const override {
        return {self(), pv::neg(*base_, a.as_poly())};
    }
    Element mul(const Element& a, const Element& b) const override {
        return {self(), pv::mul(*base_, a.as_poly(), b.as_poly())};
    }
    bool is_zero(const Element& a) const override { return a.as_poly().empty(); }

    std::optional<Element> inverse(const Element& a) const override {
        const Poly& p = a.as_poly();
        if (p.empty()) return std::nullopt;
        if (base_->is_domain()) {
            if (p.size() != 1) return std::nullopt;
            auto inv = base_->inverse(p[0]);
            if (!inv) return std::nullopt;
            return Element{self(), Poly{*inv}};
        }
        // Units over a base with nilpotents: constant term a unit, all
        // higher coefficients nilpotent; invert via the geometric series.
        auto c0 = base_->inverse(p[0]);
        if (!c0) return std::nullopt;
        for (std::size_t i = 1; i < p.size(); ++i) {
            if (!nilpotent(p[i])) return std::nullopt;
        }
        Poly u = pv::scale(*base_, p, *c0);  // 1 + N
        Poly nil = u;
        nil[0] = base_->add(nil[0], base_->negate(base_->one()));
        nil = pv::trim(std::move(nil));
        Poly acc = {base_->one()};
        Poly term = {base_->one()};
        for (int guard = 0; guard < 128 && !term.empty(); ++guard) {
            term = pv::neg(*base_, pv::mul(*base_, term, nil));
            acc = pv::add(*base_, acc, term);
        }
        if (!term.empty()) return std::nullopt;
        return Element{self(), pv::scale(*base_, acc, *c0)};
    }

    Element sample(Rng& rng) const override {
        Poly p;
        std::size_t d = rng.below(3);
        for (std::size_t i = 0; i <= d; ++i) p.push_back(base_->sample(rng));
        return {self(), pv::trim(std::move(p))};
    }

private:
    bool nilpotent(const Element& e) const {
        if (base_->is_domain()) return e.is_zero();
        // Finite base: square until the exponent passes the cardinality.
        Element x = e;
        Int bound = base_->cardinality();
        for (Int k = 1; k < bound * 2; k <<= 1) {
            if (x.is_zero()) return true;
            x = base_->mul(x, x);
        }
        return x.is_zero();
    }

    RingHandle base_;
};

class QuotientRing final : public Ring {
public:
    QuotientRing(RingHandle base, Poly modulus, std::string var,
                 std::string descriptor, bool field_flag, bool gf_extension)
        : Ring(std::move(descriptor)),
          base_(std::move(base)),
          modulus_(std::move(modulus)),
          var_(std::move(var)),
          field_(field_flag),
          gf_extension_(gf_extension) {}

    const RingHandle& base() const { return base_; }
    const Poly& modulus() const { return modulus_; }
    bool gf_extension() const { return gf_extension_; }
    long degree() const { return pv::deg(modulus_); }

    Int characteristic() const override { return base_->characteristic(); }
    bool finite() const override { return base_->finite(); }
    Int cardinality() const override {
        return ipow(base_->cardinality(),
                    static_cast<unsigned long>(degree()));
    }
    bool is_field() const override { return field_; }
    bool is_domain() const override { return field_; }

    Element from_int(const Int& n) const override {
        Poly p;
        Element c = base_->from_int(n);
        if (!c.is_zero()) p.push_back(std::move(c));
        return {self(), pv::mod_monic(*base_, std::move(p), modulus_)};
    }

    Element parse(std::string_view text) const override {
        Poly p = parse_poly_text(base_, var_, text);
        return {self(), pv::mod_monic(*base_, std::move(p), modulus_)};
    }

    std::string to_string(const Element& e) const override {
        return print_poly(*base_, var_, e.as_poly(),
                          base_->characteristic() == 0);
    }

    Element add(const Element& a, const Element& b) const override {
        return {self(), pv::add(*base_, a.as_poly(), b.as_poly())};
    }
    Element negate(const Element& a) const override {
        return {self(), pv::neg(*base_, a.as_poly())};
    }
    Element mul(const Element& a, const Element& b) const override {
        return {self(), pv::mod_monic(*base_,
                                      pv::mul(*base_, a.as_poly(), b.as_poly()),
                                      modulus_)};
    }
    bool is_zero(const Element& a) const override { return a.as_poly().empty(); }

    std::optional<Element> inverse(const Element& a) const override {
        if (a.as_poly().empty()) return std::nullopt;
        if (base_->is_field()) {
            auto eg = pv::ext_gcd_field(*base_, a.as_poly(), modulus_);
            if (pv::deg(eg.g) != 0) return std::nullopt;
            return Element{self(), pv::mod_monic(*base_, std::move(eg.u), modulus_)};
        }
        if (finite()) {
            if (cardinality() > (Int(1) << 16))
                math_error(descriptor() + ": exhaustive unit test too large");
            for (const Element& v : enumerate()) {
                if (mul(a, v).is_one()) return v;
            }
            return std::nullopt;
        }
        math_error(descriptor() + ": unit testing unsupported");
    }

    std::vector<Element> enumerate() const override {
        if (!finite()) math_error(descriptor() + ": ring is infinite");
        if (cardinality() > (Int(1) << 22))
            math_error(descriptor() + ": enumeration too large");
        std::vector<Element> base_elems = base_->enumerate();
        const auto d = static_cast<std::size_t>(degree());
        std::vector<std::size_t> idx(d, 0);
        std::vector<Element> out;
        out.reserve(cardinality().convert_to<std::size_t>());
        while (true) {
            Poly p;
            for (std::size_t i = 0; i < d; ++i) p.push_back(base_elems[idx[i]]);
            out.push_back(Element{self(), pv::trim(std::move(p))});
            std::size_t k = 0;
            while (k < d) {
                if (++idx[k] < base_elems.size()) break;
                idx[k] = 0;
                ++k;
            }
            if (k == d) break;
        }
        return out;
    }

    Element sample(Rng& rng) const override {
        Poly p;
        const auto d = static_cast<std::size_t>(degree());
        for (std::size_t i = 0; i < d; ++i) p.push_back(base_->sample(rng));
        return {self(), pv::trim(std::move(p))};
    }

private:
    RingHandle base_;
    Poly modulus_;
    std::string var_;
    bool field_;
    bool gf_extension_;
};

bool atomic_ring(const Ring& r) {
    if (dynamic_cast<const IntegerRing*>(&r)) return true;
    if (dynamic_cast<const RationalField*>(&r)) return true;
    if (dynamic_cast<const ResidueRing*>(&r)) return true;
    if (auto* q = dynamic_cast<const QuotientRing*>(&r)) return q->gf_extension();
    return false;
}

RingHandle make_gf_extension(const Int& p, unsigned m, const Int& q) {
    if (q > (Int(1) << 20))
        bad_input("GF(" + q.str() + "): extension field too large");
    RingHandle base = std::make_shared<ResidueRing>(p, true);
    // Deterministic search for the first irreducible monic of degree m.
    const Int total = ipow(p, m);
    for (Int k = 0; k < total; ++k) {
        Poly f;
        Int t = k;
        for (unsigned i = 0; i < m; ++i) {
            f.push_back(base->from_int(t % p));
            t /= p;
        }
        f.push_back(base->one());
        if (pv::irreducible_over_finite_field(*base, f)) {
            return std::make_shared<QuotientRing>(
                base, std::move(f), "t", "GF(" + q.str() + ")", true, true);
        }
    }
    bad_input("GF(" + q.str() + "): no irreducible modulus found");
}

RingHandle parse_atom(const std::string& s) {
    if (s == "Z") return std::make_shared<IntegerRing>();
    if (s == "Q") return std::make_shared<RationalField>();
    if (s.rfind("Z/", 0) == 0) {
        Int n = parse_int_text(s.substr(2), "ring descriptor Z/<n>");
        if (n == 1) bad_input("Z/1: trivial ring rejected");
        if (n < 2) bad_input("Z/" + n.str() + ": modulus must be at least 2");
        return std::make_shared<ResidueRing>(n, false);
    }
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        Int q = parse_int_text(s.substr(3, s.size() - 4), "ring descriptor GF(<q>)");
        auto pp = prime_power(q);
        if (!pp) bad_input("GF(" + q.str() + "): not a prime power");
        auto [p, m] = *pp;
        if (m == 1) return std::make_shared<ResidueRing>(p, true);
        return make_gf_extension(p, m, q);
    }
    bad_input("unrecognized ring descriptor '" + s + "'");
}

}  // namespace

// ---------------------------------------------------------------------
// Ring base defaults
// ---------------------------------------------------------------------

Int Ring::cardinality() const {
    math_error(descriptor() + ": cardinality of an infinite ring");
}

std::vector<Element> Ring::enumerate() const {
    math_error(descriptor() + ": enumeration of an infinite ring");
}

// ---------------------------------------------------------------------
// Element methods and operators
// ---------------------------------------------------------------------

bool Element::is_zero() const { return ring_->is_zero(*this); }

bool Element::is_one() const { return *this == ring_->one(); }

bool Element::is_unit() const { return ring_->inverse(*this).has_value(); }

std::optional<Element> Element::inverse() const { return ring_->inverse(*this); }

Element Element::pow(const Int& e) const {
    if (e < 0) {
        auto inv = inverse();
        if (!inv) math_error("pow: negative exponent of a non-unit");
        return inv->pow(-e);
    }
    Element result = ring_->one();
    Element base = *this;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string Element::str() const { return ring_->to_string(*this); }

Element operator+(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return a.ring()->add(a, b);
}

Element operator-(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return a.ring()->add(a, a.ring()->negate(b));
}

Element operator*(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return a.ring()->mul(a, b);
}

Element operator-(const Element& a) { return a.ring()->negate(a); }

bool operator==(const Element& a, const Element& b) {
    if (a.ring().get() != b.ring().get() &&
        a.ring()->descriptor() != b.ring()->descriptor())
        return false;
    return a.payload() == b.payload();
}

bool same_ring(const Ring& a, const Ring& b) {
    return &a == &b || a.descriptor() == b.descriptor();
}

void require_same_ring(const Element& a, const Element& b) {
    if (!same_ring(*a.ring(), *b.ring()))
        bad_input("ring mismatch: " + a.ring()->descriptor() + " vs " +
                  b.ring()->descriptor());
}

// ---------------------------------------------------------------------
// Integer extended gcd
// ---------------------------------------------------------------------

ExtGcd ext_gcd(const Int& a, const Int& b) {
    Int r0 = a, r1 = b;
    Int x0 = 1, x1 = 0;
    Int y0 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    return {r0, x0, y0};
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int i = 3; i * i <= n; i += 2) {
        if (n % i == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// ring_parse
// ---------------------------------------------------------------------

RingHandle ring_parse(std::string_view descriptor) {
    std::string s = strip_ws(descriptor);
    if (s.empty()) bad_input("empty ring descriptor");

    auto qpos = s.find("[x]/(");
    if (qpos != std::string::npos) {
        if (s.back() != ')')
            bad_input("ring descriptor: expected ')' at the end of '" + s + "'");
        RingHandle base = parse_atom(s.substr(0, qpos));
        if (dynamic_cast<const IntegerRing*>(base.get()))
            bad_input("quotient rings over Z are not supported; "
                      "use Q or a finite coefficient ring");
        std::string modulus_text = s.substr(qpos + 5, s.size() - qpos - 6);
        Poly f = parse_poly_text(base, "x", modulus_text);
        if (pv::deg(f) < 1)
            bad_input("quotient modulus must have degree at least 1");
        if (!f.back().is_one())
            bad_input("quotient modulus must be monic");
        bool field_flag = false;
        if (base->is_field() && base->finite())
            field_flag = pv::irreducible_over_finite_field(*base, f);
        std::string canon = base->descriptor() + "[x]/(" +
                            print_poly(*base, "x", f,
                                       base->characteristic() == 0) +
                            ")";
        return std::make_shared<QuotientRing>(base, std::move(f), "x",
                                              std::move(canon), field_flag,
                                              false);
    }

    if (s.size() > 3 && s.compare(s.size() - 3, 3, "[x]") == 0) {
        RingHandle base = parse_atom(s.substr(0, s.size() - 3));
        return std::make_shared<PolynomialRing>(base);
    }

    return parse_atom(s);
}

// ---------------------------------------------------------------------
// dot product and Bezout sections
// ---------------------------------------------------------------------

Element dot(const std::vector<Element>& a, const std::vector<Element>& b) {
    if (a.empty() || a.size() != b.size())
        bad_input("dot: vectors must be nonempty and of equal length");
    Element acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

std::optional<std::vector<Element>> bezout_section(
    const std::vector<Element>& row) {
    if (row.empty()) bad_input("bezout_section: empty row");
    const RingHandle& ring = row[0].ring();
    for (const Element& e : row) require_same_ring(row[0], e);

    // Any entry that is a unit yields a section immediately, over any ring.
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (auto inv = ring->inverse(row[i])) {
            std::vector<Element> b(row.size(), ring->zero());
            b[i] = *inv;
            return b;
        }
    }

    if (dynamic_cast<const IntegerRing*>(ring.get())) {
        Int g = row[0].as_int();
        std::vector<Int> c{Int(1)};
        if (g < 0) {
            g = -g;
            c[0] = -1;
        }
        for (std::size_t i = 1; i < row.size(); ++i) {
            ExtGcd e = ext_gcd(g, row[i].as_int());
            for (Int& cj : c) cj *= e.x;
            c.push_back(e.y);
            g = e.g;
        }
        if (g != 1) return std::nullopt;
        std::vector<Element> b;
        b.reserve(c.size());
        for (const Int& v : c) b.push_back(ring->from_int(v));
        return b;
    }

    if (auto* res = dynamic_cast<const ResidueRing*>(ring.get())) {
        // Lift to Z and run the chain with the modulus appended.
        Int g = row[0].as_int();
        std::vector<Int> c{Int(1)};
        if (g < 0) {
            g = -g;
            c[0] = -1;
        }
        for (std::size_t i = 1; i < row.size(); ++i) {
            ExtGcd e = ext_gcd(g, row[i].as_int());
            for (Int& cj : c) cj *= e.x;
            c.push_back(e.y);
            g = e.g;
        }
        ExtGcd e = ext_gcd(g, res->modulus());
        if (e.g != 1) return std::nullopt;
        std::vector<Element> b;
        b.reserve(row.size());
        for (const Int& v : c) b.push_back(ring->from_int(v * e.x));
        return b;
    }

    if (ring->is_field()) {
        return std::nullopt;  // no unit entry over a field means the row is zero
    }

    if (auto* pring = dynamic_cast<const PolynomialRing*>(ring.get());
        pring && pring->base()->is_field()) {
        const Ring& base = *pring->base();
        Poly g = pv::trim(row[0].as_poly());
        std::vector<Poly> c{{base.one()}};
        if (pv::deg(g) >= 0) {
            auto inv = base.inverse(g.back());
            g = pv::scale(base, g, *inv);
            c[0] = {*inv};
        }
        for (std::size_t i = 1; i < row.size(); ++i) {
            auto e = pv::ext_gcd_field(base, g, row[i].as_poly());
            for (Poly& cj : c) cj = pv::mul(base, cj, e.u);
            c.push_back(e.v);
            g = e.g;
        }
        if (pv::deg(g) != 0) return std::nullopt;
        std::vector<Element> b;
        b.reserve(c.size());
        for (Poly& v : c) b.push_back(Element{ring, std::move(v)});
        return b;
    }

    bad_input("bezout_section: " + ring->descriptor() +
              " requires a user-supplied section witness");
}

// ---------------------------------------------------------------------
// public polynomial helpers
// ---------------------------------------------------------------------

RingHandle polynomial_ring(const RingHandle& base) {
    if (!atomic_ring(*base))
        bad_input("polynomial_ring: base must be Z, Q, Z/n or GF(q)");
    return std::make_shared<PolynomialRing>(base);
}

bool is_polynomial_ring(const Ring& r) {
    return dynamic_cast<const PolynomialRing*>(&r) != nullptr;
}

RingHandle polynomial_base(const Ring& r) {
    if (auto* p = dynamic_cast<const PolynomialRing*>(&r)) return p->base();
    if (auto* q = dynamic_cast<const QuotientRing*>(&r)) return q->base();
    bad_input(r.descriptor() + ": not a polynomial or quotient ring");
}

Element make_poly(const RingHandle& poly_ring, std::vector<Element> coeffs) {
    auto* p = dynamic_cast<const PolynomialRing*>(poly_ring.get());
    if (!p) bad_input("make_poly: not a polynomial ring");
    for (const Element& c : coeffs) {
        if (!same_ring(*c.ring(), *p->base()))
            bad_input("make_poly: coefficient ring mismatch");
    }
    return {poly_ring, pv::trim(std::move(coeffs))};
}

long poly_degree(const Element& p) { return pv::deg(p.as_poly()); }

Element poly_eval(const Element& p, const Element& point) {
    RingHandle base = polynomial_base(*p.ring());
    if (!same_ring(*base, *point.ring()))
        bad_input("poly_eval: point must lie in the coefficient ring");
    const Poly& v = p.as_poly();
    Element acc = base->zero();
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc;
}

std::pair<Element, Element> poly_divmod(const Element& a, const Element& b) {
    require_same_ring(a, b);
    if (!is_polynomial_ring(*a.ring()))
        bad_input("poly_divmod: arguments must lie in a polynomial ring");
    RingHandle base = polynomial_base(*a.ring());
    auto [q, r] = pv::divmod(*base, a.as_poly(), b.as_poly());
    return {Element{a.ring(), std::move(q)}, Element{a.ring(), std::move(r)}};
}

Element poly_gcd(const Element& a, const Element& b) {
    require_same_ring(a, b);
    RingHandle base = polynomial_base(*a.ring());
    if (!base->is_field()) bad_input("poly_gcd: coefficient ring must be a field");
    return {a.ring(), pv::gcd_field(*base, a.as_poly(), b.as_poly())};
}

Element poly_powmod(const Element& base, const Int& e, const Element& m) {
    require_same_ring(base, m);
    RingHandle coeffs = polynomial_base(*base.ring());
    if (e < 0) bad_input("poly_powmod: negative exponent");
    const Poly& f = m.as_poly();
    if (pv::deg(f) < 1 || !f.back().is_one())
        bad_input("poly_powmod: modulus must be monic of degree >= 1");
    return {base.ring(), pv::powmod(*coeffs, base.as_poly(), e, f)};
}

}  // namespace wittforge
