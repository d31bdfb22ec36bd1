#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "g2a/algebraic.hpp"
#include "g2a/generators.hpp"

namespace g2a {

/// Power product of the generators; exponents are small non-negative ints.
struct Mono {
    std::array<uint8_t, gens::count> e{};

    int total_degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }
    bool is_unit() const {
        for (auto v : e) if (v) return false;
        return true;
    }
    bool divides(const Mono& m) const {
        for (int i = 0; i < gens::count; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Mono operator*(const Mono& m) const;
    Mono operator/(const Mono& m) const;  // requires m.divides(*this)
    bool operator==(const Mono& m) const { return e == m.e; }

    static Mono one() { return Mono{}; }
    static Mono gen(int g, int k = 1) {
        Mono m;
        m.e[static_cast<size_t>(g)] = static_cast<uint8_t>(k);
        return m;
    }
};

/// Graded-lex: higher total degree first, ties by exponent of the earliest
/// generator in the fixed order.
bool mono_greater(const Mono& a, const Mono& b);

/// Sparse multivariate polynomial over the algebraic constant field,
/// terms sorted descending in graded-lex order.
class Poly {
public:
    struct Term {
        Mono m;
        Alg c;
    };

    Poly() = default;
    explicit Poly(const Alg& c) { if (!c.is_zero()) terms_.push_back({Mono::one(), c}); }
    explicit Poly(const Q& c) : Poly(Alg(c)) {}
    Poly(long n) : Poly(Alg(Q(n))) {}

    static Poly generator(int g, int power = 1) {
        Poly r;
        r.terms_.push_back({Mono::gen(g, power), Alg(Q(1))});
        return r;
    }
    static Poly term(const Mono& m, const Alg& c) {
        Poly r;
        if (!c.is_zero()) r.terms_.push_back({m, c});
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit());
    }
    bool is_monomial() const { return terms_.size() == 1; }
    Alg constant_value() const { return terms_.empty() ? Alg() : terms_[0].c; }

    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    int degree(int g) const;
    int total_degree() const { return terms_.empty() ? -1 : terms_[0].m.total_degree(); }
    bool depends_on(int g) const { return degree(g) > 0; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Alg& c) const;
    Poly mul_term(const Mono& m, const Alg& c) const;

    bool operator==(const Poly& o) const;

    /// Partial derivative along a chart coordinate (t,u,x,y,z,p,q), honoring
    /// the derivation rules dE/dx = (b/3) E and the Upsilon jet chain.
    /// Differentiating a second jet throws (the jet space is truncated).
    Poly diff(int coord) const;

    /// Simultaneous substitution; generators absent from the map are kept.
    Poly subst(const std::vector<std::pair<int, Poly>>& map) const;

    /// Full evaluation; every generator present must be assigned.
    Alg eval(const std::array<std::optional<Q>, gens::count>& pt) const;

    /// Common monomial factor of all terms (min exponents); one() if empty.
    Mono monomial_content() const;

    /// Exact division; throws std::domain_error if `d` does not divide.
    Poly divexact(const Poly& d) const;

    std::string str() const;

private:
    std::vector<Term> terms_;

    friend Poly poly_gcd(const Poly& a, const Poly& b);
};

Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace g2a
