#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2a/polynomial.hpp"

namespace g2a {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("scalar division by zero") {}
};

struct PoleError : std::domain_error {
    explicit PoleError(const std::string& w) : std::domain_error(w) {}
};

/// Point assignment for the spec generators (t,u,x,y,z,p,q,a0..a6,b,E).
/// E is assigned independently of x and b: every engine identity is a
/// rational-function identity in the generators, so independent substitution
/// is sound for identity testing.
struct EvalPoint {
    std::array<std::optional<Q>, gens::count> v{};

    static EvalPoint zero_based();  // all spec generators 0, t=1, E=1
    void set(int g, Q val) { v[static_cast<size_t>(g)] = std::move(val); }
    const Q& at(int g) const;
};

/// Element of the scalar differential field: a canonical fraction of
/// multivariate polynomials over the algebraic constant field.
///
/// Canonical form: gcd(num, den) is a unit, and den is monic (leading
/// graded-lex coefficient equal to 1, which in particular makes its first
/// nonzero rational coordinate 1). Two equal field elements always have
/// identical representations.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(const Q& q) : num_(q), den_(1) {}
    Scalar(const Alg& a) : num_(a), den_(1) {}
    explicit Scalar(Poly p) : num_(std::move(p)), den_(1) {}
    Scalar(Poly n, Poly d) { assign(std::move(n), std::move(d)); }

    static Scalar generator(int g, int power = 1) {
        if (power >= 0) return Scalar(Poly::generator(g, power));
        return Scalar(Poly(1), Poly::generator(g, -power));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Exact constant value; valid only when is_constant().
    Alg constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar inverse() const;       // throws DivisionByZero
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Derivation along a chart coordinate; Leibniz + quotient rule with
    /// dE/dx = (b/3) E.
    Scalar diff(int coord) const;

    /// Simultaneous generator substitution (rational or symbolic values).
    Scalar subst(const std::vector<std::pair<int, Scalar>>& map) const;
    Scalar subst(int g, const Scalar& value) const { return subst({{g, value}}); }

    /// Exact evaluation; throws PoleError when the denominator vanishes.
    Alg eval(const EvalPoint& pt) const;

    /// Crude size measure used for pivot selection.
    size_t complexity() const { return num_.term_count() + den_.term_count(); }

    std::string str() const;

private:
    Poly num_, den_;

    void assign(Poly n, Poly d);
    void normalize();
    void make_monic();
};

Scalar operator*(const Q& c, const Scalar& s);

}  // namespace g2a
