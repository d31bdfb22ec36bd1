#include "g2a/scalar.hpp"

namespace g2a {

EvalPoint EvalPoint::zero_based() {
    EvalPoint pt;
    for (int g = 0; g <= gens::E; ++g) pt.v[static_cast<size_t>(g)] = Q(0);
    pt.v[gens::t] = Q(1);
    pt.v[gens::E] = Q(1);
    return pt;
}

const Q& EvalPoint::at(int g) const {
    if (!v[static_cast<size_t>(g)])
        throw std::domain_error(std::string("evaluation point lacks generator ") +
                                std::string(gens::name(g)));
    return *v[static_cast<size_t>(g)];
}

void Scalar::assign(Poly n, Poly d) {
    if (d.is_zero()) throw DivisionByZero();
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant() || !g.constant_value().is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    make_monic();
}

void Scalar::make_monic() {
    Alg lead = den_.leading().c;
    if (!lead.is_one()) {
        Alg inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

namespace {
bool is_const_one(const Poly& f) { return f.is_constant() && f.constant_value().is_one(); }
}  // namespace

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

// Fraction arithmetic keeps operands reduced, so gcds are only ever taken
// between denominators (Henrici's scheme); results stay canonical without a
// full num/den gcd.
Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Scalar r;
    if (den_ == o.den_) {
        Poly n = num_ + o.num_;
        if (n.is_zero()) return Scalar();
        Poly g = den_.is_constant() ? Poly(1) : poly_gcd(n, den_);
        if (g.is_constant())
            r.num_ = n, r.den_ = den_;
        else
            r.num_ = n.divexact(g), r.den_ = den_.divexact(g);
    } else {
        Poly g = poly_gcd(den_, o.den_);
        if (g.is_constant()) {
            r.num_ = num_ * o.den_ + o.num_ * den_;
            r.den_ = den_ * o.den_;
            if (r.num_.is_zero()) return Scalar();
        } else {
            Poly d2s = o.den_.divexact(g);
            Poly n = num_ * d2s + o.num_ * den_.divexact(g);
            if (n.is_zero()) return Scalar();
            Poly h = poly_gcd(n, g);
            if (h.is_constant()) {
                r.num_ = n;
                r.den_ = den_ * d2s;
            } else {
                r.num_ = n.divexact(h);
                r.den_ = den_.divexact(h) * d2s;
            }
        }
    }
    r.make_monic();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    Scalar r;
    if (is_const_one(den_) && is_const_one(o.den_)) {
        r.num_ = num_ * o.num_;
        r.den_ = Poly(1);
        return r;
    }
    Poly n1 = num_, n2 = o.num_, d1 = den_, d2 = o.den_;
    Poly g1 = poly_gcd(n1, d2);
    if (!g1.is_constant()) {
        n1 = n1.divexact(g1);
        d2 = d2.divexact(g1);
    }
    Poly g2 = poly_gcd(n2, d1);
    if (!g2.is_constant()) {
        n2 = n2.divexact(g2);
        d1 = d1.divexact(g2);
    }
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    r.make_monic();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.make_monic();
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e > 0 ? *this : inverse();
    long n = e > 0 ? e : -e;
    Scalar acc(1);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

Scalar Scalar::diff(int coord) const {
    if (den_.is_constant()) {
        Scalar r;
        r.num_ = num_.diff(coord).scaled(den_.constant_value().inverse());
        r.den_ = Poly(1);
        return r;
    }
    Poly dd = den_.diff(coord);
    if (dd.is_zero()) {
        // quotient rule collapses; denominator unchanged and still coprime
        Poly dn = num_.diff(coord);
        if (dn.is_zero()) return Scalar();
        Scalar r;
        Poly g = poly_gcd(dn, den_);
        if (g.is_constant()) {
            r.num_ = dn;
            r.den_ = den_;
        } else {
            r.num_ = dn.divexact(g);
            r.den_ = den_.divexact(g);
        }
        r.make_monic();
        return r;
    }
    return Scalar(num_.diff(coord) * den_ - num_ * dd, den_ * den_);
}

Scalar Scalar::subst(const std::vector<std::pair<int, Scalar>>& map) const {
    // Split each substituted scalar into num/den polynomials and clear
    // denominators monomial-wise: s = N/D with N,D polynomial substitutions.
    std::vector<std::pair<int, Poly>> nums, dens;
    bool touch_num = false, touch_den = false;
    for (const auto& [g, s] : map) {
        nums.push_back({g, s.num()});
        dens.push_back({g, s.den()});
        if (num_.depends_on(g)) touch_num = true;
        if (den_.depends_on(g)) touch_den = true;
    }
    if (!touch_num && !touch_den) return *this;

    // For a term c * prod g^e the substitution introduces den(g)^e; multiply
    // through by the max power to stay polynomial: substitute g -> N_g/D_g by
    // evaluating the homogenized form.
    auto subst_poly = [&](const Poly& f) -> std::pair<Poly, Poly> {
        // common denominator: product over gens of D_g^{deg_g(f)}
        Poly denom(1);
        std::vector<std::pair<int, Poly>> hom;
        for (size_t k = 0; k < nums.size(); ++k) {
            int g = nums[k].first;
            int d = f.degree(g);
            if (d == 0) continue;
            Poly dg(1);
            for (int i = 0; i < d; ++i) dg = dg * dens[k].second;
            denom = denom * dg;
        }
        // substitute g -> N_g/D_g termwise over the common denominator
        Poly out;
        for (const auto& t : f.terms()) {
            Poly piece = Poly::term(t.m, t.c);
            // strip substituted generators, multiply with N^e and the
            // complementary D powers
            Mono kept = t.m;
            Poly fac(1);
            for (size_t k = 0; k < nums.size(); ++k) {
                int g = nums[k].first;
                int e = t.m.e[static_cast<size_t>(g)];
                int dmax = f.degree(g);
                if (dmax == 0) continue;
                kept.e[static_cast<size_t>(g)] = 0;
                for (int i = 0; i < e; ++i) fac = fac * nums[k].second;
                for (int i = 0; i < dmax - e; ++i) fac = fac * dens[k].second;
            }
            out = out + fac.mul_term(kept, t.c);
        }
        return {out, denom};
    };

    auto [n_num, n_den] = subst_poly(num_);
    auto [d_num, d_den] = subst_poly(den_);
    // (n_num/n_den) / (d_num/d_den)
    if (d_num.is_zero()) throw DivisionByZero();
    return Scalar(n_num * d_den, n_den * d_num);
}

Alg Scalar::eval(const EvalPoint& pt) const {
    Alg d = den_.eval(pt.v);
    if (d.is_zero()) throw PoleError("pole: denominator vanishes at evaluation point");
    return num_.eval(pt.v) / d;
}

std::string Scalar::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Scalar operator*(const Q& c, const Scalar& s) { return Scalar(c) * s; }

}  // namespace g2a
