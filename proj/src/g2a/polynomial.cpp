#include "g2a/polynomial.hpp"

#include <map>
#include <stdexcept>

namespace g2a {

namespace gens {

namespace {
constexpr std::string_view kNames[count] = {
    "t", "u", "x", "y", "z", "p", "q",
    "a0", "a1", "a2", "a3", "a4", "a5", "a6", "b", "E",
    "alpha", "beta", "gamma", "lambda",
    "Ux", "Uy", "Uz", "Up", "Uq",
    "Uxx", "Uxy", "Uxz", "Uxp", "Uxq",
    "Uyy", "Uyz", "Uyp", "Uyq",
    "Uzz", "Uzp", "Uzq",
    "Upp", "Upq",
    "Uqq"};
}

std::string_view name(int g) { return kNames[g]; }

int by_name(std::string_view n) {
    for (int g = 0; g < count; ++g)
        if (kNames[g] == n) return g;
    return -1;
}

}  // namespace gens

Mono Mono::operator*(const Mono& m) const {
    Mono r;
    for (int i = 0; i < gens::count; ++i) {
        int s = e[i] + m.e[i];
        if (s > 255) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = static_cast<uint8_t>(s);
    }
    return r;
}

Mono Mono::operator/(const Mono& m) const {
    Mono r;
    for (int i = 0; i < gens::count; ++i) {
        if (m.e[i] > e[i]) throw std::domain_error("monomial division failure");
        r.e[i] = static_cast<uint8_t>(e[i] - m.e[i]);
    }
    return r;
}

bool mono_greater(const Mono& a, const Mono& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (int i = 0; i < gens::count; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

namespace {
struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_greater(a, b); }
};
using Acc = std::map<Mono, Alg, MonoGreater>;

void acc_add(Acc& acc, const Mono& m, const Alg& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}
}  // namespace

int Poly::degree(int g) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.m.e[static_cast<size_t>(g)]);
    return d;
}

Poly Poly::operator-() const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && mono_greater(a->m, b->m))) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || mono_greater(b->m, a->m)) {
            r.terms_.push_back(*b++);
        } else {
            Alg s = a->c + b->c;
            if (!s.is_zero()) r.terms_.push_back({a->m, s});
            ++a;
            ++b;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    if (o.is_monomial()) return mul_term(o.terms_[0].m, o.terms_[0].c);
    if (is_monomial()) return o.mul_term(terms_[0].m, terms_[0].c);
    Acc acc;
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_) acc_add(acc, ta.m * tb.m, ta.c * tb.c);
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::scaled(const Alg& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
}

Poly Poly::mul_term(const Mono& m, const Alg& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

namespace {

// d(gen)/d(coord) as a polynomial; nullopt encodes zero.
std::optional<Poly> generator_derivative(int g, int coord) {
    if (g == coord) return Poly(1);
    if (g == gens::E && coord == gens::x) {
        Poly r = Poly::generator(gens::b) * Poly::generator(gens::E);
        return r.scaled(Alg(Q(1, 3)));
    }
    if (g >= gens::jet1_base && g < gens::jet2_base && coord >= gens::x && coord <= gens::q) {
        int c1 = gens::x + (g - gens::jet1_base);
        return Poly::generator(gens::jet2(c1, coord));
    }
    if (g >= gens::jet2_base && g < gens::count && coord >= gens::x && coord <= gens::q)
        throw std::logic_error("derivative of a second jet (jet space truncated)");
    return std::nullopt;
}

}  // namespace

Poly Poly::diff(int coord) const {
    Acc acc;
    for (const auto& t : terms_) {
        for (int g = 0; g < gens::count; ++g) {
            int e = t.m.e[static_cast<size_t>(g)];
            if (e == 0) continue;
            auto dg = generator_derivative(g, coord);
            if (!dg) continue;
            Mono base = t.m / Mono::gen(g);
            Alg c = t.c.scaled(Q(e));
            for (const auto& dt : dg->terms()) acc_add(acc, base * dt.m, c * dt.c);
        }
    }
    Poly r;
    for (auto& [m, c] : acc) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::subst(const std::vector<std::pair<int, Poly>>& map) const {
    std::array<const Poly*, gens::count> tab{};
    for (const auto& [g, v] : map) tab[static_cast<size_t>(g)] = &v;

    Poly out;
    for (const auto& t : terms_) {
        Mono kept = t.m;
        Poly factor(t.c);
        for (int g = 0; g < gens::count && !factor.is_zero(); ++g) {
            int e = t.m.e[static_cast<size_t>(g)];
            if (e == 0 || !tab[static_cast<size_t>(g)]) continue;
            kept.e[static_cast<size_t>(g)] = 0;
            Poly pw = *tab[static_cast<size_t>(g)];
            Poly acc(1);
            int k = e;
            while (k > 0) {  // square-and-multiply
                if (k & 1) acc = acc * pw;
                k >>= 1;
                if (k) pw = pw * pw;
            }
            factor = factor * acc;
        }
        out = out + factor.mul_term(kept, Alg(Q(1)));
    }
    return out;
}

Alg Poly::eval(const std::array<std::optional<Q>, gens::count>& pt) const {
    Alg sum;
    for (const auto& t : terms_) {
        Q v(1);
        for (int g = 0; g < gens::count; ++g) {
            int e = t.m.e[static_cast<size_t>(g)];
            if (e == 0) continue;
            if (!pt[static_cast<size_t>(g)])
                throw std::domain_error(std::string("unassigned generator in eval: ") +
                                        std::string(gens::name(g)));
            v *= pt[static_cast<size_t>(g)]->pow(e);
        }
        sum += t.c.scaled(v);
    }
    return sum;
}

Mono Poly::monomial_content() const {
    if (terms_.empty()) return Mono::one();
    Mono m = terms_[0].m;
    for (const auto& t : terms_)
        for (int i = 0; i < gens::count; ++i)
            m.e[static_cast<size_t>(i)] =
                std::min(m.e[static_cast<size_t>(i)], t.m.e[static_cast<size_t>(i)]);
    return m;
}

Poly Poly::divexact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (d.is_constant()) return scaled(d.constant_value().inverse());
    Poly rem = *this, quot;
    const Term& ld = d.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!ld.m.divides(lr.m)) throw std::domain_error("inexact polynomial division");
        Mono qm = lr.m / ld.m;
        Alg qc = lr.c / ld.c;
        quot = quot + Poly::term(qm, qc);
        rem = rem - d.mul_term(qm, qc);
    }
    return quot;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + t.c.str() + ")";
        for (int g = 0; g < gens::count; ++g) {
            int e = t.m.e[static_cast<size_t>(g)];
            if (!e) continue;
            out += "*" + std::string(gens::name(g));
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequences
// ---------------------------------------------------------------------------

namespace {

// Coefficient of v^k, with v stripped out.
Poly coeff_of(const Poly& f, int v, int k) {
    Poly r;
    for (const auto& t : f.terms()) {
        if (t.m.e[static_cast<size_t>(v)] != k) continue;
        Mono m = t.m;
        m.e[static_cast<size_t>(v)] = 0;
        r = r + Poly::term(m, t.c);
    }
    return r;
}

Poly content_in(const Poly& f, int v) {
    Poly c;
    for (int k = 0; k <= f.degree(v); ++k) {
        Poly ck = coeff_of(f, v, k);
        if (ck.is_zero()) continue;
        c = poly_gcd(c, ck);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? Poly(1) : c;
}

Poly mul_pow(const Poly& f, int v, int k) {
    return f.mul_term(Mono::gen(v, k), Alg(Q(1)));
}

// Standardized pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r.
Poly prem(Poly f, const Poly& g, int v) {
    int dg = g.degree(v);
    int df = f.degree(v);
    if (df < dg) return f;
    Poly lcg = coeff_of(g, v, dg);
    int steps = 0;
    while (!f.is_zero() && f.degree(v) >= dg) {
        int d = f.degree(v);
        Poly lcf = coeff_of(f, v, d);
        f = f * lcg - mul_pow(lcf * g, v, d - dg);
        ++steps;
    }
    for (int i = steps; i < df - dg + 1; ++i) f = f * lcg;
    return f;
}

// Subresultant PRS on primitive inputs; avoids content gcds inside the loop.
Poly subresultant_gcd(Poly a, Poly b, int v) {
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    Poly g(1), h(1);
    while (true) {
        int delta = a.degree(v) - b.degree(v);
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) return Poly(1);
        a = b;
        Poly div = g;
        for (int i = 0; i < delta; ++i) div = div * h;
        b = r.divexact(div);
        g = coeff_of(a, v, a.degree(v));
        if (delta > 0) {
            Poly hn = g;
            for (int i = 1; i < delta; ++i) hn = hn * g;
            for (int i = 0; i < delta - 1; ++i) hn = hn.divexact(h);
            h = hn;
        }
    }
    return b.divexact(content_in(b, v));
}

Poly normalized_assoc(const Poly& f) {
    if (f.is_zero()) return f;
    Q lead = f.leading().c.leading_rational_coord();
    return f.scaled(Alg(lead.inverse()));
}

// Dense univariate polynomial over the constant field.
using UPoly = std::vector<Alg>;

void utrim(UPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Requires every generator other than v to have been evaluated away.
UPoly to_univariate(const Poly& f, int v) {
    UPoly u(static_cast<size_t>(f.degree(v)) + 1);
    for (const auto& t : f.terms()) u[t.m.e[static_cast<size_t>(v)]] += t.c;
    utrim(u);
    return u;
}

UPoly umod(UPoly a, const UPoly& b) {
    Alg lb_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Alg f = a.back() * lb_inv;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        utrim(a);
        if (a.empty()) break;
    }
    return a;
}

int univariate_gcd_degree(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = umod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

// Sound one-sided test: returns true only if gcd(a, b) is certainly constant.
// For each variable in the common support, evaluate all other generators at
// rational points; if the degree in v is preserved for both polynomials and
// the univariate images are coprime, the true gcd has degree 0 in v.
bool gcd_proved_constant(const Poly& a, const Poly& b) {
    std::vector<int> common;
    for (int g = 0; g < gens::count; ++g)
        if (a.depends_on(g) && b.depends_on(g)) common.push_back(g);
    if (common.empty()) return true;

    static const long kValues[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (int v : common) {
        bool excluded = false;
        for (int attempt = 0; attempt < 4 && !excluded; ++attempt) {
            std::vector<std::pair<int, Poly>> sub;
            int slot = attempt;
            for (int g = 0; g < gens::count; ++g) {
                if (g == v) continue;
                if (a.depends_on(g) || b.depends_on(g)) {
                    sub.push_back({g, Poly(Alg(Q(kValues[(slot * 3 + g) % 10])))});
                    ++slot;
                }
            }
            Poly ae = a.subst(sub), be = b.subst(sub);
            if (ae.degree(v) != a.degree(v) || be.degree(v) != b.degree(v)) continue;
            int d = univariate_gcd_degree(to_univariate(ae, v), to_univariate(be, v));
            if (d == 0) excluded = true;
        }
        if (!excluded) return false;
    }
    return true;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalized_assoc(b);
    if (b.is_zero()) return normalized_assoc(a);

    Mono ma = a.monomial_content(), mb = b.monomial_content();
    Mono gm;
    for (int i = 0; i < gens::count; ++i)
        gm.e[static_cast<size_t>(i)] =
            std::min(ma.e[static_cast<size_t>(i)], mb.e[static_cast<size_t>(i)]);
    Poly as = a.divexact(Poly::term(ma, Alg(Q(1))));
    Poly bs = b.divexact(Poly::term(mb, Alg(Q(1))));
    Poly mono = Poly::term(gm, Alg(Q(1)));

    if (as.is_constant() || bs.is_constant()) return mono;

    int v = -1;
    for (int g = 0; g < gens::count; ++g) {
        if (as.depends_on(g) && bs.depends_on(g)) { v = g; break; }
    }
    if (v < 0) return mono;
    if (gcd_proved_constant(as, bs)) return mono;

    Poly ca = content_in(as, v), cb = content_in(bs, v);
    Poly cont = poly_gcd(ca, cb);
    Poly gp = subresultant_gcd(as.divexact(ca), bs.divexact(cb), v);
    return normalized_assoc(mono * cont * gp);
}

}  // namespace g2a
