#include "g2a/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2a {

namespace {

// idx = 2*i + j for 2^(i/6) * 3^(j/2)
inline int idx_of(int i, int j) { return 2 * i + j; }
inline int i_of(int idx) { return idx / 2; }
inline int j_of(int idx) { return idx % 2; }

}  // namespace

void Alg::insert_term(int idx, const Q& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const auto& t, int k) { return t.first < k; });
    if (it != terms_.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {idx, c});
    }
}

Alg Alg::radical(const Q& coeff, long i2, long j3) {
    if (coeff.is_zero()) return Alg();
    long ci = i2 >= 0 ? i2 / 6 : -((-i2 + 5) / 6);
    long i = i2 - 6 * ci;
    long cj = j3 >= 0 ? j3 / 2 : -((-j3 + 1) / 2);
    long j = j3 - 2 * cj;
    Q c = coeff * Q(2).pow(ci) * Q(3).pow(cj);
    Alg r;
    r.terms_.push_back({idx_of(static_cast<int>(i), static_cast<int>(j)), c});
    return r;
}

Alg Alg::operator-() const {
    Alg r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) r.terms_.push_back({k, -c});
    return r;
}

Alg Alg::operator+(const Alg& o) const {
    Alg r;
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            Q s = a->second + b->second;
            if (!s.is_zero()) r.terms_.push_back({a->first, s});
            ++a;
            ++b;
        }
    }
    return r;
}

Alg Alg::operator-(const Alg& o) const { return *this + (-o); }

Alg Alg::operator*(const Alg& o) const {
    Alg r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            long I = i_of(ka) + i_of(kb);
            long J = j_of(ka) + j_of(kb);
            Q c = ca * cb;
            if (I >= 6) { c *= Q(2); I -= 6; }
            if (J >= 2) { c *= Q(3); J -= 2; }
            r.insert_term(idx_of(static_cast<int>(I), static_cast<int>(J)), c);
        }
    }
    return r;
}

Alg Alg::scaled(const Q& c) const {
    if (c.is_zero()) return Alg();
    Alg r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, a] : terms_) r.terms_.push_back({k, a * c});
    return r;
}

std::array<Q, Alg::kDim> Alg::dense() const {
    std::array<Q, kDim> d;
    for (const auto& [k, c] : terms_) d[static_cast<size_t>(k)] = c;
    return d;
}

Alg Alg::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero algebraic constant");
    if (is_rational()) return Alg(terms_[0].second.inverse());

    // Solve M y = e0 where M is multiplication by *this in the fixed basis.
    Q m[kDim][kDim];
    for (int k = 0; k < kDim; ++k) {
        Alg col = *this * radical(Q(1), i_of(k), j_of(k));
        for (const auto& [row, c] : col.terms()) m[row][k] = c;
    }
    Q rhs[kDim];
    rhs[0] = Q(1);

    for (int col = 0, row = 0; col < kDim && row < kDim; ++col) {
        int piv = -1;
        for (int r2 = row; r2 < kDim; ++r2)
            if (!m[r2][col].is_zero()) { piv = r2; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int c2 = 0; c2 < kDim; ++c2) std::swap(m[piv][c2], m[row][c2]);
            std::swap(rhs[piv], rhs[row]);
        }
        Q inv = m[row][col].inverse();
        for (int c2 = 0; c2 < kDim; ++c2) m[row][c2] *= inv;
        rhs[row] *= inv;
        for (int r2 = 0; r2 < kDim; ++r2) {
            if (r2 == row || m[r2][col].is_zero()) continue;
            Q f = m[r2][col];
            for (int c2 = 0; c2 < kDim; ++c2) m[r2][c2] -= f * m[row][c2];
            rhs[r2] -= f * rhs[row];
        }
        ++row;
    }
    // Multiplication by a nonzero field element is invertible, so back
    // substitution cannot fail; read off y (columns are in echelon order).
    Alg y;
    for (int k = 0; k < kDim; ++k) y.insert_term(k, rhs[k]);

    // Paranoid check: the field axioms guarantee this.
    Alg check = *this * y;
    if (!check.is_one()) throw std::logic_error("algebraic inverse failed");
    return y;
}

bool Alg::operator<(const Alg& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return terms_.size() < o.terms_.size();
}

QInterval Alg::enclosure(unsigned bits) const {
    // Interval endpoints stay exact rationals; each basis radical is enclosed
    // to `bits + 4` fractional bits before scaling.
    QInterval total{Q(0), Q(0)};
    for (const auto& [k, c] : terms_) {
        int i = i_of(k), j = j_of(k);
        QInterval base{Q(1), Q(1)};
        if (i > 0 || j > 0) {
            QInterval r2 = i > 0 ? root_interval(2, static_cast<unsigned long>(i), 6, bits + 4)
                                 : QInterval{Q(1), Q(1)};
            QInterval r3 = j > 0 ? root_interval(3, 1, 2, bits + 4) : QInterval{Q(1), Q(1)};
            base = r2 * r3;
        }
        total = total + base.scaled(c);
    }
    return total;
}

int Alg::sign() const {
    if (terms_.empty()) return 0;
    if (is_rational()) return terms_[0].second.sign();
    for (unsigned bits = 16;; bits *= 2) {
        QInterval e = enclosure(bits);
        if (e.lo.sign() > 0) return 1;
        if (e.hi.sign() < 0) return -1;
        if (bits > 1u << 16)
            throw std::logic_error("sign refinement did not converge");
    }
}

std::string Alg::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.str();
        int i = i_of(k), j = j_of(k);
        if (i > 0) out += "*2^(" + std::to_string(i) + "/6)";
        if (j > 0) out += "*3^(1/2)";
    }
    return out;
}

}  // namespace g2a
