#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "g2a/rational.hpp"

namespace g2a {

/// Element of the real field Q(2^(1/6), sqrt(3)), degree 12 over Q, written in
/// the basis { 2^(i/6) * 3^(j/2) : 0 <= i <= 5, j in {0,1} } with basis index
/// 2*i + j. Stored sparsely; most constants in practice have one term.
///
/// Closure under multiplication comes from the reduction rules
/// (2^(1/6))^6 = 2 and (sqrt 3)^2 = 3. Zero iff all 12 coordinates are zero
/// (the basis is linearly independent over Q).
class Alg {
public:
    static constexpr int kDim = 12;

    Alg() = default;
    Alg(const Q& r) { if (!r.is_zero()) terms_.push_back({0, r}); }
    Alg(long n) : Alg(Q(n)) {}
    Alg(int n) : Alg(Q(static_cast<long>(n))) {}

    /// coeff * 2^(i2/6) * 3^(j3/2); i2, j3 reduced mod 6 / mod 2 with carries.
    static Alg radical(const Q& coeff, long i2, long j3);

    static Alg sqrt2() { return radical(Q(1), 3, 0); }
    static Alg sqrt3() { return radical(Q(1), 0, 1); }
    static Alg sqrt6() { return radical(Q(1), 3, 1); }
    static Alg cbrt2() { return radical(Q(1), 2, 0); }       // 2^(1/3)
    static Alg two_pow_sixths(long k) { return radical(Q(1), k, 0); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
    }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    }
    /// Rational part; exact value only when is_rational().
    Q rational_part() const { return terms_.empty() ? Q(0) : terms_[0].second; }

    /// Coordinate of the lowest-index nonzero basis element (zero for 0).
    Q leading_rational_coord() const {
        return terms_.empty() ? Q(0) : terms_[0].second;
    }

    Alg operator-() const;
    Alg operator+(const Alg& o) const;
    Alg operator-(const Alg& o) const;
    Alg operator*(const Alg& o) const;
    Alg operator/(const Alg& o) const { return *this * o.inverse(); }
    Alg& operator+=(const Alg& o) { *this = *this + o; return *this; }
    Alg& operator-=(const Alg& o) { *this = *this - o; return *this; }
    Alg& operator*=(const Alg& o) { *this = *this * o; return *this; }

    Alg scaled(const Q& c) const;
    Alg inverse() const;  // throws std::domain_error on 0

    bool operator==(const Alg& o) const { return terms_ == o.terms_; }
    bool operator!=(const Alg& o) const { return !(*this == o); }
    /// Total order (basis-wise lexicographic); used only for canonical sorting.
    bool operator<(const Alg& o) const;

    /// Exact sign via interval refinement; exact zero is decided structurally.
    int sign() const;

    /// Certified enclosure with hi-lo <= 2^-bits.
    QInterval enclosure(unsigned bits) const;

    const std::vector<std::pair<int, Q>>& terms() const { return terms_; }
    std::array<Q, kDim> dense() const;

    std::string str() const;

private:
    // Sorted by basis index, no zero coefficients.
    std::vector<std::pair<int, Q>> terms_;

    void insert_term(int idx, const Q& c);
};

}  // namespace g2a
