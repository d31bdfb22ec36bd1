#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace g2a {

/// Exact rational number, a thin RAII wrapper around GMP's mpq_t.
/// Always kept canonical (reduced, positive denominator).
class Q {
public:
    Q() { mpq_init(v_); }
    Q(const Q& o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Q(Q&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    Q(long n) { mpq_init(v_); mpq_set_si(v_, n, 1); }
    Q(int n) : Q(static_cast<long>(n)) {}
    Q(long num, long den);
    ~Q() { mpq_clear(v_); }

    Q& operator=(const Q& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Q& operator=(Q&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }

    /// Parses "p", "-p" or "p/q" in base 10. Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Q parse(std::string_view s);

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Q operator-() const;
    Q operator+(const Q& o) const;
    Q operator-(const Q& o) const;
    Q operator*(const Q& o) const;
    Q operator/(const Q& o) const;  // throws std::domain_error on /0
    Q& operator+=(const Q& o) { mpq_add(v_, v_, o.v_); return *this; }
    Q& operator-=(const Q& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Q& operator*=(const Q& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Q& operator/=(const Q& o);

    Q inverse() const;             // throws std::domain_error on 0
    Q abs() const;
    Q pow(long e) const;           // integer exponent, negative allowed for nonzero

    bool operator==(const Q& o) const { return mpq_equal(v_, o.v_) != 0; }
    bool operator!=(const Q& o) const { return !(*this == o); }
    bool operator<(const Q& o) const { return mpq_cmp(v_, o.v_) < 0; }
    bool operator<=(const Q& o) const { return mpq_cmp(v_, o.v_) <= 0; }
    bool operator>(const Q& o) const { return mpq_cmp(v_, o.v_) > 0; }
    bool operator>=(const Q& o) const { return mpq_cmp(v_, o.v_) >= 0; }

    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    /// Fits in long and is an integer.
    bool fits_long() const { return is_integer() && mpz_fits_slong_p(mpq_numref(v_)); }
    long to_long() const { return mpz_get_si(mpq_numref(v_)); }

    /// Decimal-free exact form: "p" or "p/q".
    std::string str() const;

    mpq_srcptr raw() const { return v_; }
    mpq_ptr raw() { return v_; }

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Q& q);

/// Certified dyadic-rational interval [lo, hi]; endpoints are exact.
struct QInterval {
    Q lo, hi;

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;
    QInterval scaled(const Q& c) const {
        return c.sign() >= 0 ? QInterval{lo * c, hi * c} : QInterval{hi * c, lo * c};
    }
    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

/// Encloses radix^(num/den) for radix in {2,3} to at least `bits` fractional
/// bits, hi - lo <= 2^-bits.
QInterval root_interval(unsigned long radix, unsigned long num, unsigned long den,
                        unsigned bits);

}  // namespace g2a
