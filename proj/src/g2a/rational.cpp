#include "g2a/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace g2a {

Q::Q(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Q Q::parse(std::string_view s) {
    Q r;
    std::string buf(s);
    if (buf.empty() || mpq_set_str(r.v_, buf.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + buf + "'");
    if (mpz_sgn(mpq_denref(r.v_)) == 0)
        throw std::invalid_argument("zero denominator: '" + buf + "'");
    mpq_canonicalize(r.v_);
    return r;
}

Q Q::operator-() const {
    Q r;
    mpq_neg(r.v_, v_);
    return r;
}

Q Q::operator+(const Q& o) const {
    Q r;
    mpq_add(r.v_, v_, o.v_);
    return r;
}

Q Q::operator-(const Q& o) const {
    Q r;
    mpq_sub(r.v_, v_, o.v_);
    return r;
}

Q Q::operator*(const Q& o) const {
    Q r;
    mpq_mul(r.v_, v_, o.v_);
    return r;
}

Q Q::operator/(const Q& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    Q r;
    mpq_div(r.v_, v_, o.v_);
    return r;
}

Q& Q::operator/=(const Q& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

Q Q::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Q r;
    mpq_inv(r.v_, v_);
    return r;
}

Q Q::abs() const {
    Q r;
    mpq_abs(r.v_, v_);
    return r;
}

Q Q::pow(long e) const {
    if (e == 0) return Q(1);
    Q base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Q r;
    mpz_pow_ui(mpq_numref(r.raw()), mpq_numref(base.raw()), n);
    mpz_pow_ui(mpq_denref(r.raw()), mpq_denref(base.raw()), n);
    return r;
}

std::string Q::str() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Q& q) { return os << q.str(); }

QInterval QInterval::operator*(const QInterval& o) const {
    Q c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    Q mn = c[0], mx = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < mn) mn = c[i];
        if (c[i] > mx) mx = c[i];
    }
    return {mn, mx};
}

QInterval root_interval(unsigned long radix, unsigned long num, unsigned long den,
                        unsigned bits) {
    // floor(2^bits * radix^(num/den)) via an integer den-th root.
    mpz_t base, r;
    mpz_init(base);
    mpz_init(r);
    mpz_ui_pow_ui(base, 2, bits * den);
    mpz_t rad;
    mpz_init(rad);
    mpz_ui_pow_ui(rad, radix, num);
    mpz_mul(base, base, rad);
    mpz_root(r, base, den);

    Q scale = Q(1).pow(0);
    mpz_t two_b;
    mpz_init(two_b);
    mpz_ui_pow_ui(two_b, 2, bits);

    Q lo, hi;
    mpz_set(mpq_numref(lo.raw()), r);
    mpz_set(mpq_denref(lo.raw()), two_b);
    mpq_canonicalize(lo.raw());
    mpz_add_ui(r, r, 1);
    mpz_set(mpq_numref(hi.raw()), r);
    mpz_set(mpq_denref(hi.raw()), two_b);
    mpq_canonicalize(hi.raw());

    mpz_clear(two_b);
    mpz_clear(rad);
    mpz_clear(r);
    mpz_clear(base);
    return {lo, hi};
}

}  // namespace g2a
