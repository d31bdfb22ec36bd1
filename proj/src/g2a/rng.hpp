#pragma once

#include <cstdint>

#include "g2a/rational.hpp"
#include "g2a/scalar.hpp"

namespace g2a {

/// Deterministic xorshift64* generator; identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545f4914f6cdd1dull;
    }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Small nonzero rational with numerator in [-max, max] and denominator
    /// in [1, dmax].
    Q nonzero_rational(long max = 9, long dmax = 4) {
        long n = 0;
        while (n == 0) n = uniform(-max, max);
        return Q(n, uniform(1, dmax));
    }

    Q rational(long max = 9, long dmax = 4) { return Q(uniform(-max, max), uniform(1, dmax)); }

    /// Random evaluation point for the spec generators with t and E nonzero.
    EvalPoint point() {
        EvalPoint pt;
        for (int g = 0; g <= gens::E; ++g) pt.set(g, rational(7, 3));
        pt.set(gens::t, nonzero_rational(7, 3));
        pt.set(gens::E, nonzero_rational(7, 3));
        return pt;
    }

private:
    uint64_t s_;
};

}  // namespace g2a
