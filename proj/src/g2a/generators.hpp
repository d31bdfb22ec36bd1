#pragma once

#include <array>
#include <string>
#include <string_view>

namespace g2a::gens {

// Fixed generator order; the first 16 entries define the canonical graded-lex
// order of the scalar field. E stands for e^(b x / 3), so e^(k b x / 3) = E^k.
inline constexpr int t = 0;
inline constexpr int u = 1;
inline constexpr int x = 2;
inline constexpr int y = 3;
inline constexpr int z = 4;
inline constexpr int p = 5;
inline constexpr int q = 6;
inline constexpr int a0 = 7;   // a0..a6 contiguous
inline constexpr int b = 14;
inline constexpr int E = 15;

// Engine extensions (never part of spec-level evaluation points):
// symbolic functions for the null-line case analysis, a homogeneity tester,
// and first/second jets of a conformal exponent Upsilon on the 5-dim chart.
inline constexpr int alpha = 16;
inline constexpr int beta = 17;
inline constexpr int gamma = 18;
inline constexpr int lambda = 19;
inline constexpr int jet1_base = 20;  // Ux Uy Uz Up Uq
inline constexpr int jet2_base = 25;  // Uxx Uxy ... Uqq (sorted pairs)
inline constexpr int count = 40;

inline constexpr int a(int i) { return a0 + i; }

/// First jet of Upsilon w.r.t. an M-coordinate generator (x..q).
inline constexpr int jet1(int coord) { return jet1_base + (coord - x); }

/// Second jet, symmetric in the two M-coordinates.
constexpr int jet2(int c1, int c2) {
    int i = c1 - x, j = c2 - x;
    if (i > j) { int s = i; i = j; j = s; }
    // index of sorted pair (i,j) in 0..14 over 5 symbols
    return jet2_base + i * 5 - i * (i - 1) / 2 + (j - i);
}

std::string_view name(int g);
int by_name(std::string_view n);  // -1 if unknown

inline constexpr std::array<int, 7> chart_ambient = {t, u, x, y, z, p, q};
inline constexpr std::array<int, 5> chart_m = {x, y, z, p, q};

}  // namespace g2a::gens
