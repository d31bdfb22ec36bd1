#include "doctest.h"

#include "g2a/exprio.hpp"
#include "g2a/rng.hpp"

using namespace g2a;

TEST_CASE("scalar json round-trip is bit-exact") {
    Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        Poly num(rng.rational(9, 4));
        num = num + Poly::generator(gens::t, static_cast<int>(rng.uniform(1, 3))).scaled(Alg::sqrt3().scaled(rng.rational(9, 4)));
        num = num + Poly::generator(gens::E, 2).scaled(Alg::cbrt2());
        Poly den = Poly::generator(gens::t, static_cast<int>(rng.uniform(1, 2)));
        Scalar s(num, den);
        Json j = scalar_to_json(s);
        Scalar back = scalar_from_json(j);
        CHECK(back == s);
        CHECK(scalar_to_json(back) == j);
    }
}

TEST_CASE("json tree evaluates like the field") {
    // (sqrt2)^2 - 2 normalizes to zero through the tree importer too
    Json tree = {{"op", "add"},
                 {"args", Json::array({
                              Json{{"op", "mul"},
                                   {"args", Json::array({
                                                Json{{"op", "const"},
                                                     {"terms", Json::array({Json{{"two_sixths", 3}, {"sqrt3", 0}, {"value", "1"}}})}},
                                                Json{{"op", "const"},
                                                     {"terms", Json::array({Json{{"two_sixths", 3}, {"sqrt3", 0}, {"value", "1"}}})},
                                                }})}},
                              Json{{"op", "const"}, {"value", "-2"}},
                          })}};
    CHECK(scalar_from_json(tree).is_zero());
}

TEST_CASE("latex emitter basics") {
    Scalar s = Scalar(Alg::radical(Q(1, 3), 2, 0)) * Scalar::generator(gens::b) *
               Scalar::generator(gens::E, 2);
    std::string tex = scalar_to_latex(s);
    CHECK(tex.find("2^{2/6}") != std::string::npos);
    CHECK(tex.find("\\mathrm{e}^{") != std::string::npos);
    CHECK(scalar_to_latex(Scalar(0)) == "0");
}
