#include "doctest.h"

#include "g2a/conformal.hpp"
#include "g2a/rng.hpp"

using namespace g2a;

namespace {

Params family_a3() {
    // a3 symbolic nonzero, a4 = a5 = a6 = 0
    Params ps;
    for (int i = 4; i <= 6; ++i) ps.v[static_cast<size_t>(i)] = Q(0);
    return ps;
}

}  // namespace

TEST_CASE("rescale basics") {
    Params ps = Params::symbolic();
    FrameMetric fm = metric_gF(ps);
    // scale 1 is the identity
    FrameMetric same = rescale_metric(fm, Scalar(1));
    CHECK((same.coframe().matrix()(0, 0) - fm.coframe().matrix()(0, 0)).is_zero());
    // e^(-2b/3 x) maps the hat-metric onto g_F: hat coframe scaled by E^-2
    Coframe hat = theta_hat_coframe(ps);
    FrameMetric hatm(hat, fm.g());
    FrameMetric scaled = rescale_metric(hatm, Scalar(1) / Scalar::generator(gens::E, 2));
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            CHECK((scaled.coframe().matrix()(i, j) - fm.coframe().matrix()(i, j)).is_zero());
    // double rescale composes multiplicatively
    Scalar s1 = Scalar(1) + Scalar::generator(gens::x);
    Scalar s2 = Scalar::generator(gens::t);
    (void)s2;
    FrameMetric once = rescale_metric(fm, s1);
    FrameMetric twice = rescale_metric(once, s1);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            CHECK((twice.coframe().matrix()(i, j) - fm.coframe().matrix()(i, j) * s1 * s1).is_zero());
}

TEST_CASE("Schouten transformation law against the full pipeline") {
    Params ps = Params::parse("a3=1,a0=0,a1=0,a2=0,a4=0,a5=0,a6=0,b=0");
    CurvaturePack pack = curvature_pack(metric_gF(ps));

    // constant scale: P unchanged
    Mat<Scalar> law0 = schouten_transform(pack, Scalar(Q(3, 2)));
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) CHECK((law0(i, j) - pack.schouten(i, j)).is_zero());

    // random rational scales sigma = e^Upsilon
    Rng rng(29);
    for (int it = 0; it < 5; ++it) {
        Scalar sigma = Scalar(1) + Scalar(rng.nonzero_rational(3, 2)) * Scalar::generator(gens::p) +
                       Scalar(rng.rational(3, 2)) * Scalar::generator(gens::x);
        CHECK(verify_schouten_transform(pack, sigma));
    }
}

TEST_CASE("Einstein-scale residual is the trace-free test") {
    // flat toy: sigma = 1 solves (residual zero)
    Chart ch{"M3", {gens::x, gens::y, gens::z}};
    Mat<Scalar> id(3, 3);
    for (int i = 0; i < 3; ++i) id(static_cast<size_t>(i), static_cast<size_t>(i)) = Scalar(1);
    Mat<Alg> g(3, 3);
    for (int i = 0; i < 3; ++i) g(static_cast<size_t>(i), static_cast<size_t>(i)) = Alg(1);
    CurvatureOptions opt;
    opt.want_weyl_cotton = false;
    CurvaturePack flat = curvature_pack(FrameMetric(Coframe("flat3", ch, id), g), opt);
    CHECK(einstein_scale_residual(flat, Scalar(1)).is_zero());

    // g_F with a3 = 1 is not Einstein for the trivial scale
    Params ps = Params::parse("a3=1,a0=0,a1=0,a2=0,a4=0,a5=0,a6=0,b=0");
    CurvaturePack pack = curvature_pack(metric_gF(ps));
    CHECK(!einstein_scale_residual(pack, Scalar(1)).is_zero());
}

TEST_CASE("cotton obstruction: A4 nonzero is OBSTRUCTED with the printed witness") {
    // any of a4, a5, a6 nonzero; keep all parameters symbolic
    Params ps = Params::symbolic();
    CurvaturePack pack = curvature_pack(metric_gF(ps));
    CottonObstruction ob = conformal_cotton_obstruction(pack);
    CHECK(ob.status == Obstruction::Obstructed);
    CHECK(ob.witness_id == "C(T)_314");
    // witness = C_314 = -(sqrt3/3) A4 e^(2bx)
    APolys A = build_apolys(ps);
    Scalar expect = -Scalar(Alg::radical(Q(1, 3), 0, 1)) * A.A[4] * Scalar::generator(gens::E, 6);
    CHECK((ob.witness_value - expect).is_zero());

    // anchored values: C(T)_112 = A4 e^(4bx/3) T^4, and once T^4 = 0 is
    // forced, C(T)_214 = -A4 e^(4bx/3) T^1
    Scalar e43 = Scalar::generator(gens::E, 4);
    std::vector<Scalar> T = {Scalar::generator(gens::alpha), Scalar(0), Scalar(0),
                             Scalar::generator(gens::beta), Scalar(0)};
    CHECK((cotton_of_vector(pack, T, 0, 0, 1) - A.A[4] * e43 * Scalar::generator(gens::beta)).is_zero());
    std::vector<Scalar> T2 = {Scalar::generator(gens::alpha), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    CHECK((cotton_of_vector(pack, T2, 1, 0, 3) + A.A[4] * e43 * Scalar::generator(gens::alpha)).is_zero());
}

TEST_CASE("cotton obstruction: a3 family has the printed solution line") {
    Params ps = family_a3();
    CurvaturePack pack = curvature_pack(metric_gF(ps));
    CHECK(pack.cotton.is_zero());  // Cotton flat
    CottonObstruction ob = conformal_cotton_obstruction(pack);
    CHECK(ob.status == Obstruction::Unobstructed);
    REQUIRE(ob.kernel.cols() == 1);
    for (auto& v : ob.particular) CHECK(v.is_zero());
    // kernel direction proportional to (0, 0, 1, 0, 2^(4/3) b / sqrt3)
    Scalar k3 = ob.kernel(2, 0);
    REQUIRE(!k3.is_zero());
    Scalar ratio = ob.kernel(4, 0) / k3;
    Scalar expect = Scalar(Alg::radical(Q(2, 3), 2, 1)) * Scalar::generator(gens::b);
    CHECK((ratio - expect).is_zero());
    CHECK(ob.kernel(0, 0).is_zero());
    CHECK(ob.kernel(1, 0).is_zero());
    CHECK(ob.kernel(3, 0).is_zero());
}

TEST_CASE("conformally flat toy: every T solves") {
    Chart M = chart_m();
    Mat<Scalar> id(5, 5);
    for (int i = 0; i < 5; ++i) id(static_cast<size_t>(i), static_cast<size_t>(i)) = Scalar(1);
    Mat<Alg> g(5, 5);
    for (int i = 0; i < 5; ++i) g(static_cast<size_t>(i), static_cast<size_t>(i)) = Alg(1);
    CurvaturePack flat = curvature_pack(FrameMetric(Coframe("flat5", M, id), g));
    CottonObstruction ob = conformal_cotton_obstruction(flat);
    CHECK(ob.status == Obstruction::Unobstructed);
    CHECK(ob.kernel.cols() == 5);
}

TEST_CASE("gradient obstruction forces f = 0 for the a3 family") {
    Params ps = family_a3();
    CurvaturePack pack = curvature_pack(metric_gF(ps));
    std::vector<Scalar> tau = {Scalar(0), Scalar(0), Scalar(1), Scalar(0),
                               Scalar(Alg::radical(Q(2, 3), 2, 1)) * Scalar::generator(gens::b)};
    GradientObstruction gr = gradient_obstruction(pack, tau);
    CHECK(gr.status == Obstruction::Obstructed);
    // forcing 4-form = f (2/sqrt3) e^(2b/3 x) theta^1345 up to the engine's
    // wedge ordering; compare with the closed form
    Scalar expect = Scalar(Alg::radical(Q(2, 3), 0, 1)) * Scalar::generator(gens::E, 2);
    Scalar got = gr.forcing.coeff({0, 2, 3, 4});
    // d tau ^ theta^1 ^ theta^3 ordering: the engine wedges theta^1 then theta^3
    CHECK((got.pow(2) - expect.pow(2)).is_zero());  // equal up to orientation sign
    CHECK(!got.is_zero());

    // exact toy: tau = dx is closed, so a nonzero f is admissible:
    // T with g(T, .) = dx; dx = 2^(1/3) theta-hat^4 = 2^(1/3) E^2 theta^4,
    // so T^2 = -2^(1/3) E^2 (lowered index 4 pairs with index 2)
    std::vector<Scalar> texact = {Scalar(0), -Scalar(Alg::cbrt2()) * Scalar::generator(gens::E, 2),
                                  Scalar(0), Scalar(0), Scalar(0)};
    GradientObstruction gr2 = gradient_obstruction(pack, texact);
    CHECK(gr2.status == Obstruction::Unobstructed);
}

TEST_CASE("null-line cases a-d reproduce the forced scalars") {
    Scalar E4 = Scalar::generator(gens::E, 4);

    SUBCASE("case c") {
        Params ps = Params::symbolic();
        CurvaturePack pack = curvature_pack(metric_gF(ps));
        APolys A = build_apolys(ps);
        NullLineVerdict v = null_line_obstruction('c', ps, pack);
        CHECK(v.status == Obstruction::Obstructed);
        CHECK((v.forced_scalar - A.A[3] * E4).is_zero());
    }
    SUBCASE("case a, generic branch") {
        Params ps = Params::symbolic();
        CurvaturePack pack = curvature_pack(metric_gF(ps));
        APolys A = build_apolys(ps);
        NullLineVerdict v = null_line_obstruction('a', ps, pack);
        CHECK(v.status == Obstruction::Obstructed);
        CHECK((v.forced_scalar + A.A[4] * E4).is_zero());
        // intermediate contractions match the printed ones
        REQUIRE(v.steps.size() >= 3);
    }
    SUBCASE("case a, Cotton-flat branch") {
        Params ps = family_a3();
        CurvaturePack pack = curvature_pack(metric_gF(ps));
        APolys A = build_apolys(ps);
        NullLineVerdict v = null_line_obstruction('a', ps, pack);
        CHECK(v.status == Obstruction::Obstructed);
        CHECK((v.forced_scalar - A.A[3] * E4).is_zero());
    }
    SUBCASE("case b") {
        Params ps = family_a3();
        CurvaturePack pack = curvature_pack(metric_gF(ps));
        NullLineVerdict v = null_line_obstruction('b', ps, pack);
        CHECK(v.status == Obstruction::Obstructed);
        // obstruction proportional to A3 e^(4bx/3)
        APolys A = build_apolys(ps);
        Scalar ratio = v.forced_scalar / (A.A[3] * E4);
        CHECK(ratio.is_constant());
    }
    SUBCASE("case d") {
        Params ps = Params::symbolic();
        CurvaturePack pack = curvature_pack(metric_gF(ps));
        NullLineVerdict v = null_line_obstruction('d', ps, pack);
        CHECK(v.status == Obstruction::Obstructed);
        // coefficient -(1/(2 sqrt3)) as printed; the engine expresses the
        // 3-form in the unscaled theta wedge, picking up e^(2bx/3)
        Scalar expect = -Scalar(Alg::radical(Q(1, 6), 0, 1)) * Scalar::generator(gens::E, 2);
        CHECK((v.forced_scalar - expect).is_zero());
    }
}

TEST_CASE("C(T) is affine in T") {
    Params ps = Params::symbolic();
    CurvaturePack pack = curvature_pack(metric_gF(ps));
    Rng rng(43);
    std::vector<Scalar> T(5), S(5), zero(5, Scalar(0));
    for (int i = 0; i < 5; ++i) {
        T[static_cast<size_t>(i)] = Scalar(rng.rational(4, 2));
        S[static_cast<size_t>(i)] = Scalar(rng.rational(4, 2)) * Scalar::generator(gens::p);
    }
    std::vector<Scalar> TS(5);
    for (int i = 0; i < 5; ++i) TS[static_cast<size_t>(i)] = T[static_cast<size_t>(i)] + S[static_cast<size_t>(i)];
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k)
            for (int l = k + 1; l < 5; ++l) {
                Scalar lhs = cotton_of_vector(pack, TS, j, k, l) - cotton_of_vector(pack, T, j, k, l) -
                             cotton_of_vector(pack, S, j, k, l) + cotton_of_vector(pack, zero, j, k, l);
                CHECK(lhs.is_zero());
            }
}

TEST_CASE("Weyl frame components under rescale carry only the uniform weight") {
    // lowered frame components of the Weyl tensor of sigma^2 g in the scaled
    // coframe equal sigma^-2 times the originals, so zero sets (and hence the
    // obstruction solution set) are conformally meaningful componentwise
    Params ps = Params::parse("a4=1,a0=0,a1=0,a2=0,a3=0,a5=0,a6=0,b=1");
    CurvaturePack pack = curvature_pack(metric_gF(ps));
    Scalar sigma = Scalar(1) + Scalar::generator(gens::p) * Scalar::generator(gens::p);
    FrameMetric scaled = rescale_metric(pack.fm, sigma);
    CurvatureOptions opt;
    opt.verify_symmetries = false;
    CurvaturePack rp = curvature_pack(scaled, opt);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK((sigma * sigma * rp.weyl.at({i, j, 0, 3}) - pack.weyl.at({i, j, 0, 3})).is_zero());
}
