#include "doctest.h"

#include "g2a/coords.hpp"
#include "g2a/frames.hpp"
#include "g2a/rng.hpp"

using namespace g2a;

namespace {

// Flat 5-dim metric in the coordinate coframe.
FrameMetric flat5() {
    Chart M = chart_m();
    Mat<Scalar> id(5, 5);
    for (int i = 0; i < 5; ++i) id(static_cast<size_t>(i), static_cast<size_t>(i)) = Scalar(1);
    Mat<Alg> g(5, 5);
    for (int i = 0; i < 5; ++i) g(static_cast<size_t>(i), static_cast<size_t>(i)) = Alg(1);
    return FrameMetric(Coframe("flat", M, id), g);
}

// Constant-curvature 3-metric g = (dx^2+dy^2+dz^2)/(1 + kappa r^2/4)^2 as a
// conformal coframe; P = (kappa/2) g.
FrameMetric space_form(const Q& kappa) {
    Chart ch{"M3", {gens::x, gens::y, gens::z}};
    Scalar r2 = Scalar::generator(gens::x).pow(2) + Scalar::generator(gens::y).pow(2) +
                Scalar::generator(gens::z).pow(2);
    Scalar conf = Scalar(1) / (Scalar(1) + Scalar(kappa) * Scalar(Q(1, 4)) * r2);
    Mat<Scalar> m(3, 3);
    for (int i = 0; i < 3; ++i) m(static_cast<size_t>(i), static_cast<size_t>(i)) = conf;
    Mat<Alg> g(3, 3);
    for (int i = 0; i < 3; ++i) g(static_cast<size_t>(i), static_cast<size_t>(i)) = Alg(1);
    return FrameMetric(Coframe("sf", ch, m), g);
}

}  // namespace

TEST_CASE("flat metric: zero connection and curvature") {
    CurvaturePack pack = curvature_pack(flat5());
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) CHECK(pack.conn.at(i, j, k).is_zero());
    CHECK(pack.riemann.is_zero());
    CHECK(pack.ricci.is_zero());
    CHECK(pack.scal.is_zero());
    CHECK(pack.cotton.is_zero());
}

TEST_CASE("space form: Einstein with P = (kappa/2) g") {
    Q kappa(2, 3);
    FrameMetric fm = space_form(kappa);
    CurvatureOptions opt;
    opt.want_weyl_cotton = false;  // n = 3: no Weyl
    CurvaturePack pack = curvature_pack(fm, opt);

    // Ric = 2 kappa g and s = 6 kappa for a 3-dim space form
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar expect = Scalar(kappa) * Scalar(2) * fm.g_s(i, j);
            CHECK((pack.ricci(static_cast<size_t>(i), static_cast<size_t>(j)) - expect).is_zero());
        }
    CHECK((pack.scal - Scalar(kappa) * Scalar(6)).is_zero());
    // P = Lambda' g with Lambda' = kappa/2: the engine normalization
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar expect = Scalar(kappa) * Scalar(Q(1, 2)) * fm.g_s(i, j);
            CHECK((pack.schouten(static_cast<size_t>(i), static_cast<size_t>(j)) - expect).is_zero());
        }
}

TEST_CASE("metricity: covariant derivative of g vanishes") {
    FrameMetric fm = space_form(Q(1));
    ConnectionForms conn = levi_civita(fm);
    Mat<Scalar> gs(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gs(static_cast<size_t>(i), static_cast<size_t>(j)) = fm.g_s(i, j);
    Tensor nabla_g = cov_deriv(tensor_from_mat(gs), fm, conn);
    CHECK(nabla_g.is_zero());
}

TEST_CASE("frame pipeline agrees with coordinate pipeline") {
    // a nondiagonal analytic metric on a 3-chart, framed by a unit-triangular
    // coframe vs the straight coordinate computation
    Chart ch{"M3", {gens::x, gens::y, gens::z}};
    Mat<Scalar> cfm(3, 3);
    for (int i = 0; i < 3; ++i) cfm(static_cast<size_t>(i), static_cast<size_t>(i)) = Scalar(1);
    cfm(0, 1) = Scalar::generator(gens::z);
    cfm(1, 2) = Scalar::generator(gens::x) * Scalar::generator(gens::x);
    Mat<Alg> g(3, 3);
    g(0, 0) = Alg(1);
    g(1, 1) = Alg(1);
    g(2, 2) = Alg(-1);
    FrameMetric fm(Coframe("tri", ch, cfm), g);
    CurvatureOptions opt;
    opt.want_weyl_cotton = false;
    CurvaturePack pack = curvature_pack(fm, opt);

    CoordMetric cm{ch, fm.coordinate_components()};
    Rng rng(41);
    for (int trial = 0; trial < 3; ++trial) {
        EvalPoint pt = rng.point();
        PointCurvature oracle = coord_curvature_at(cm, pt);
        // compare Ricci as coordinate tensors: Ric_coord = M^T Ric_frame M
        Mat<Scalar> M = fm.coframe().matrix();
        for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) {
                Alg expect = oracle.ricci(static_cast<size_t>(c), static_cast<size_t>(d));
                Alg got;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        Alg mi = M(static_cast<size_t>(i), static_cast<size_t>(c)).eval(pt);
                        Alg mj = M(static_cast<size_t>(j), static_cast<size_t>(d)).eval(pt);
                        got += mi * mj * pack.ricci(static_cast<size_t>(i), static_cast<size_t>(j)).eval(pt);
                    }
                CHECK((expect - got).is_zero());
            }
        CHECK((oracle.scal - pack.scal.eval(pt)).is_zero());
    }
}

TEST_CASE("signature computation") {
    Mat<Alg> g(5, 5);
    g(0, 4) = Alg(1);
    g(4, 0) = Alg(1);
    g(1, 3) = Alg(-1);
    g(3, 1) = Alg(-1);
    g(2, 2) = Alg(1);
    Chart M = chart_m();
    Mat<Scalar> id(5, 5);
    for (int i = 0; i < 5; ++i) id(static_cast<size_t>(i), static_cast<size_t>(i)) = Scalar(1);
    FrameMetric fm(Coframe("flat", M, id), g);
    auto [pos, neg] = fm.signature();
    CHECK(pos == 3);
    CHECK(neg == 2);
}
