#include "doctest.h"

#include "g2a/nurowski.hpp"
#include "g2a/rng.hpp"

using namespace g2a;

TEST_CASE("A polynomials against the defining combinations") {
    Params ps = Params::symbolic();
    APolys A = build_apolys(ps);

    // 45 * 2^(1/3) * A2 - (9a2 + 27a3 p + 54a4 p^2 + 90a5 p^3 + 135a6 p^4 + 2b^2) == 0
    // (the A2 prefactor is the structure-equation-resolved 1/(45 2^(1/3)))
    Scalar p = Scalar::generator(gens::p), b = Scalar::generator(gens::b);
    Scalar rhs = Scalar(9) * Scalar::generator(gens::a(2)) + Scalar(27) * Scalar::generator(gens::a(3)) * p +
                 Scalar(54) * Scalar::generator(gens::a(4)) * p.pow(2) +
                 Scalar(90) * Scalar::generator(gens::a(5)) * p.pow(3) +
                 Scalar(135) * Scalar::generator(gens::a(6)) * p.pow(4) + Scalar(2) * b * b;
    CHECK((Scalar(45) * Scalar(Alg::cbrt2()) * A.A[2] - rhs).is_zero());

    // a6 = 1, others 0: A6 = 243/(2*2^(2/3))
    Params p6;
    for (int i = 0; i <= 6; ++i) p6.v[static_cast<size_t>(i)] = Q(0);
    p6.v[6] = Q(1);
    p6.v[7] = Q(0);
    APolys A6 = build_apolys(p6);
    CHECK((A6.A[6] - Scalar(Alg::radical(Q(243, 4), 2, 0))).is_zero());

    // all parameters zero: every A vanishes
    Params pz;
    for (int i = 0; i < 8; ++i) pz.v[static_cast<size_t>(i)] = Q(0);
    APolys Az = build_apolys(pz);
    for (int k = 1; k <= 6; ++k) CHECK(Az.A[static_cast<size_t>(k)].is_zero());

    // a3..a6 = 0 kills A3..A6
    Params pl;
    for (int i = 3; i <= 6; ++i) pl.v[static_cast<size_t>(i)] = Q(0);
    APolys Al = build_apolys(pl);
    for (int k = 3; k <= 6; ++k) CHECK(Al.A[static_cast<size_t>(k)].is_zero());

    // is_zero on A4: symbolic no, after a4=a5=a6=0 yes
    CHECK(!A.A[4].is_zero());
    CHECK(Al.A[4].is_zero());
}

TEST_CASE("ladder relations hold with computed constants") {
    for (auto& [name, ok] : ladder_relations(Params::symbolic())) {
        INFO(name);
        CHECK(ok);
    }
    // dA3/dp = 2^(1/3) A4 specifically
    APolys A = build_apolys(Params::symbolic());
    CHECK((A.A[3].diff(gens::p) - Scalar(Alg::cbrt2()) * A.A[4]).is_zero());
}

TEST_CASE("coframe rows and determinant") {
    Params ps = Params::symbolic();
    Coframe hat = theta_hat_coframe(ps);

    // theta-hat^4 row = (2^(-1/3), 0, 0, 0, 0)
    CHECK((hat.matrix()(3, 0) - Scalar(Alg::radical(Q(1, 2), 4, 0))).is_zero());
    for (int c = 1; c < 5; ++c) CHECK(hat.matrix()(3, static_cast<size_t>(c)).is_zero());

    // determinant is a nonzero constant (parameter-independent)
    CHECK(hat.det().is_constant());
    CHECK(!hat.det().is_zero());

    // theta-hat^2 with all parameters zero: dz + q^2 dx - 2q dp
    Params pz;
    for (int i = 0; i < 8; ++i) pz.v[static_cast<size_t>(i)] = Q(0);
    Coframe hatz = theta_hat_coframe(pz);
    Scalar q = Scalar::generator(gens::q);
    CHECK((hatz.matrix()(1, 0) - q * q).is_zero());
    CHECK((hatz.matrix()(1, 2) - Scalar(1)).is_zero());
    CHECK((hatz.matrix()(1, 3) + Scalar(2) * q).is_zero());
}

TEST_CASE("g_F signature and scalar curvature") {
    Params ps = Params::symbolic();
    FrameMetric fm = metric_gF(ps);
    auto [pos, neg] = fm.signature();
    CHECK(pos == 3);
    CHECK(neg == 2);
}

TEST_CASE("(2,3,5)-distribution sanity") {
    CHECK(distribution_sanity(Params::symbolic()));
    // F_qq = 2 for every parameter choice
    Scalar F = defining_function(Params::symbolic());
    CHECK((F.diff(gens::q).diff(gens::q) - Scalar(2)).is_zero());
}

TEST_CASE("appendix conformance: Gamma, P, W, C with all parameters symbolic") {
    Params ps = Params::symbolic();
    FrameMetric fm = metric_gF(ps);
    CurvaturePack pack = curvature_pack(fm);

    CHECK(pack.scal.is_zero());

    // P о P = 0
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Scalar s;
            for (int k = 0; k < 5; ++k)
                for (int l = 0; l < 5; ++l) {
                    const Alg& gkl = fm.ginv()(static_cast<size_t>(k), static_cast<size_t>(l));
                    if (gkl.is_zero()) continue;
                    s += pack.schouten(static_cast<size_t>(i), static_cast<size_t>(k)) * Scalar(gkl) *
                         pack.schouten(static_cast<size_t>(l), static_cast<size_t>(j));
                }
            CHECK(s.is_zero());
        }

    auto rows = conformance_gamma_p_w_c(ps, pack);
    CHECK(rows.size() == 26);
    int verbatim = 0, certified = 0;
    for (const auto& row : rows) {
        INFO(row.id, ": ", row.detail);
        CHECK((row.match || row.certified_misprint));
        verbatim += row.match ? 1 : 0;
        certified += row.certified_misprint ? 1 : 0;
    }
    // one certified misprint: the q-coefficient of the fourth Cotton 2-form
    CHECK(verbatim == 25);
    CHECK(certified == 1);
    for (const auto& row : rows)
        if (!row.match) CHECK(row.id == "C_4");
}

TEST_CASE("degenerate family: a3..a6 = 0 gives Cotton-flat") {
    Params ps;
    for (int i = 3; i <= 6; ++i) ps.v[static_cast<size_t>(i)] = Q(0);
    CurvaturePack pack = curvature_pack(metric_gF(ps));
    CHECK(pack.cotton.is_zero());
}
