#include "g2a/coords.hpp"

#include <stdexcept>

namespace g2a {

CoordCurvature coord_curvature(const CoordMetric& m, bool want_riemann) {
    const int n = m.chart.dim();
    CoordCurvature out;
    out.m = m;
    auto inv = inverse_of(m.g);
    if (!inv) throw std::domain_error("coordinate metric is singular");
    out.ginv = *inv;

    auto dcoord = [&](const Scalar& s, int i) { return s.diff(m.chart.coords[static_cast<size_t>(i)]); };

    // dg[l][i][j] = d_l g_ij
    std::vector<Mat<Scalar>> dg(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        dg[static_cast<size_t>(l)] = Mat<Scalar>(static_cast<size_t>(n), static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg[static_cast<size_t>(l)](static_cast<size_t>(i), static_cast<size_t>(j)) =
                    dcoord(m.g(static_cast<size_t>(i), static_cast<size_t>(j)), l);
    }

    out.christoffel = Tensor(n, 3);
    const Scalar half{Q(1, 2)};
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Scalar s;
                for (int l = 0; l < n; ++l) {
                    const Scalar& gkl = out.ginv(static_cast<size_t>(k), static_cast<size_t>(l));
                    if (gkl.is_zero()) continue;
                    Scalar inner = dg[static_cast<size_t>(i)](static_cast<size_t>(j), static_cast<size_t>(l)) +
                                   dg[static_cast<size_t>(j)](static_cast<size_t>(i), static_cast<size_t>(l)) -
                                   dg[static_cast<size_t>(l)](static_cast<size_t>(i), static_cast<size_t>(j));
                    if (!inner.is_zero()) s += gkl * inner;
                }
                s = half * s;
                out.christoffel.at({k, i, j}) = s;
                out.christoffel.at({k, j, i}) = s;
            }

    if (!want_riemann) return out;

    // R^i_{jkl} = sign (d_k G^i_{lj} - d_l G^i_{kj} + G^i_{km} G^m_{lj} - G^i_{lm} G^m_{kj})
    Tensor upper(n, 4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    Scalar s = dcoord(out.christoffel.at({i, l, j}), k) - dcoord(out.christoffel.at({i, k, j}), l);
                    for (int mm = 0; mm < n; ++mm) {
                        const Scalar& a = out.christoffel.at({i, k, mm});
                        const Scalar& bb = out.christoffel.at({mm, l, j});
                        if (!a.is_zero() && !bb.is_zero()) s += a * bb;
                        const Scalar& c = out.christoffel.at({i, l, mm});
                        const Scalar& d = out.christoffel.at({mm, k, j});
                        if (!c.is_zero() && !d.is_zero()) s -= c * d;
                    }
                    if (convention::riemann_sign < 0) s = -s;
                    upper.at({i, j, k, l}) = s;
                    upper.at({i, j, l, k}) = -s;
                }

    out.riemann = Tensor(n, 4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar s;
                    for (int mm = 0; mm < n; ++mm) {
                        const Scalar& gim = m.g(static_cast<size_t>(i), static_cast<size_t>(mm));
                        if (gim.is_zero()) continue;
                        const Scalar& r = upper.at({mm, j, k, l});
                        if (!r.is_zero()) s += gim * r;
                    }
                    out.riemann.at({i, j, k, l}) = s;
                }

    out.ricci = Mat<Scalar>(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            Scalar s;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    const Scalar& gik = out.ginv(static_cast<size_t>(i), static_cast<size_t>(k));
                    if (gik.is_zero()) continue;
                    const Scalar& r = out.riemann.at({i, j, k, l});
                    if (!r.is_zero()) s += gik * r;
                }
            out.ricci(static_cast<size_t>(j), static_cast<size_t>(l)) = s;
        }

    out.scal = Scalar(0);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            const Scalar& gjl = out.ginv(static_cast<size_t>(j), static_cast<size_t>(l));
            if (!gjl.is_zero()) out.scal += gjl * out.ricci(static_cast<size_t>(j), static_cast<size_t>(l));
        }
    return out;
}

PointCurvature coord_curvature_at(const CoordMetric& m, const EvalPoint& pt) {
    const int n = m.chart.dim();
    PointCurvature out;
    out.g = Mat<Alg>(static_cast<size_t>(n), static_cast<size_t>(n));

    auto gen = [&](int i) { return m.chart.coords[static_cast<size_t>(i)]; };

    // g, dg, ddg evaluated exactly at the point
    std::vector<std::vector<Mat<Alg>>> ddg(static_cast<size_t>(n),
                                           std::vector<Mat<Alg>>(static_cast<size_t>(n)));
    std::vector<Mat<Alg>> dg(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        dg[static_cast<size_t>(l)] = Mat<Alg>(static_cast<size_t>(n), static_cast<size_t>(n));
        for (int mm = 0; mm < n; ++mm)
            ddg[static_cast<size_t>(l)][static_cast<size_t>(mm)] = Mat<Alg>(static_cast<size_t>(n), static_cast<size_t>(n));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar& gij = m.g(static_cast<size_t>(i), static_cast<size_t>(j));
            out.g(static_cast<size_t>(i), static_cast<size_t>(j)) = gij.eval(pt);
            for (int l = 0; l < n; ++l) {
                Scalar d1 = gij.diff(gen(l));
                dg[static_cast<size_t>(l)](static_cast<size_t>(i), static_cast<size_t>(j)) = d1.eval(pt);
                for (int mm = 0; mm < n; ++mm)
                    ddg[static_cast<size_t>(l)][static_cast<size_t>(mm)](static_cast<size_t>(i), static_cast<size_t>(j)) =
                        d1.diff(gen(mm)).eval(pt);
            }
        }

    auto inv = inverse_of(out.g);
    if (!inv) throw PoleError("metric singular at evaluation point");
    out.ginv = *inv;

    auto gi = [&](int i, int j) -> const Alg& { return out.ginv(static_cast<size_t>(i), static_cast<size_t>(j)); };

    // dginv[m] = -ginv dg[m] ginv
    std::vector<Mat<Alg>> dginv(static_cast<size_t>(n));
    for (int mm = 0; mm < n; ++mm) {
        dginv[static_cast<size_t>(mm)] = out.ginv * dg[static_cast<size_t>(mm)] * out.ginv;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dginv[static_cast<size_t>(mm)](static_cast<size_t>(i), static_cast<size_t>(j)) =
                    -dginv[static_cast<size_t>(mm)](static_cast<size_t>(i), static_cast<size_t>(j));
    }

    auto pk = [&](int k, int i, int j) { return static_cast<size_t>((k * n + i) * n + j); };
    out.christoffel.assign(static_cast<size_t>(n * n * n), Alg());
    // dG[m][k][i][j] = d_m Gamma^k_{ij}
    std::vector<std::vector<Alg>> dG(static_cast<size_t>(n),
                                     std::vector<Alg>(static_cast<size_t>(n * n * n)));
    Q half(1, 2);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Alg s;
                for (int l = 0; l < n; ++l) {
                    Alg inner = dg[static_cast<size_t>(i)](static_cast<size_t>(j), static_cast<size_t>(l)) +
                                dg[static_cast<size_t>(j)](static_cast<size_t>(i), static_cast<size_t>(l)) -
                                dg[static_cast<size_t>(l)](static_cast<size_t>(i), static_cast<size_t>(j));
                    s += gi(k, l) * inner;
                }
                out.christoffel[pk(k, i, j)] = s.scaled(half);
                for (int mm = 0; mm < n; ++mm) {
                    Alg d;
                    for (int l = 0; l < n; ++l) {
                        Alg inner = dg[static_cast<size_t>(i)](static_cast<size_t>(j), static_cast<size_t>(l)) +
                                    dg[static_cast<size_t>(j)](static_cast<size_t>(i), static_cast<size_t>(l)) -
                                    dg[static_cast<size_t>(l)](static_cast<size_t>(i), static_cast<size_t>(j));
                        Alg dinner = ddg[static_cast<size_t>(i)][static_cast<size_t>(mm)](static_cast<size_t>(j), static_cast<size_t>(l)) +
                                     ddg[static_cast<size_t>(j)][static_cast<size_t>(mm)](static_cast<size_t>(i), static_cast<size_t>(l)) -
                                     ddg[static_cast<size_t>(l)][static_cast<size_t>(mm)](static_cast<size_t>(i), static_cast<size_t>(j));
                        d += dginv[static_cast<size_t>(mm)](static_cast<size_t>(k), static_cast<size_t>(l)) * inner + gi(k, l) * dinner;
                    }
                    dG[static_cast<size_t>(mm)][pk(k, i, j)] = d.scaled(half);
                }
            }

    out.riemann.assign(static_cast<size_t>(n * n * n * n), Alg());
    auto pr = [&](int i, int j, int k, int l) { return static_cast<size_t>(((i * n + j) * n + k) * n + l); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    Alg s = dG[static_cast<size_t>(k)][pk(i, l, j)] - dG[static_cast<size_t>(l)][pk(i, k, j)];
                    for (int mm = 0; mm < n; ++mm) {
                        s += out.christoffel[pk(i, k, mm)] * out.christoffel[pk(mm, l, j)];
                        s -= out.christoffel[pk(i, l, mm)] * out.christoffel[pk(mm, k, j)];
                    }
                    if (convention::riemann_sign < 0) s = -s;
                    // lower the first index
                    for (int a = 0; a < n; ++a) {
                        const Alg& gai = out.g(static_cast<size_t>(a), static_cast<size_t>(i));
                        if (gai.is_zero()) continue;
                        out.riemann[pr(a, j, k, l)] += gai * s;
                        out.riemann[pr(a, j, l, k)] -= gai * s;
                    }
                }

    out.ricci = Mat<Alg>(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            Alg s;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (gi(i, k).is_zero()) continue;
                    s += gi(i, k) * out.riemann[pr(i, j, k, l)];
                }
            out.ricci(static_cast<size_t>(j), static_cast<size_t>(l)) = s;
        }
    out.scal = Alg();
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) out.scal += gi(j, l) * out.ricci(static_cast<size_t>(j), static_cast<size_t>(l));
    return out;
}

}  // namespace g2a
