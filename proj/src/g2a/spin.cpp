#include "g2a/spin.hpp"

#include <stdexcept>

namespace g2a {

namespace {

Mat<Q> gamma_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    Mat<Q> m(4, 4);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (int v : row) m(i, j++) = Q(v);
        ++i;
    }
    return m;
}

Mat<Q> off_block(const Mat<Q>& a, const Mat<Q>& b) {
    Mat<Q> m(8, 8);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            m(i, j + 4) = a(i, j);
            m(i + 4, j) = b(i, j);
        }
    return m;
}

SpinRep build_rep() {
    Mat<Q> g0 = gamma_matrix({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
    Mat<Q> g1 = gamma_matrix({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
    Mat<Q> g2 = gamma_matrix({{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
    Mat<Q> g3 = gamma_matrix({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    Mat<Q> g4 = gamma_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});

    SpinRep rep;
    rep.sigma[0] = off_block(g0, g0);
    rep.sigma[1] = off_block(g2, g2);
    rep.sigma[2] = off_block(g4, g4);
    Mat<Q> s3(8, 8);
    for (size_t i = 0; i < 4; ++i) {
        s3(i, i) = Q(1);
        s3(i + 4, i + 4) = Q(-1);
    }
    rep.sigma[3] = s3;
    rep.sigma[4] = off_block(g1, g1);
    rep.sigma[5] = off_block(g3, g3);
    Mat<Q> s6(8, 8);
    for (size_t i = 0; i < 4; ++i) {
        s6(i, i + 4) = Q(-1);
        s6(i + 4, i) = Q(1);
    }
    rep.sigma[6] = s6;

    Mat<Q> prod = rep.sigma[4] * rep.sigma[5] * rep.sigma[6];
    rep.gram = Mat<Q>(8, 8);
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) rep.gram(i, j) = -prod(j, i);
    return rep;
}

}  // namespace

const SpinRep& spin_rep() {
    static const SpinRep rep = build_rep();
    return rep;
}

bool clifford_check() {
    const SpinRep& rep = spin_rep();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Mat<Q> anti = rep.sigma[static_cast<size_t>(i)] * rep.sigma[static_cast<size_t>(j)] +
                          rep.sigma[static_cast<size_t>(j)] * rep.sigma[static_cast<size_t>(i)];
            Q expect = i == j ? Q(2 * rep.eps[static_cast<size_t>(i)]) : Q(0);
            for (size_t a = 0; a < 8; ++a)
                for (size_t b = 0; b < 8; ++b)
                    if (anti(a, b) != (a == b ? expect : Q(0))) return false;
        }
    // the invariant pairing matrix equals the printed J2-block matrix
    const Q& one = rep.gram(0, 5);
    Mat<Q> expect(8, 8);
    auto setJ = [&](size_t r, size_t c, int sign) {
        expect(r, c + 1) = Q(-sign);
        expect(r + 1, c) = Q(sign);
    };
    setJ(0, 4, 1);
    setJ(2, 6, -1);
    setJ(4, 0, -1);
    setJ(6, 2, 1);
    for (size_t a = 0; a < 8; ++a)
        for (size_t b = 0; b < 8; ++b)
            if (rep.gram(a, b) != expect(a, b)) return false;
    (void)one;
    return true;
}

Scalar spin_product(const Spinor& phi, const Spinor& psi) {
    const SpinRep& rep = spin_rep();
    Scalar s;
    for (size_t i = 0; i < 8; ++i) {
        if (phi[i].is_zero()) continue;
        for (size_t j = 0; j < 8; ++j) {
            const Q& g = rep.gram(i, j);
            if (g.is_zero() || psi[j].is_zero()) continue;
            s += Scalar(g) * phi[i] * psi[j];
        }
    }
    return s;
}

Spinor sigma_apply(int i, const Spinor& psi) {
    const SpinRep& rep = spin_rep();
    Spinor out(8, Scalar(0));
    for (size_t a = 0; a < 8; ++a)
        for (size_t b = 0; b < 8; ++b) {
            const Q& m = rep.sigma[static_cast<size_t>(i)](a, b);
            if (!m.is_zero() && !psi[b].is_zero()) out[a] += Scalar(m) * psi[b];
        }
    return out;
}

Spinor clifford_apply(const std::vector<Scalar>& v, const Spinor& psi) {
    Spinor out(8, Scalar(0));
    for (int i = 0; i < 7; ++i) {
        if (v[static_cast<size_t>(i)].is_zero()) continue;
        Spinor si = sigma_apply(i, psi);
        for (size_t a = 0; a < 8; ++a)
            if (!si[a].is_zero()) out[a] += v[static_cast<size_t>(i)] * si[a];
    }
    return out;
}

SpinConnection spin_connection(const CurvaturePack& pack7) {
    const SpinRep& rep = spin_rep();
    SpinConnection sc;
    // precompute sigma_k sigma_l products
    static std::array<std::array<Mat<Q>, 7>, 7> prod = [] {
        std::array<std::array<Mat<Q>, 7>, 7> p;
        for (int k = 0; k < 7; ++k)
            for (int l = 0; l < 7; ++l)
                p[static_cast<size_t>(k)][static_cast<size_t>(l)] =
                    spin_rep().sigma[static_cast<size_t>(k)] * spin_rep().sigma[static_cast<size_t>(l)];
        return p;
    }();

    const Scalar quarter{Q(1, 4)};
    for (int m = 0; m < 7; ++m) {
        Mat<Scalar> om(8, 8);
        for (int k = 0; k < 7; ++k)
            for (int l = 0; l < 7; ++l) {
                // Gamma^{kl} = Gamma^k_a g^{al}: with the diagonal frame
                // metric, Gamma^{kl}(E_m) = eps_k eps_l Gamma_{kl,m}
                const Scalar& low = pack7.conn.at(k, l, m);
                if (low.is_zero()) continue;
                Scalar coef = quarter * Scalar(Q(rep.eps[static_cast<size_t>(k)] *
                                                 rep.eps[static_cast<size_t>(l)])) * low;
                const Mat<Q>& pr = prod[static_cast<size_t>(k)][static_cast<size_t>(l)];
                for (size_t a = 0; a < 8; ++a)
                    for (size_t b = 0; b < 8; ++b)
                        if (!pr(a, b).is_zero()) om(a, b) += coef * Scalar(pr(a, b));
            }
        sc.omega[static_cast<size_t>(m)] = std::move(om);
    }
    return sc;
}

std::vector<Spinor> spinor_derivative(const CurvaturePack& pack7, const SpinConnection& sc,
                                      const Spinor& psi) {
    std::vector<Spinor> out(7, Spinor(8, Scalar(0)));
    for (int m = 0; m < 7; ++m) {
        for (size_t a = 0; a < 8; ++a) {
            Scalar s = pack7.fm.coframe().frame_derive(m, psi[a]);
            for (size_t b = 0; b < 8; ++b) {
                const Scalar& om = sc.omega[static_cast<size_t>(m)](a, b);
                if (!om.is_zero() && !psi[b].is_zero()) s += om * psi[b];
            }
            out[static_cast<size_t>(m)][a] = s;
        }
    }
    return out;
}

namespace {

Spinor spinor_shape(const Params& ps, bool corrected) {
    const Alg sqrt23 = Alg::radical(Q(1, 3), 3, 1);  // sqrt(2/3) = sqrt6/3
    Scalar E1 = ps.E_power(1);
    Scalar tail = corrected ? Scalar(1) / ps.E_power(1) : ps.E_power(1);
    Scalar inner_m = Scalar(Alg::cbrt2()) * ps.b() * ps.E_power(2) - Scalar(3);
    Scalar inner_p = Scalar(Alg::cbrt2()) * ps.b() * ps.E_power(2) + Scalar(3);
    Spinor psi(8, Scalar(0));
    psi[1] = -E1;
    psi[2] = E1;
    psi[4] = Scalar(sqrt23) * tail * inner_m;
    psi[7] = Scalar(sqrt23) * tail * inner_p;
    return psi;
}

}  // namespace

Spinor printed_spinor(const Params& ps) { return spinor_shape(ps, false); }
Spinor corrected_spinor(const Params& ps) { return spinor_shape(ps, true); }

ParallelSpinor parallel_spinor(const CurvaturePack& pack7, const SpinConnection& sc,
                               const Params& ps) {
    ParallelSpinor out;

    auto passes = [&](const Spinor& cand, int* zeros) {
        std::vector<Spinor> d = spinor_derivative(pack7, sc, cand);
        int z = 0;
        bool all = true;
        for (auto& row : d)
            for (auto& c : row) {
                if (c.is_zero())
                    ++z;
                else
                    all = false;
            }
        if (zeros) *zeros = z;
        return all;
    };

    Spinor printed = printed_spinor(ps);
    Spinor corrected = corrected_spinor(ps);
    out.printed_passes = passes(printed, nullptr);
    int zeros = 0;
    out.corrected_passes = passes(corrected, &zeros);

    if (out.corrected_passes) {
        out.psi = corrected;
        out.zero_components = zeros;
    } else if (out.printed_passes) {
        out.psi = printed;
        passes(printed, &out.zero_components);
    } else {
        throw std::logic_error("no parallel spinor among candidate readings");
    }
    out.norm = spin_product(out.psi, out.psi);

    // independent transport solve: psi = psi(x) requires Omega_c psi = 0 in
    // the six non-x coordinate directions; the kernel must be a line
    {
        const Coframe& xi = pack7.fm.coframe();
        const Chart& amb = xi.chart();
        // coordinate components Omega^coord_c = sum_m xi[m][c] Omega_m
        std::vector<Mat<Scalar>> omc(7);
        for (int c = 0; c < 7; ++c) {
            Mat<Scalar> m(8, 8);
            for (int fr = 0; fr < 7; ++fr) {
                const Scalar& w = xi.matrix()(static_cast<size_t>(fr), static_cast<size_t>(c));
                if (w.is_zero()) continue;
                for (size_t a = 0; a < 8; ++a)
                    for (size_t b = 0; b < 8; ++b) {
                        const Scalar& o = sc.omega[static_cast<size_t>(fr)](a, b);
                        if (!o.is_zero()) m(a, b) += w * o;
                    }
            }
            omc[static_cast<size_t>(c)] = std::move(m);
        }
        int xslot = amb.index_of(gens::x);
        Mat<Scalar> stacked(48, 8);
        size_t row = 0;
        for (int c = 0; c < 7; ++c) {
            if (c == xslot) continue;
            for (size_t a = 0; a < 8; ++a, ++row)
                for (size_t b = 0; b < 8; ++b) stacked(row, b) = omc[static_cast<size_t>(c)](a, b);
        }
        Mat<Scalar> ker = kernel_basis(stacked);
        out.transport_kernel_dim = static_cast<int>(ker.cols());
        // the verified spinor must lie in that kernel
        Mat<Scalar> check(49, 8);
        for (size_t r = 0; r < 48; ++r)
            for (size_t c = 0; c < 8; ++c) check(r, c) = stacked(r, c);
        Spinor image(8, Scalar(0));
        for (size_t r = 0; r < 48; ++r) {
            Scalar s;
            for (size_t c = 0; c < 8; ++c)
                if (!stacked(r, c).is_zero() && !out.psi[c].is_zero()) s += stacked(r, c) * out.psi[c];
            if (!s.is_zero()) throw std::logic_error("parallel spinor fails the transport kernel");
        }
        (void)image;
    }
    return out;
}

CliffordInverse clifford_invert(const Spinor& psi, const Spinor& chi) {
    const SpinRep& rep = spin_rep();
    Scalar norm = spin_product(psi, psi);
    if (norm.is_zero()) throw std::domain_error("clifford_invert needs a non-null spinor");
    CliffordInverse out;
    out.v.assign(7, Scalar(0));
    for (int i = 0; i < 7; ++i) {
        // g(V, E_i) = -<chi, E_i psi> / <psi, psi>; raise with eps_i
        Scalar pairing = spin_product(chi, sigma_apply(i, psi));
        out.v[static_cast<size_t>(i)] =
            Scalar(Q(-rep.eps[static_cast<size_t>(i)])) * pairing / norm;
    }
    Spinor vpsi = clifford_apply(out.v, psi);
    out.residual.assign(8, Scalar(0));
    for (size_t a = 0; a < 8; ++a) out.residual[a] = chi[a] - vpsi[a];
    return out;
}

Form squaring_3form(const AmbientPack& ap, const Spinor& psi) {
    const SpinRep& rep = spin_rep();
    const Coframe& xi = ap.xi;

    // w[i][(j,k)] = g(E_i, A(E_j, E_k)) for j < k
    std::vector<std::vector<Scalar>> w(7, std::vector<Scalar>(49));
    for (int j = 0; j < 7; ++j)
        for (int k = j + 1; k < 7; ++k) {
            // chi = s_j s_k psi - g_jk psi and g_jk = 0 off the diagonal
            Spinor chi = sigma_apply(j, sigma_apply(k, psi));
            CliffordInverse inv = clifford_invert(psi, chi);
            for (size_t a = 0; a < 8; ++a)
                if (!inv.residual[a].is_zero())
                    throw std::logic_error("squaring map left the Clifford image");
            for (int i = 0; i < 7; ++i)
                w[static_cast<size_t>(i)][static_cast<size_t>(j * 7 + k)] =
                    Scalar(Q(rep.eps[static_cast<size_t>(i)])) * inv.v[static_cast<size_t>(i)];
        }

    // total antisymmetry across the first slot, then assemble from i<j<k
    auto at = [&](int i, int j, int k) -> Scalar {
        if (j < k) return w[static_cast<size_t>(i)][static_cast<size_t>(j * 7 + k)];
        return -w[static_cast<size_t>(i)][static_cast<size_t>(k * 7 + j)];
    };
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            if (!at(i, i, j).is_zero() || !at(j, i, j).is_zero())
                throw std::logic_error("squaring 3-form: repeated-index component nonzero");
            for (int k = j + 1; k < 7; ++k)
                if (!(at(i, j, k) + at(j, i, k)).is_zero() || !(at(i, j, k) - at(k, i, j)).is_zero())
                    throw std::logic_error("squaring 3-form: not totally antisymmetric");
        }

    Form omega(xi.chart(), 3, xi.name());
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k) omega.add_term({i, j, k}, at(i, j, k));
    return omega;
}

Form printed_omega(const AmbientPack& ap) {
    const Params& ps = ap.ps;
    const Coframe& xi = ap.xi;
    Form om(xi.chart(), 3, xi.name());
    Scalar f = ps.E_power(2);
    Scalar fm = Scalar(1) / ps.E_power(2);
    Scalar b = ps.b();
    Scalar lead{Alg::radical(Q(1, 36), 1, 1)};  // 1/(6 2^(5/6) sqrt3) = 2^(1/6) sqrt3 / 36

    Scalar c1 = lead * (Scalar(18) * fm - Scalar(3) * Scalar(Alg::cbrt2()) * f + Scalar(4) * b * b * f);
    Scalar c2 = lead * (Scalar(18) * fm + Scalar(3) * Scalar(Alg::cbrt2()) * f - Scalar(4) * b * b * f);
    Scalar c3 = -lead * (Scalar(18) * fm + Scalar(3) * Scalar(Alg::cbrt2()) * f + Scalar(4) * b * b * f);
    Scalar c4 = lead * (Scalar(-18) * fm + Scalar(3) * Scalar(Alg::cbrt2()) * f + Scalar(4) * b * b * f);
    om.add_term({0, 1, 2}, c1);
    om.add_term({1, 4, 6}, -c1);
    om.add_term({0, 1, 4}, c2);
    om.add_term({1, 2, 6}, c2);
    om.add_term({0, 2, 5}, c3);
    om.add_term({4, 5, 6}, -c3);
    om.add_term({0, 4, 5}, c4);
    om.add_term({2, 5, 6}, c4);

    // the rational-coefficient term as printed
    Scalar num = Scalar(Alg::two_pow_sixths(1)) * b *
                 (Scalar(3) * Scalar(Alg::radical(Q(1), 4, 0)) - b * f);
    Scalar den = Scalar(Alg::sqrt3()) * (Scalar(-3) + Scalar(Alg::cbrt2()) * b * f);
    Scalar c5 = -(num / den);
    om.add_term({0, 1, 6}, c5);
    om.add_term({1, 2, 4}, c5);

    Scalar c6 = Scalar(Alg::cbrt2()) * Scalar(Q(1, 3)) * b * f;
    om.add_term({0, 2, 3}, -c6);
    om.add_term({0, 3, 4}, -c6);
    om.add_term({2, 3, 6}, c6);
    om.add_term({3, 4, 6}, c6);

    om.add_term({0, 3, 6}, Scalar(1));
    om.add_term({1, 3, 5}, Scalar(1));
    om.add_term({2, 3, 4}, Scalar(1));

    Scalar c8 = Scalar(Alg::radical(Q(1, 3), 5, 1)) * b;  // 2^(5/6) b / sqrt3
    om.add_term({0, 5, 6}, c8);
    om.add_term({2, 4, 5}, -c8);
    return om;
}

std::vector<Scalar> two_spinor_vector(const Spinor& psi, const Spinor& phi) {
    const SpinRep& rep = spin_rep();
    std::vector<Scalar> v(7, Scalar(0));
    for (int i = 0; i < 7; ++i) {
        Scalar pairing = spin_product(sigma_apply(i, psi), phi);
        v[static_cast<size_t>(i)] = Scalar(Q(rep.eps[static_cast<size_t>(i)])) * pairing;
    }
    return v;
}

}  // namespace g2a
