#include "g2a/frames.hpp"

#include <stdexcept>

namespace g2a {

FrameMetric::FrameMetric(Coframe cf, Mat<Alg> g) : cf_(std::move(cf)), g_(std::move(g)) {
    auto inv = inverse_of(g_);
    if (!inv) throw std::domain_error("frame metric components not invertible");
    ginv_ = *inv;
}

std::pair<int, int> FrameMetric::signature() const {
    // Congruence diagonalization over the constant field, then exact signs.
    const int n = dim();
    Mat<Alg> m = g_;
    int pos = 0, neg = 0;
    std::vector<bool> done(static_cast<size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (!done[static_cast<size_t>(i)] && !m(static_cast<size_t>(i), static_cast<size_t>(i)).is_zero()) { piv = i; break; }
        if (piv < 0) {
            // find a hyperbolic pair and rotate it onto the diagonal
            int a = -1, c = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[static_cast<size_t>(i)]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[static_cast<size_t>(j)]) continue;
                    if (!m(static_cast<size_t>(i), static_cast<size_t>(j)).is_zero()) { a = i; c = j; break; }
                }
            }
            if (a < 0) break;  // remaining block is zero
            // row/col_a += row/col_c makes m(a,a) = 2 m(a,c) (+ m(c,c)) nonzero
            for (int j = 0; j < n; ++j) m(static_cast<size_t>(a), static_cast<size_t>(j)) += m(static_cast<size_t>(c), static_cast<size_t>(j));
            for (int i = 0; i < n; ++i) m(static_cast<size_t>(i), static_cast<size_t>(a)) += m(static_cast<size_t>(i), static_cast<size_t>(c));
            piv = a;
            if (m(static_cast<size_t>(piv), static_cast<size_t>(piv)).is_zero())
                throw std::logic_error("signature pivot construction failed");
        }
        Alg d = m(static_cast<size_t>(piv), static_cast<size_t>(piv));
        (d.sign() > 0 ? pos : neg) += 1;
        done[static_cast<size_t>(piv)] = true;
        // congruence clear: the symmetric column update vanishes identically
        // once the row update has zeroed m(i, piv), so rows suffice
        Alg dinv = d.inverse();
        for (int i = 0; i < n; ++i) {
            if (i == piv || done[static_cast<size_t>(i)]) continue;
            Alg f = m(static_cast<size_t>(i), static_cast<size_t>(piv)) * dinv;
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                m(static_cast<size_t>(i), static_cast<size_t>(j)) -= f * m(static_cast<size_t>(piv), static_cast<size_t>(j));
        }
        for (int i = 0; i < n; ++i)
            if (i != piv) m(static_cast<size_t>(i), static_cast<size_t>(piv)) = Alg();
        for (int j = 0; j < n; ++j)
            if (j != piv) m(static_cast<size_t>(piv), static_cast<size_t>(j)) = Alg();
    }
    return {pos, neg};
}

Mat<Scalar> FrameMetric::coordinate_components() const {
    const int n = dim();
    const Mat<Scalar>& M = cf_.matrix();
    Mat<Scalar> out(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            Scalar s;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Alg& gij = g_(static_cast<size_t>(i), static_cast<size_t>(j));
                    if (gij.is_zero()) continue;
                    Scalar prod = M(static_cast<size_t>(i), static_cast<size_t>(c)) * M(static_cast<size_t>(j), static_cast<size_t>(d));
                    if (!prod.is_zero()) s += Scalar(gij) * prod;
                }
            out(static_cast<size_t>(c), static_cast<size_t>(d)) = s;
        }
    return out;
}

Form ConnectionForms::form_lower(int i, int j, const FrameMetric& fm) const {
    Form f(fm.coframe().chart(), 1, fm.coframe().name());
    for (int k = 0; k < n_; ++k) f.add_term({k}, at(i, j, k));
    return f;
}

Scalar ConnectionForms::upper(int i, int j, int k, const FrameMetric& fm) const {
    Scalar s;
    for (int m = 0; m < n_; ++m) {
        const Alg& gim = fm.ginv()(static_cast<size_t>(i), static_cast<size_t>(m));
        if (gim.is_zero()) continue;
        if (!at(m, j, k).is_zero()) s += Scalar(gim) * at(m, j, k);
    }
    return s;
}

Tensor::Tensor(int n, int rank) : n_(n), rank_(rank) {
    size_t sz = 1;
    for (int i = 0; i < rank; ++i) sz *= static_cast<size_t>(n);
    a_.resize(sz);
}

size_t Tensor::flat(const std::vector<int>& idx) const {
    size_t f = 0;
    for (int i : idx) f = f * static_cast<size_t>(n_) + static_cast<size_t>(i);
    return f;
}

bool Tensor::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

ConnectionForms levi_civita(const FrameMetric& fm) {
    const int n = fm.dim();
    const Coframe& cf = fm.coframe();

    // structure coefficients: d theta^i = 1/2 a^i_{jk} theta^j ^ theta^k
    std::vector<Form> dtheta;
    dtheta.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        dtheta.push_back(change_basis(exterior_d(cf.row_form(i), nullptr), nullptr, &cf));

    // lowered a_{ijk} = g_im a^m_{jk}, antisymmetric in (j,k)
    Tensor a(n, 3);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                Scalar v;
                for (int m = 0; m < n; ++m) {
                    const Alg& gim = fm.g()(static_cast<size_t>(i), static_cast<size_t>(m));
                    if (gim.is_zero()) continue;
                    Scalar c = dtheta[static_cast<size_t>(m)].coeff({j, k});
                    if (!c.is_zero()) v += Scalar(gim) * c;
                }
                a.at({i, j, k}) = v;
                a.at({i, k, j}) = -v;
            }

    ConnectionForms conn(n);
    const Scalar half{Q(1, 2)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                conn.at(i, j, k) = half * (a.at({i, j, k}) + a.at({j, k, i}) - a.at({k, i, j}));

    // verify antisymmetry and the structure equation before returning
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < n; ++k)
                if (!(conn.at(i, j, k) + conn.at(j, i, k)).is_zero())
                    throw std::logic_error("levi_civita: antisymmetry failed");
    for (int i = 0; i < n; ++i) {
        Form torsion = dtheta[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            Form gij(cf.chart(), 1, cf.name());
            for (int k = 0; k < n; ++k) gij.add_term({k}, conn.upper(i, j, k, fm));
            Form tj(cf.chart(), 1, cf.name());
            tj.add_term({j}, Scalar(1));
            torsion = torsion + wedge(gij, tj);
        }
        if (!torsion.is_zero()) throw std::logic_error("levi_civita: torsion check failed");
    }
    return conn;
}

Tensor tensor_from_mat(const Mat<Scalar>& m) {
    Tensor t(static_cast<int>(m.rows()), 2);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            t.at({static_cast<int>(i), static_cast<int>(j)}) = m(i, j);
    return t;
}

Mat<Scalar> mat_from_tensor(const Tensor& t) {
    Mat<Scalar> m(static_cast<size_t>(t.dim()), static_cast<size_t>(t.dim()));
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) m(static_cast<size_t>(i), static_cast<size_t>(j)) = t.at({i, j});
    return m;
}

Tensor kulkarni_nomizu(const Mat<Scalar>& h, const Mat<Alg>& g) {
    const int n = static_cast<int>(h.rows());
    Tensor t(n, 4);
    auto gs = [&](int i, int j) { return Scalar(g(static_cast<size_t>(i), static_cast<size_t>(j))); };
    auto hs = [&](int i, int j) { return h(static_cast<size_t>(i), static_cast<size_t>(j)); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    t.at({i, j, k, l}) =
                        hs(i, k) * gs(j, l) + hs(j, l) * gs(i, k) - hs(i, l) * gs(j, k) - hs(j, k) * gs(i, l);
    return t;
}

Mat<Scalar> sym2_frame_to_coords(const Mat<Scalar>& h, const Coframe& cf) {
    const int n = cf.dim();
    const Mat<Scalar>& M = cf.matrix();
    Mat<Scalar> out(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
        for (int d = c; d < n; ++d) {
            Scalar s;
            for (int i = 0; i < n; ++i) {
                if (M(static_cast<size_t>(i), static_cast<size_t>(c)).is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    const Scalar& hij = h(static_cast<size_t>(i), static_cast<size_t>(j));
                    if (hij.is_zero() || M(static_cast<size_t>(j), static_cast<size_t>(d)).is_zero()) continue;
                    s += M(static_cast<size_t>(i), static_cast<size_t>(c)) * hij *
                         M(static_cast<size_t>(j), static_cast<size_t>(d));
                }
            }
            out(static_cast<size_t>(c), static_cast<size_t>(d)) = s;
            out(static_cast<size_t>(d), static_cast<size_t>(c)) = s;
        }
    return out;
}

Tensor cov_deriv(const Tensor& t, const FrameMetric& fm, const ConnectionForms& conn) {
    const int n = t.dim();
    const int r = t.rank();
    Tensor out(n, r + 1);
    std::vector<int> idx(static_cast<size_t>(r));
    // iterate over all multi-indices
    size_t total = 1;
    for (int i = 0; i < r; ++i) total *= static_cast<size_t>(n);
    for (size_t f = 0; f < total; ++f) {
        size_t rem = f;
        for (int i = r - 1; i >= 0; --i) {
            idx[static_cast<size_t>(i)] = static_cast<int>(rem % static_cast<size_t>(n));
            rem /= static_cast<size_t>(n);
        }
        const Scalar& v = t.at(idx);
        for (int m = 0; m < n; ++m) {
            Scalar d = fm.coframe().frame_derive(m, v);
            std::vector<int> slot = idx;
            for (int s = 0; s < r; ++s) {
                int orig = idx[static_cast<size_t>(s)];
                for (int nn = 0; nn < n; ++nn) {
                    Scalar gcoef = conn.upper(nn, orig, m, fm);
                    if (gcoef.is_zero()) continue;
                    slot[static_cast<size_t>(s)] = nn;
                    const Scalar& tv = t.at(slot);
                    if (!tv.is_zero()) d -= gcoef * tv;
                }
                slot[static_cast<size_t>(s)] = orig;
            }
            std::vector<int> oidx = idx;
            oidx.push_back(m);
            out.at(oidx) = d;
        }
    }
    return out;
}

Form CurvaturePack::weyl_form(int i, int j) const {
    const Coframe& cf = fm.coframe();
    Form f(cf.chart(), 2, cf.name());
    for (int k = 0; k < fm.dim(); ++k)
        for (int l = k + 1; l < fm.dim(); ++l) f.add_term({k, l}, weyl.at({i, j, k, l}));
    return f;
}

Form CurvaturePack::cotton_form(int i) const {
    const Coframe& cf = fm.coframe();
    Form f(cf.chart(), 2, cf.name());
    for (int j = 0; j < fm.dim(); ++j)
        for (int k = j + 1; k < fm.dim(); ++k) f.add_term({j, k}, cotton.at({i, j, k}));
    return f;
}

Form CurvaturePack::gamma_form(int i, int j) const { return conn.form_lower(i, j, fm); }

CurvaturePack curvature_pack(const FrameMetric& fm, const CurvatureOptions& opt) {
    const int n = fm.dim();
    const Coframe& cf = fm.coframe();
    CurvaturePack pack;
    pack.fm = fm;
    pack.conn = levi_civita(fm);
    const ConnectionForms& conn = pack.conn;

    // curvature 2-forms Omega^i_j, then lowered components
    pack.riemann = Tensor(n, 4);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Form gij(cf.chart(), 1, cf.name());
            for (int k = 0; k < n; ++k) gij.add_term({k}, conn.upper(i, j, k, fm));
            Form omega = exterior_d(gij, &cf);
            for (int k = 0; k < n; ++k) {
                Form gik(cf.chart(), 1, cf.name());
                for (int m = 0; m < n; ++m) gik.add_term({m}, conn.upper(i, k, m, fm));
                Form gkj(cf.chart(), 1, cf.name());
                for (int m = 0; m < n; ++m) gkj.add_term({m}, conn.upper(k, j, m, fm));
                omega = omega + wedge(gik, gkj);
            }
            if (convention::riemann_sign < 0) omega = -omega;
            // lower the first index and read components
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    Scalar c = omega.coeff({k, l});
                    if (c.is_zero()) continue;
                    for (int m = 0; m < n; ++m) {
                        const Alg& gmi = fm.g()(static_cast<size_t>(m), static_cast<size_t>(i));
                        if (gmi.is_zero()) continue;
                        pack.riemann.at({m, j, k, l}) += Scalar(gmi) * c;
                        pack.riemann.at({m, j, l, k}) -= Scalar(gmi) * c;
                    }
                }
        }
    }

    if (opt.verify_symmetries) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const Scalar& r = pack.riemann.at({i, j, k, l});
                        if (!(r + pack.riemann.at({j, i, k, l})).is_zero())
                            throw std::logic_error("riemann: antisymmetry (ij) failed");
                        if (!(r - pack.riemann.at({k, l, i, j})).is_zero())
                            throw std::logic_error("riemann: pair symmetry failed");
                        Scalar bianchi = r + pack.riemann.at({i, k, l, j}) + pack.riemann.at({i, l, j, k});
                        if (!bianchi.is_zero())
                            throw std::logic_error("riemann: first Bianchi failed");
                    }
    }

    pack.ricci = Mat<Scalar>(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            Scalar s;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    const Alg& gik = fm.ginv()(static_cast<size_t>(i), static_cast<size_t>(k));
                    if (gik.is_zero()) continue;
                    const Scalar& r = pack.riemann.at({i, j, k, l});
                    if (!r.is_zero()) s += Scalar(gik) * r;
                }
            pack.ricci(static_cast<size_t>(j), static_cast<size_t>(l)) = s;
        }

    pack.scal = Scalar(0);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            const Alg& gjl = fm.ginv()(static_cast<size_t>(j), static_cast<size_t>(l));
            if (!gjl.is_zero()) pack.scal += Scalar(gjl) * pack.ricci(static_cast<size_t>(j), static_cast<size_t>(l));
        }

    if (n >= 3) {
        pack.schouten = Mat<Scalar>(static_cast<size_t>(n), static_cast<size_t>(n));
        Scalar trace_part = pack.scal / Scalar(Q(2 * (n - 1)));
        Scalar inv_nm2 = Scalar(Q(1, n - 2));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                pack.schouten(static_cast<size_t>(i), static_cast<size_t>(j)) =
                    (pack.ricci(static_cast<size_t>(i), static_cast<size_t>(j)) - trace_part * fm.g_s(i, j)) * inv_nm2;
    }

    if (opt.want_weyl_cotton && n >= 4) {
        Tensor kn = kulkarni_nomizu(pack.schouten, fm.g());
        pack.weyl = Tensor(n, 4);
        for (size_t f = 0; f < pack.weyl.data().size(); ++f)
            pack.weyl.data()[f] = pack.riemann.data()[f] - kn.data()[f];

        if (opt.verify_symmetries) {
            // total trace-freeness of the Weyl tensor
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    Scalar s;
                    for (int i = 0; i < n; ++i)
                        for (int k = 0; k < n; ++k) {
                            const Alg& gik = fm.ginv()(static_cast<size_t>(i), static_cast<size_t>(k));
                            if (gik.is_zero()) continue;
                            const Scalar& w = pack.weyl.at({i, j, k, l});
                            if (!w.is_zero()) s += Scalar(gik) * w;
                        }
                    if (!s.is_zero()) throw std::logic_error("weyl: trace failed");
                }
        }
    }

    if (opt.want_weyl_cotton && n >= 3) {
        Tensor dp = cov_deriv(tensor_from_mat(pack.schouten), fm, conn);
        pack.cotton = Tensor(n, 3);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Scalar c = dp.at({k, i, j}) - dp.at({j, i, k});
                    if (convention::cotton_sign < 0) c = -c;
                    pack.cotton.at({i, j, k}) = c;
                }
    }

    return pack;
}

}  // namespace g2a
