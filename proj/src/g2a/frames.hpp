#pragma once

#include <string>
#include <vector>

#include "g2a/forms.hpp"

namespace g2a {

// Curvature conventions, calibrated once against the published closed-form
// component lists for the 5-dim family and then frozen. Reports embed these.
namespace convention {
inline constexpr int riemann_sign = 1;  // Omega^i_j := riemann_sign (dGamma^i_j + Gamma^i_k ^ Gamma^k_j)
inline constexpr int cotton_sign = 1;    // C_ijk := cotton_sign (nabla_j P_ki - nabla_k P_ji)
inline const char* const ricci_contraction = "Ric_jl = g^{ik} R_{ijkl}";
}  // namespace convention

/// Symmetric 2-tensor components in a named frame basis.
struct Sym2 {
    std::string basis;
    Mat<Scalar> c;

    static Sym2 zero(const std::string& basis, int n) { return {basis, Mat<Scalar>(static_cast<size_t>(n), static_cast<size_t>(n))}; }
    bool is_zero() const { return c.is_zero(); }
};

/// Metric with constant components in a fixed coframe.
class FrameMetric {
public:
    FrameMetric() = default;
    FrameMetric(Coframe cf, Mat<Alg> g);

    const Coframe& coframe() const { return cf_; }
    int dim() const { return cf_.dim(); }
    const Mat<Alg>& g() const { return g_; }
    const Mat<Alg>& ginv() const { return ginv_; }
    Scalar g_s(int i, int j) const { return Scalar(g_(static_cast<size_t>(i), static_cast<size_t>(j))); }
    Scalar ginv_s(int i, int j) const { return Scalar(ginv_(static_cast<size_t>(i), static_cast<size_t>(j))); }

    /// (positives, negatives) of the constant component matrix.
    std::pair<int, int> signature() const;

    /// The metric as a coordinate symmetric 2-tensor: M^T g M.
    Mat<Scalar> coordinate_components() const;

private:
    Coframe cf_;
    Mat<Alg> g_, ginv_;
};

/// Lowered Levi-Civita connection coefficients Gamma_{ijk} with
/// Gamma_ij = Gamma_{ijk} theta^k, Gamma_{ij} + Gamma_{ji} = 0.
class ConnectionForms {
public:
    ConnectionForms() = default;
    ConnectionForms(int n) : n_(n), c_(static_cast<size_t>(n * n * n)) {}

    int dim() const { return n_; }
    Scalar& at(int i, int j, int k) { return c_[static_cast<size_t>((i * n_ + j) * n_ + k)]; }
    const Scalar& at(int i, int j, int k) const { return c_[static_cast<size_t>((i * n_ + j) * n_ + k)]; }

    Form form_lower(int i, int j, const FrameMetric& fm) const;  // Gamma_{ij}
    /// Gamma^i_{j,k}: theta^k-component of Gamma^i_j.
    Scalar upper(int i, int j, int k, const FrameMetric& fm) const;

private:
    int n_ = 0;
    std::vector<Scalar> c_;
};

/// Dense lowered tensor of arbitrary rank in a frame basis.
class Tensor {
public:
    Tensor() = default;
    Tensor(int n, int rank);

    int dim() const { return n_; }
    int rank() const { return rank_; }
    Scalar& at(const std::vector<int>& idx) { return a_[flat(idx)]; }
    const Scalar& at(const std::vector<int>& idx) const { return a_[flat(idx)]; }
    const std::vector<Scalar>& data() const { return a_; }
    std::vector<Scalar>& data() { return a_; }
    bool is_zero() const;

private:
    int n_ = 0, rank_ = 0;
    std::vector<Scalar> a_;
    size_t flat(const std::vector<int>& idx) const;
};

/// Unique torsion-free metric connection; both defining invariants are
/// verified symbolically before returning.
ConnectionForms levi_civita(const FrameMetric& fm);

/// Full curvature data of a frame metric.
struct CurvaturePack {
    FrameMetric fm;
    ConnectionForms conn;
    Tensor riemann;        // lowered R_{ijkl}
    Mat<Scalar> ricci;     // Ric_jl = g^{ik} R_{ijkl}
    Scalar scal;
    Mat<Scalar> schouten;  // P = (Ric - s g / (2(n-1))) / (n-2)
    Tensor weyl;           // W = R - P (kn) g
    Tensor cotton;         // C_{ijk}, antisymmetric in (j,k)

    Form weyl_form(int i, int j) const;    // W_ij = 1/2 W_ijkl theta^k ^ theta^l
    Form cotton_form(int i) const;         // C_i  = 1/2 C_ijk theta^j ^ theta^k
    Form gamma_form(int i, int j) const;   // Gamma_{ij}
};

struct CurvatureOptions {
    bool verify_symmetries = true;   // symbolic Riemann/Weyl invariant checks
    bool want_weyl_cotton = true;
};

CurvaturePack curvature_pack(const FrameMetric& fm, const CurvatureOptions& opt = {});

/// Frame covariant derivative; appends one lower index (the direction).
Tensor cov_deriv(const Tensor& t, const FrameMetric& fm, const ConnectionForms& conn);

Tensor tensor_from_mat(const Mat<Scalar>& m);
Mat<Scalar> mat_from_tensor(const Tensor& t);

/// Kulkarni-Nomizu product (h kn g)_{ijkl} for symmetric h, g.
Tensor kulkarni_nomizu(const Mat<Scalar>& h, const Mat<Alg>& g);

/// Coordinate components M^T h M of a symmetric tensor given by frame
/// components h in the coframe.
Mat<Scalar> sym2_frame_to_coords(const Mat<Scalar>& h, const Coframe& cf);

}  // namespace g2a
