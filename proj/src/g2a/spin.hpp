#pragma once

#include "g2a/ambient.hpp"

namespace g2a {

/// The fixed real Cl(4,3) representation: seven 8x8 sigma matrices with
/// entries in {0, +-1} satisfying s_i s_j + s_j s_i = 2 g_ij with
/// g = diag(+,+,+,+,-,-,-), and the invariant split-signature pairing
/// <phi, psi> = -(s4 s5 s6 phi, psi).
struct SpinRep {
    std::array<Mat<Q>, 7> sigma;
    Mat<Q> gram;                      // bilinear form matrix
    std::array<int, 7> eps{{1, 1, 1, 1, -1, -1, -1}};
};

const SpinRep& spin_rep();

/// All 49 anticommutator identities, checked exactly.
bool clifford_check();

using Spinor = std::vector<Scalar>;  // 8 components

Scalar spin_product(const Spinor& phi, const Spinor& psi);

/// Clifford action of a frame vector V = V^i E_i.
Spinor clifford_apply(const std::vector<Scalar>& v, const Spinor& psi);
Spinor sigma_apply(int i, const Spinor& psi);

/// Spin connection in frame directions: Omega_m = 1/4 sum_{k,l} Gamma^{kl}(E_m) s_k s_l.
struct SpinConnection {
    std::array<Mat<Scalar>, 7> omega;
};

SpinConnection spin_connection(const CurvaturePack& pack7);

/// nabla_m psi = E_m(psi) + Omega_m psi; 7 x 8 scalars.
std::vector<Spinor> spinor_derivative(const CurvaturePack& pack7, const SpinConnection& sc,
                                      const Spinor& psi);

/// The published spinor transcription and the exponent-corrected reading
/// (components 5 and 8 carry e^(-bx/3); forced by constancy of <psi,psi>).
Spinor printed_spinor(const Params& ps);
Spinor corrected_spinor(const Params& ps);

struct ParallelSpinor {
    Spinor psi;                 // the engine's verified parallel spinor
    bool printed_passes = false;
    bool corrected_passes = false;
    int transport_kernel_dim = -1;  // kernel of the non-x transport system
    Scalar norm;                // <psi, psi>
    int zero_components = 0;    // of nabla psi (out of 56)
};

/// Verifies the candidate readings and independently solves the parallel
/// transport system (x-dependent ansatz: kernel of the six non-x directions
/// plus the x-direction ODE).
ParallelSpinor parallel_spinor(const CurvaturePack& pack7, const SpinConnection& sc,
                               const Params& ps);

/// Solves g(V, E_i) = -<chi, E_i psi>/<psi,psi>; when chi lies in the image
/// of Clifford multiplication the residual chi - V psi vanishes.
struct CliffordInverse {
    std::vector<Scalar> v;
    Spinor residual;
};
CliffordInverse clifford_invert(const Spinor& psi, const Spinor& chi);

/// The 3-form omega(X,Y,Z) = g(X, A(Y,Z)) with X Y psi - g(X,Y) psi = A(X,Y) psi,
/// in the xi coframe.
Form squaring_3form(const AmbientPack& ap, const Spinor& psi);

/// The published omega transcription (kept verbatim for conformance).
Form printed_omega(const AmbientPack& ap);

/// V with g(V, X) = <X psi, phi> for all X.
std::vector<Scalar> two_spinor_vector(const Spinor& psi, const Spinor& phi);

}  // namespace g2a
