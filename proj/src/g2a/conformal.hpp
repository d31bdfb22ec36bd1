#pragma once

#include "g2a/nurowski.hpp"

namespace g2a {

enum class Obstruction { Obstructed, Unobstructed, Undecided };

const char* obstruction_name(Obstruction o);

/// Rescales ghat = scale^2 g by scaling the coframe, keeping frame components
/// constant; scale = e^Upsilon.
FrameMetric rescale_metric(const FrameMetric& fm, const Scalar& scale);

/// Schouten transformation law P - Hess(U) + dU (x) dU - 1/2 |dU|^2 g in the
/// unscaled frame, for U = log(scale) (only dU enters, so scale may be any
/// nonzero rational function).
Mat<Scalar> schouten_transform(const CurvaturePack& pack, const Scalar& scale);

/// Verifies the law against the full curvature pipeline on the rescaled
/// metric (P-hat of scale^2 g, pulled back to the unscaled frame).
bool verify_schouten_transform(const CurvaturePack& pack, const Scalar& scale);

/// Trace-free residual of Hess(sigma) + sigma P (the Einstein-scale
/// equation); zero iff sigma^-2 g is Einstein.
Mat<Scalar> einstein_scale_residual(const CurvaturePack& pack, const Scalar& sigma);

/// Solution set of C + W(T,.,.,.) = 0 over the scalar field.
struct CottonObstruction {
    Obstruction status = Obstruction::Undecided;
    std::vector<Scalar> particular;  // a solution when consistent
    Mat<Scalar> kernel;              // solution space directions
    std::string witness_id;          // inconsistent component, e.g. "C(T)_314"
    Scalar witness_value;
    std::vector<std::string> steps;
};

CottonObstruction conformal_cotton_obstruction(const CurvaturePack& pack);

/// C(T)_{jkl} = C_{jkl} + W_{ijkl} T^i for a frame vector T.
Scalar cotton_of_vector(const CurvaturePack& pack, const std::vector<Scalar>& T, int j, int k,
                        int l);

/// For a one-parameter family T = f tau of cotton-obstruction solutions,
/// decides whether some nonzero f makes g(T, .) exact.
struct GradientObstruction {
    Obstruction status = Obstruction::Undecided;
    Form forcing;  // the 4-form multiplying f in d(f tau) ^ (span wedge)
    std::string detail;
};

GradientObstruction gradient_obstruction(const CurvaturePack& pack,
                                         const std::vector<Scalar>& tau_vector);

/// Null-line case analysis (cases a-d). alpha, beta, gamma stay symbolic.
struct NullLineVerdict {
    Obstruction status = Obstruction::Undecided;
    std::vector<std::string> steps;  // dependency ledger of the staged forcing
    std::string forced_id;
    Scalar forced_scalar;  // the nonzero scalar completing the exclusion
};

NullLineVerdict null_line_obstruction(char which_case, const Params& ps,
                                      const CurvaturePack& pack);

}  // namespace g2a
