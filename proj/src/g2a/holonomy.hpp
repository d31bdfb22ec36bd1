#pragma once

#include "g2a/spin.hpp"

namespace g2a {

/// Exact rank of the Riemann endomorphism of Lambda^2 at a point
/// (21 x 21 over the constant field).
int riemann_rank(const CurvaturePack& pack7, const EvalPoint& pt);

/// Curvature span at a point: R(E_i, E_j) plus covariant-derivative
/// insertions up to max_order, as so(4,3) matrices.
struct HolonomySpan {
    std::vector<Mat<Alg>> generators;
    std::vector<int> rank_by_order;  // cumulative rank after order 0, 1, 2
    int rank = 0;
    int order_used = 0;
    bool so_relation_ok = true;  // A^T eta + eta A = 0 for every generator
};

HolonomySpan ambrose_singer_span(const CurvaturePack& pack7, const EvalPoint& pt, int max_order);

/// Every span generator annihilates omega at the point (derivation action).
bool stabilizer_check(const HolonomySpan& span, const Form& omega, const EvalPoint& pt);

/// Dimension of the stabilizer of omega at a point inside so(4,3):
/// kernel rank of the 35 x 21 derivation action.
int omega_stabilizer_dim(const Form& omega, const EvalPoint& pt);

/// Dimension of the space of spinors annihilated by the span (spin action);
/// 1 certifies the parallel spinor is unique up to scale at that point.
int span_fixed_spinor_dim(const HolonomySpan& span);

/// The single covariant-derivative component nabla_1 R_1212 at a point
/// (indices in the orthonormal coframe, 0-based internally 1 2 1 2; 1).
Alg non_symmetric_component(const CurvaturePack& pack7, const EvalPoint& pt);

}  // namespace g2a
