#pragma once

#include "g2a/forms.hpp"
#include "g2a/frames.hpp"

namespace g2a {

/// Metric given by symmetric coordinate components over a chart.
struct CoordMetric {
    Chart chart;
    Mat<Scalar> g;
};

/// Symbolic coordinate curvature: Christoffel symbols, lowered Riemann,
/// Ricci and scalar. Sign conventions match the frame pipeline.
struct CoordCurvature {
    CoordMetric m;
    Mat<Scalar> ginv;
    Tensor christoffel;  // Gamma^k_{ij}, index order (k, i, j)
    Tensor riemann;      // lowered R_{ijkl}
    Mat<Scalar> ricci;
    Scalar scal;
};

CoordCurvature coord_curvature(const CoordMetric& m, bool want_riemann = true);

/// Exact curvature at a point straight from second partials of the metric
/// components; shares no code path with the frame pipeline, so it serves as
/// an independent oracle.
struct PointCurvature {
    Mat<Alg> g, ginv;
    std::vector<Alg> christoffel;  // Gamma^k_{ij} packed (k*n+i)*n+j
    std::vector<Alg> riemann;      // lowered R_{ijkl} packed
    Mat<Alg> ricci;
    Alg scal;
};

PointCurvature coord_curvature_at(const CoordMetric& m, const EvalPoint& pt);

}  // namespace g2a
