#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2a/linalg.hpp"
#include "g2a/scalar.hpp"

namespace g2a {

/// Ordered coordinate chart; coordinates are generator ids.
struct Chart {
    std::string name;
    std::vector<int> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    int index_of(int gen) const;
    bool operator==(const Chart& o) const { return name == o.name && coords == o.coords; }
};

Chart chart_m();        // (x, y, z, p, q)
Chart chart_ambient();  // (t, u, x, y, z, p, q)

/// Strictly increasing index tuple into a chart/coframe basis.
using Idx = std::vector<int>;

/// Sorts a tuple and returns the permutation sign; 0 on repeated index.
int sort_sign(Idx& idx);

/// Degree-k form over a chart, in either the coordinate-differential basis
/// (basis == "") or a named coframe basis. Absent tuples are zero.
class Form {
public:
    Form() = default;
    Form(Chart chart, int degree, std::string basis = "")
        : chart_(std::move(chart)), degree_(degree), basis_(std::move(basis)) {}

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::string& basis() const { return basis_; }
    const std::map<Idx, Scalar>& comps() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }
    Scalar coeff(Idx idx) const;             // any order; sign-adjusted
    void add_term(Idx idx, const Scalar& c); // any order; sign-adjusted

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const { return scaled(Scalar(-1)); }
    Form scaled(const Scalar& c) const;

    std::string str() const;

private:
    Chart chart_;
    int degree_ = 0;
    std::string basis_;
    std::map<Idx, Scalar> comps_;

    void check_compatible(const Form& o) const;
};

/// Invertible square matrix of 1-forms over a chart: row i gives the coframe
/// form theta^i in coordinate differentials. The inverse is cached, giving the
/// dual frame vectors.
class Coframe {
public:
    Coframe() = default;
    Coframe(std::string name, Chart chart, Mat<Scalar> rows);

    const std::string& name() const { return name_; }
    const Chart& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }
    const Mat<Scalar>& matrix() const { return m_; }
    const Mat<Scalar>& inverse() const { return minv_; }
    Scalar det() const { return det_; }

    Form row_form(int i) const;  // theta^i as a coordinate-basis 1-form

    /// Dual frame vector E_m applied to a scalar: sum_c (M^-1)[c][m] d_c f.
    Scalar frame_derive(int m, const Scalar& f) const;

private:
    std::string name_;
    Chart chart_;
    Mat<Scalar> m_, minv_;
    Scalar det_;
};

Form wedge(const Form& a, const Form& b);
Form exterior_d(const Form& a, const Coframe* cf = nullptr);

/// Structure 2-forms d xi^i of a coframe, expressed in its own basis; feeds
/// the direct frame-basis exterior derivative below.
std::vector<Form> coframe_differentials(const Coframe& cf);

/// d on a coframe-basis form without leaving the frame basis:
/// d(a_I xi^I) = E_m(a_I) xi^m ^ xi^I + a_I sum_pos +- xi^.. ^ dxi^(i_pos) ^ ..
Form exterior_d_frame(const Form& a, const Coframe& cf, const std::vector<Form>& dxi);

/// Rewrites a form in the target basis. Passing a coframe targets its basis;
/// passing nullptr targets coordinate differentials (`from` must then name the
/// coframe the form is currently in).
Form change_basis(const Form& a, const Coframe* from, const Coframe* to);

/// Interior product with the frame vector E_i (form must be in that coframe).
Form interior_frame(int i, const Form& a);

/// Interior product with a coordinate vector field X = sum X^c d_c
/// (form must be in the coordinate basis).
Form interior_vector(const std::vector<Scalar>& xc, const Form& a);

/// Hodge star on a coframe-basis form w.r.t. a constant diagonal frame metric
/// given by signs eps, orientation xi^0 ^ ... ^ xi^(n-1) positive.
Form hodge(const Form& a, const std::vector<int>& eps);

}  // namespace g2a
