#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace g2a {

namespace detail {
template <class F>
size_t complexity_of(const F& v) {
    if constexpr (requires { v.complexity(); })
        return v.complexity();
    else
        return 1;
}
}  // namespace detail

/// Dense matrix over an exact field (Q, Alg or Scalar).
template <class F>
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(size_t r, size_t c) : r_(r), c_(c), a_(r * c) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    F& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const F& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::logic_error("matrix shape mismatch");
        Mat out(r_, o.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < c_; ++k) {
                const F& v = (*this)(i, k);
                if (v.is_zero()) continue;
                for (size_t j = 0; j < o.c_; ++j) {
                    if (o(k, j).is_zero()) continue;
                    out(i, j) += v * o(k, j);
                }
            }
        return out;
    }

    Mat operator+(const Mat& o) const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
        return out;
    }
    Mat operator-(const Mat& o) const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
        return out;
    }

    Mat transposed() const {
        Mat out(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    size_t r_, c_;
    std::vector<F> a_;
};

/// Result of Gauss-Jordan elimination of [A | rhs].
template <class F>
struct Echelon {
    Mat<F> a;                      // reduced A
    Mat<F> rhs;                    // reduced right-hand side block
    std::vector<size_t> pivot_col; // pivot column per pivot row
    size_t rank = 0;
};

/// Gauss-Jordan with complexity-guided pivoting (keeps Scalar entries small).
template <class F>
Echelon<F> echelonize(Mat<F> a, Mat<F> rhs) {
    const size_t R = a.rows(), C = a.cols();
    Echelon<F> e;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t best = R;
        size_t best_cx = 0;
        for (size_t i = row; i < R; ++i) {
            if (a(i, col).is_zero()) continue;
            size_t cx = detail::complexity_of(a(i, col));
            if (best == R || cx < best_cx) { best = i; best_cx = cx; }
        }
        if (best == R) continue;
        if (best != row) {
            for (size_t j = 0; j < C; ++j) std::swap(a(row, j), a(best, j));
            for (size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(row, j), rhs(best, j));
        }
        F inv = F(1) / a(row, col);
        for (size_t j = 0; j < C; ++j)
            if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
        for (size_t j = 0; j < rhs.cols(); ++j)
            if (!rhs(row, j).is_zero()) rhs(row, j) = rhs(row, j) * inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            F f = a(i, col);
            for (size_t j = 0; j < C; ++j)
                if (!a(row, j).is_zero()) a(i, j) = a(i, j) - f * a(row, j);
            for (size_t j = 0; j < rhs.cols(); ++j)
                if (!rhs(row, j).is_zero()) rhs(i, j) = rhs(i, j) - f * rhs(row, j);
        }
        e.pivot_col.push_back(col);
        ++row;
    }
    e.rank = row;
    e.a = std::move(a);
    e.rhs = std::move(rhs);
    return e;
}

template <class F>
size_t rank_of(const Mat<F>& a) {
    return echelonize(a, Mat<F>(a.rows(), 0)).rank;
}

/// Columns span the right kernel of A.
template <class F>
Mat<F> kernel_basis(const Mat<F>& a) {
    Echelon<F> e = echelonize(a, Mat<F>(a.rows(), 0));
    const size_t C = a.cols();
    std::vector<bool> is_pivot(C, false);
    for (size_t c : e.pivot_col) is_pivot[c] = true;
    size_t free_count = C - e.rank;
    Mat<F> k(C, free_count);
    size_t out = 0;
    for (size_t c = 0; c < C; ++c) {
        if (is_pivot[c]) continue;
        k(c, out) = F(1);
        for (size_t prow = 0; prow < e.rank; ++prow)
            k(e.pivot_col[prow], out) = -e.a(prow, c);
        ++out;
    }
    return k;
}

/// Affine system A x = b: consistency flag, one particular solution and a
/// kernel basis; when inconsistent, `witness_row` is a row index of the
/// original system whose reduction yields 0 = nonzero.
template <class F>
struct AffineSolution {
    bool consistent = false;
    std::vector<F> particular;
    Mat<F> kernel;
};

template <class F>
AffineSolution<F> solve_affine(const Mat<F>& a, const std::vector<F>& b) {
    Mat<F> rhs(a.rows(), 1);
    for (size_t i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
    Echelon<F> e = echelonize(a, rhs);
    AffineSolution<F> sol;
    for (size_t i = e.rank; i < a.rows(); ++i)
        if (!e.rhs(i, 0).is_zero()) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular.assign(a.cols(), F(0));
    for (size_t prow = 0; prow < e.rank; ++prow)
        sol.particular[e.pivot_col[prow]] = e.rhs(prow, 0);
    sol.kernel = kernel_basis(a);
    return sol;
}

template <class F>
std::optional<Mat<F>> inverse_of(const Mat<F>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    Echelon<F> e = echelonize(a, Mat<F>::identity(a.rows()));
    if (e.rank != a.rows()) return std::nullopt;
    return e.rhs;
}

template <class F>
F det_of(Mat<F> a) {
    if (a.rows() != a.cols()) throw std::logic_error("det of non-square matrix");
    const size_t n = a.rows();
    F det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t i = col; i < n; ++i)
            if (!a(i, col).is_zero()) { piv = i; break; }
        if (piv == n) return F(0);
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det = det * a(col, col);
        F inv = F(1) / a(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            F f = a(i, col) * inv;
            for (size_t j = col; j < n; ++j)
                if (!a(col, j).is_zero()) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return det;
}

}  // namespace g2a
