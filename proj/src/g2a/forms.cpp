#include "g2a/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2a {

int Chart::index_of(int gen) const {
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == gen) return static_cast<int>(i);
    throw std::domain_error("generator not a coordinate of chart " + name);
}

Chart chart_m() { return Chart{"M", {gens::x, gens::y, gens::z, gens::p, gens::q}}; }

Chart chart_ambient() {
    return Chart{"ambient", {gens::t, gens::u, gens::x, gens::y, gens::z, gens::p, gens::q}};
}

int sort_sign(Idx& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

void Form::check_compatible(const Form& o) const {
    if (!(chart_ == o.chart_) || degree_ != o.degree_ || basis_ != o.basis_)
        throw std::domain_error("form basis/chart/degree mismatch");
}

Scalar Form::coeff(Idx idx) const {
    int s = sort_sign(idx);
    if (s == 0) return Scalar(0);
    auto it = comps_.find(idx);
    if (it == comps_.end()) return Scalar(0);
    return s == 1 ? it->second : -it->second;
}

void Form::add_term(Idx idx, const Scalar& c) {
    if (c.is_zero()) return;
    int s = sort_sign(idx);
    if (s == 0) return;
    Scalar v = s == 1 ? c : -c;
    auto [it, fresh] = comps_.try_emplace(idx, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Form Form::operator+(const Form& o) const {
    check_compatible(o);
    Form r = *this;
    for (const auto& [idx, c] : o.comps_) r.add_term(idx, c);
    return r;
}

Form Form::operator-(const Form& o) const { return *this + o.scaled(Scalar(-1)); }

Form Form::scaled(const Scalar& c) const {
    Form r(chart_, degree_, basis_);
    if (c.is_zero()) return r;
    for (const auto& [idx, v] : comps_) r.add_term(idx, v * c);
    return r;
}

std::string Form::str() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [idx, c] : comps_) {
        if (!out.empty()) out += "  +  ";
        out += "(" + c.str() + ")";
        for (int i : idx) out += " ^" + std::to_string(i);
    }
    return out;
}

Coframe::Coframe(std::string name, Chart chart, Mat<Scalar> rows)
    : name_(std::move(name)), chart_(std::move(chart)), m_(std::move(rows)) {
    if (m_.rows() != static_cast<size_t>(chart_.dim()) || m_.cols() != m_.rows())
        throw std::domain_error("coframe matrix shape mismatch");
    det_ = det_of(m_);
    if (det_.is_zero()) throw std::domain_error("singular coframe " + name_);
    auto inv = inverse_of(m_);
    minv_ = *inv;
}

Form Coframe::row_form(int i) const {
    Form f(chart_, 1, "");
    for (int c = 0; c < dim(); ++c)
        f.add_term({c}, m_(static_cast<size_t>(i), static_cast<size_t>(c)));
    return f;
}

Scalar Coframe::frame_derive(int m, const Scalar& f) const {
    Scalar out;
    for (int c = 0; c < dim(); ++c) {
        const Scalar& w = minv_(static_cast<size_t>(c), static_cast<size_t>(m));
        if (w.is_zero()) continue;
        Scalar df = f.diff(chart_.coords[static_cast<size_t>(c)]);
        if (!df.is_zero()) out += w * df;
    }
    return out;
}

Form wedge(const Form& a, const Form& b) {
    if (!(a.chart() == b.chart()) || a.basis() != b.basis())
        throw std::domain_error("wedge basis mismatch");
    Form r(a.chart(), a.degree() + b.degree(), a.basis());
    if (r.degree() > a.chart().dim()) return r;
    for (const auto& [ia, ca] : a.comps()) {
        for (const auto& [ib, cb] : b.comps()) {
            Idx merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            r.add_term(std::move(merged), ca * cb);
        }
    }
    return r;
}

Form exterior_d(const Form& a, const Coframe* cf) {
    if (a.basis().empty()) {
        Form r(a.chart(), a.degree() + 1, "");
        for (const auto& [idx, c] : a.comps()) {
            for (int ci = 0; ci < a.chart().dim(); ++ci) {
                Scalar dc = c.diff(a.chart().coords[static_cast<size_t>(ci)]);
                if (dc.is_zero()) continue;
                Idx ext;
                ext.reserve(idx.size() + 1);
                ext.push_back(ci);
                ext.insert(ext.end(), idx.begin(), idx.end());
                r.add_term(std::move(ext), dc);
            }
        }
        return r;
    }
    if (!cf || cf->name() != a.basis())
        throw std::domain_error("exterior_d of a coframe-basis form needs its coframe");
    Form coord = change_basis(a, cf, nullptr);
    return change_basis(exterior_d(coord, nullptr), nullptr, cf);
}

namespace {

// Transforms basis covectors e^c = sum_j L[c][j] f^j; coefficients of a
// k-form transform by k x k minors of L.
Form apply_cobasis_map(const Form& a, const Mat<Scalar>& L, const std::string& target_basis) {
    Form r(a.chart(), a.degree(), target_basis);
    const int n = a.chart().dim();
    const int k = a.degree();
    if (k == 0) {
        for (const auto& [idx, c] : a.comps()) r.add_term(idx, c);
        return r;
    }
    // enumerate target tuples
    std::vector<Idx> tuples;
    Idx cur(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            tuples.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);

    for (const auto& [src, c] : a.comps()) {
        for (const auto& dst : tuples) {
            Mat<Scalar> sub(static_cast<size_t>(k), static_cast<size_t>(k));
            bool any_zero_row = false;
            for (int i = 0; i < k && !any_zero_row; ++i) {
                bool nz = false;
                for (int j = 0; j < k; ++j) {
                    sub(static_cast<size_t>(i), static_cast<size_t>(j)) =
                        L(static_cast<size_t>(src[static_cast<size_t>(i)]),
                          static_cast<size_t>(dst[static_cast<size_t>(j)]));
                    nz = nz || !sub(static_cast<size_t>(i), static_cast<size_t>(j)).is_zero();
                }
                any_zero_row = !nz;
            }
            if (any_zero_row) continue;
            Scalar minor = det_of(sub);
            if (minor.is_zero()) continue;
            r.add_term(dst, c * minor);
        }
    }
    return r;
}

}  // namespace

Form change_basis(const Form& a, const Coframe* from, const Coframe* to) {
    if (from && a.basis() != from->name())
        throw std::domain_error("change_basis: form not in claimed source basis");
    if (!from && !a.basis().empty())
        throw std::domain_error("change_basis: source coframe required");
    if (!from && !to) return a;

    if (from && to && from->name() == to->name()) return a;

    // source basis covectors in target basis covectors
    if (from && !to) {
        // theta^i = sum_c M[i][c] dx^c
        return apply_cobasis_map(a, from->matrix(), "");
    }
    if (!from && to) {
        // dx^c = sum_i (M^-1)[c][i]... careful: theta = M dx  =>  dx = M^-1 theta
        return apply_cobasis_map(a, to->inverse(), to->name());
    }
    Form coord = apply_cobasis_map(a, from->matrix(), "");
    return apply_cobasis_map(coord, to->inverse(), to->name());
}

std::vector<Form> coframe_differentials(const Coframe& cf) {
    std::vector<Form> out;
    out.reserve(static_cast<size_t>(cf.dim()));
    for (int i = 0; i < cf.dim(); ++i)
        out.push_back(change_basis(exterior_d(cf.row_form(i), nullptr), nullptr, &cf));
    return out;
}

Form exterior_d_frame(const Form& a, const Coframe& cf, const std::vector<Form>& dxi) {
    if (a.basis() != cf.name())
        throw std::domain_error("exterior_d_frame: form not in the coframe basis");
    Form r(a.chart(), a.degree() + 1, a.basis());
    const int n = cf.dim();
    for (const auto& [idx, c] : a.comps()) {
        for (int m = 0; m < n; ++m) {
            Scalar dm = cf.frame_derive(m, c);
            if (dm.is_zero()) continue;
            Idx ext;
            ext.reserve(idx.size() + 1);
            ext.push_back(m);
            ext.insert(ext.end(), idx.begin(), idx.end());
            r.add_term(std::move(ext), dm);
        }
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            const Form& dx = dxi[static_cast<size_t>(idx[pos])];
            for (const auto& [didx, dc] : dx.comps()) {
                Idx ext;
                ext.reserve(idx.size() + 1);
                for (size_t q = 0; q < pos; ++q) ext.push_back(idx[q]);
                ext.push_back(didx[0]);
                ext.push_back(didx[1]);
                for (size_t q = pos + 1; q < idx.size(); ++q) ext.push_back(idx[q]);
                Scalar v = c * dc;
                r.add_term(std::move(ext), (pos % 2 == 0) ? v : -v);
            }
        }
    }
    return r;
}

Form interior_frame(int i, const Form& a) {
    if (a.basis().empty())
        throw std::domain_error("interior_frame expects a coframe-basis form");
    Form r(a.chart(), a.degree() - 1, a.basis());
    for (const auto& [idx, c] : a.comps()) {
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            if (idx[pos] != i) continue;
            Idx rest;
            for (size_t j = 0; j < idx.size(); ++j)
                if (j != pos) rest.push_back(idx[j]);
            r.add_term(std::move(rest), (pos % 2 == 0) ? c : -c);
        }
    }
    return r;
}

Form interior_vector(const std::vector<Scalar>& xc, const Form& a) {
    if (!a.basis().empty())
        throw std::domain_error("interior_vector expects a coordinate-basis form");
    Form r(a.chart(), a.degree() - 1, "");
    for (const auto& [idx, c] : a.comps()) {
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            const Scalar& xcomp = xc[static_cast<size_t>(idx[pos])];
            if (xcomp.is_zero()) continue;
            Idx rest;
            for (size_t j = 0; j < idx.size(); ++j)
                if (j != pos) rest.push_back(idx[j]);
            r.add_term(std::move(rest), (pos % 2 == 0) ? c * xcomp : -(c * xcomp));
        }
    }
    return r;
}

Form hodge(const Form& a, const std::vector<int>& eps) {
    if (a.basis().empty())
        throw std::domain_error("hodge expects a coframe-basis form");
    const int n = a.chart().dim();
    Form r(a.chart(), n - a.degree(), a.basis());
    for (const auto& [idx, c] : a.comps()) {
        Idx comp;
        std::vector<bool> used(static_cast<size_t>(n), false);
        int sign_metric = 1;
        for (int i : idx) {
            used[static_cast<size_t>(i)] = true;
            sign_metric *= eps[static_cast<size_t>(i)];
        }
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<size_t>(i)]) comp.push_back(i);
        // sign of the permutation (idx, comp) relative to (0..n-1)
        Idx full = idx;
        full.insert(full.end(), comp.begin(), comp.end());
        int s = sort_sign(full);
        r.add_term(comp, (s * sign_metric == 1) ? c : -c);
    }
    return r;
}

}  // namespace g2a
