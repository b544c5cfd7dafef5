#include "transforms.hpp"

#include <cmath>
#include <numbers>

#include "util.hpp"

namespace weyldft {

Transform::Transform(const RootSystemData& R, SignHom sigma, Int M, Int weyl_cap, bool relaxed)
    : R_(R), sigma_(sigma), M_(M) {
    require_level(R_, sigma_, M_, relaxed);
    W_ = std::make_shared<WeylGroup>(R_, weyl_cap);
    F_ = point_set(R_, sigma_, M_, relaxed);
    GammaGroup G(R_);
    L_ = weight_set_P(R_, G, sigma_, M_, relaxed);

    roots_.resize(M_);
    for (Int k = 0; k < M_; ++k) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(M_);
        roots_[k] = Complex(std::cos(t), std::sin(t));
    }

    const std::size_t rows = L_.weights.size(), cols = F_.points.size();
    if (rows * cols > 0 && static_cast<Int>(rows) * static_cast<Int>(cols) <= kMatrixEntryCap) {
        matrix_.resize(rows * cols);
        parallel_for(rows, [&](std::size_t li) {
            std::vector<Complex> row = basis_row(li);
            std::copy(row.begin(), row.end(), matrix_.begin() + li * cols);
        });
        have_matrix_ = true;
    }
}

std::vector<Complex> Transform::label_row(const IntVec& lambda) const {
    const int n = R_.rank;
    const std::size_t cols = F_.points.size();
    std::vector<Complex> row(cols, Complex(0.0, 0.0));
    for (const WeylElement& w : W_->elements()) {
        IntVec wl = mat_vec(w.mat, lambda);
        double sgn = W_->sign_of(sigma_, w);
        for (std::size_t si = 0; si < cols; ++si) {
            Int phase = 0;
            const IntVec& q = F_.points[si].q;
            for (int j = 0; j < n; ++j) phase += wl[j] * q[j];
            Int k = phase % M_;
            if (k < 0) k += M_;
            row[si] += sgn * roots_[k];
        }
    }
    return row;
}

std::vector<Complex> Transform::basis_row(std::size_t li) const {
    const IntVec& kac = L_.weights[li].kac;
    IntVec lambda(kac.begin() + 1, kac.end());
    return label_row(lambda);
}

Complex Transform::basis(std::size_t li, std::size_t si) const {
    if (have_matrix_) return matrix_[li * F_.points.size() + si];
    const IntVec& kac = L_.weights[li].kac;
    IntVec lambda(kac.begin() + 1, kac.end());
    return eval_label(lambda, si);
}

double Transform::basis_cas(std::size_t li, std::size_t si) const {
    Complex v = basis(li, si);
    return v.real() + v.imag();
}

Complex Transform::eval_label(const IntVec& lambda, std::size_t si) const {
    const int n = R_.rank;
    Complex acc(0.0, 0.0);
    const IntVec& q = F_.points[si].q;
    for (const WeylElement& w : W_->elements()) {
        IntVec wl = mat_vec(w.mat, lambda);
        Int phase = 0;
        for (int j = 0; j < n; ++j) phase += wl[j] * q[j];
        Int k = phase % M_;
        if (k < 0) k += M_;
        acc += static_cast<double>(W_->sign_of(sigma_, w)) * roots_[k];
    }
    return acc;
}

Complex Transform::eval_label_at(const IntVec& lambda, const RatVec& a) const {
    const int n = R_.rank;
    Complex acc(0.0, 0.0);
    for (const WeylElement& w : W_->elements()) {
        IntVec wl = mat_vec(w.mat, lambda);
        Rat phase(0);
        for (int j = 0; j < n; ++j) phase += Rat(wl[j]) * a[j];
        double t = 2.0 * std::numbers::pi * boost::rational_cast<double>(phase);
        acc += static_cast<double>(W_->sign_of(sigma_, w)) * Complex(std::cos(t), std::sin(t));
    }
    return acc;
}

double Transform::norm(std::size_t li) const {
    return static_cast<double>(W_->size()) *
           std::pow(static_cast<double>(M_), static_cast<double>(R_.rank)) *
           static_cast<double>(L_.weights[li].h);
}

Complex Transform::scalar_product(const std::vector<Complex>& f,
                                  const std::vector<Complex>& g) const {
    if (f.size() != F_.points.size() || g.size() != F_.points.size())
        fail(ErrorCode::GridMismatch, "sample vectors do not match the grid size");
    Complex acc(0.0, 0.0);
    for (std::size_t si = 0; si < f.size(); ++si)
        acc += static_cast<double>(F_.points[si].eps) * f[si] * std::conj(g[si]);
    return acc;
}

std::vector<Complex> Transform::forward(const std::vector<Complex>& f) const {
    if (f.size() != F_.points.size())
        fail(ErrorCode::GridMismatch, "sample vector does not match the grid size");
    std::vector<Complex> c(L_.weights.size());
    parallel_for(L_.weights.size(), [&](std::size_t li) {
        std::vector<Complex> row;
        const Complex* basis_ptr;
        if (have_matrix_) {
            basis_ptr = matrix_.data() + li * F_.points.size();
        } else {
            row = basis_row(li);
            basis_ptr = row.data();
        }
        Complex acc(0.0, 0.0);
        for (std::size_t si = 0; si < f.size(); ++si)
            acc += static_cast<double>(F_.points[si].eps) * f[si] * std::conj(basis_ptr[si]);
        c[li] = acc / norm(li);
    });
    return c;
}

std::vector<Complex> Transform::inverse(const std::vector<Complex>& c) const {
    if (c.size() != L_.weights.size())
        fail(ErrorCode::GridMismatch, "spectrum does not match the label count");
    std::vector<Complex> f(F_.points.size(), Complex(0.0, 0.0));
    std::vector<std::vector<Complex>> rows;
    if (!have_matrix_) {
        rows.resize(c.size());
        parallel_for(c.size(), [&](std::size_t li) { rows[li] = basis_row(li); });
    }
    parallel_for(F_.points.size(), [&](std::size_t si) {
        Complex acc(0.0, 0.0);
        for (std::size_t li = 0; li < c.size(); ++li) {
            const Complex& b =
                have_matrix_ ? matrix_[li * F_.points.size() + si] : rows[li][si];
            acc += c[li] * b;
        }
        f[si] = acc;
    });
    return f;
}

std::vector<double> Transform::hartley_forward(const std::vector<double>& f) const {
    if (f.size() != F_.points.size())
        fail(ErrorCode::GridMismatch, "sample vector does not match the grid size");
    std::vector<double> d(L_.weights.size());
    parallel_for(L_.weights.size(), [&](std::size_t li) {
        double acc = 0.0;
        for (std::size_t si = 0; si < f.size(); ++si)
            acc += static_cast<double>(F_.points[si].eps) * f[si] * basis_cas(li, si);
        d[li] = acc / norm(li);
    });
    return d;
}

std::vector<double> Transform::hartley_inverse(const std::vector<double>& d) const {
    if (d.size() != L_.weights.size())
        fail(ErrorCode::GridMismatch, "spectrum does not match the label count");
    std::vector<double> f(F_.points.size(), 0.0);
    parallel_for(F_.points.size(), [&](std::size_t si) {
        double acc = 0.0;
        for (std::size_t li = 0; li < d.size(); ++li) acc += d[li] * basis_cas(li, si);
        f[si] = acc;
    });
    return f;
}

Complex Transform::interpolate(const std::vector<Complex>& c, const RatVec& a) const {
    if (c.size() != L_.weights.size())
        fail(ErrorCode::GridMismatch, "spectrum does not match the label count");
    Complex acc(0.0, 0.0);
    for (std::size_t li = 0; li < c.size(); ++li) {
        const IntVec& kac = L_.weights[li].kac;
        IntVec lambda(kac.begin() + 1, kac.end());
        acc += c[li] * eval_label_at(lambda, a);
    }
    return acc;
}

void Transform::corrupt_epsilon(std::size_t si, Int value) {
    if (si < F_.points.size()) F_.points[si].eps = value;
}

}  // namespace weyldft
