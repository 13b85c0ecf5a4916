#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "legreg/error.hpp"
#include "legreg/kernels.hpp"
#include "legreg/real.hpp"

namespace legreg {

/// Dense column-major matrix.  Columns are contiguous so they can be handed
/// to the kernels as spans.
template <Real T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return data_[index(r, c)]; }
    const T& operator()(int r, int c) const { return data_[index(r, c)]; }

    std::span<T> col(int c) {
        return {data_.data() + index(0, c), static_cast<std::size_t>(rows_)};
    }
    std::span<const T> col(int c) const {
        return {data_.data() + index(0, c), static_cast<std::size_t>(rows_)};
    }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(c) * static_cast<std::size_t>(rows_) +
               static_cast<std::size_t>(r);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

/// Frobenius norm, with compensated accumulation.
template <Real T>
T frobenius_norm(const Matrix<T>& a) {
    kernels::Sum2T<T> acc;
    for (int c = 0; c < a.cols(); ++c) {
        auto s = kernels::dot2<T>(a.col(c), a.col(c));
        acc.hi += s.hi;
        acc.lo += s.lo;
    }
    using std::sqrt;
    return sqrt(acc.value());
}

/// Minimizes ||y - A beta||_2 by Householder QR of A (never forms A'A).
/// Throws ErrorKind::rank when |R_jj| <= rank_tol * ||A||_F; the message
/// names column j, which is the polynomial degree for design matrices.
template <Real T>
std::vector<T> least_squares_qr(Matrix<T> a, std::vector<T> y, double rank_tol = 1e-12) {
    using std::abs;
    using std::sqrt;
    const int n = a.rows();
    const int p = a.cols();
    if (static_cast<int>(y.size()) != n) {
        throw Error(ErrorKind::shape, "least_squares_qr: right-hand side has " +
                                          std::to_string(y.size()) + " rows, matrix has " +
                                          std::to_string(n));
    }
    if (p > n) {
        throw Error(ErrorKind::rank, "least_squares_qr: " + std::to_string(p) +
                                         " unknowns but only " + std::to_string(n) +
                                         " observations (degree " + std::to_string(p - 1) +
                                         " not identifiable)");
    }
    const T threshold = T(rank_tol) * frobenius_norm(a);
    std::vector<T> diag(static_cast<std::size_t>(p));
    std::span<T> rhs(y);

    for (int j = 0; j < p; ++j) {
        auto v = a.col(j).subspan(static_cast<std::size_t>(j));
        const T norm = sqrt(kernels::dot<T>(v, v));
        if (!(norm > threshold)) {
            throw Error(ErrorKind::rank, "least_squares_qr: numerical rank deficiency at degree " +
                                             std::to_string(j));
        }
        // Reflect v onto -sign(v_0) ||v|| e_0; v becomes the Householder vector.
        const T alpha = v[0] > T(0) ? -norm : norm;
        v[0] -= alpha;
        const T vtv = kernels::dot<T>(v, v);
        const T inv = T(-2) / vtv;
        for (int c = j + 1; c < p; ++c) {
            auto w = a.col(c).subspan(static_cast<std::size_t>(j));
            const T tau = inv * kernels::dot<T>(v, w);
            kernels::axpy<T>(tau, v, w);
        }
        auto r = rhs.subspan(static_cast<std::size_t>(j));
        kernels::axpy<T>(inv * kernels::dot<T>(v, r), v, r);
        diag[static_cast<std::size_t>(j)] = alpha;
    }

    // Back substitution on R beta = (Q'y)[0:p].
    std::vector<T> beta(static_cast<std::size_t>(p));
    for (int j = p - 1; j >= 0; --j) {
        T s = y[static_cast<std::size_t>(j)];
        for (int c = j + 1; c < p; ++c) {
            s -= a(j, c) * beta[static_cast<std::size_t>(c)];
        }
        beta[static_cast<std::size_t>(j)] = s / diag[static_cast<std::size_t>(j)];
    }
    return beta;
}

}  // namespace legreg
