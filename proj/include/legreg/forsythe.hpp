#pragma once

// Forsythe's discretely orthogonal polynomials over the sample abscissae:
//
//   p_0 = 1,  p_{-1} = 0,
//   p_{k+1}(x) = (x - alpha_{k+1}) p_k(x) - beta_k p_{k-1}(x),
//   alpha_{k+1} = sum x_i p_k(x_i)^2 / N_k,   beta_k = N_k / N_{k-1},
//   N_k = sum p_k(x_i)^2.
//
// With this basis the normal equations are diagonal and b_k = <y,p_k>/N_k.

#include <span>
#include <string>
#include <vector>

#include "legreg/error.hpp"
#include "legreg/grid.hpp"
#include "legreg/kernels.hpp"
#include "legreg/matrix.hpp"
#include "legreg/real.hpp"
#include "legreg/series.hpp"

namespace legreg {

template <Real T>
struct ForsytheBasis {
    std::vector<T> alphas;  // alphas[k] = alpha_{k+1}, k = 0..m-1
    std::vector<T> betas;   // betas[k] = beta_k, k = 0..m-1 (beta_0 = 0)
    std::vector<T> norms;   // norms[k] = N_k, k = 0..m
    Grid<T> grid;

    int degree() const { return static_cast<int>(norms.size()) - 1; }

    /// p_0(x) .. p_m(x) at a single point.
    std::vector<T> evaluate_all(const T& x) const {
        std::vector<T> p(norms.size());
        p[0] = T(1);
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
            const T prev = k == 0 ? T(0) : p[k - 1];
            p[k + 1] = (x - alphas[k]) * p[k] - betas[k] * prev;
        }
        return p;
    }

    /// n x (m+1) matrix of p_k at every grid point.
    Matrix<T> values() const {
        const int n = grid.n;
        const int m = degree();
        auto xs = grid.points();
        std::span<const T> sx(xs);
        Matrix<T> pv(n, m + 1);
        std::vector<T> zeros(static_cast<std::size_t>(n), T(0));
        for (int i = 0; i < n; ++i) {
            pv(i, 0) = T(1);
        }
        for (int k = 0; k < m; ++k) {
            std::span<const T> prev = k == 0 ? std::span<const T>(zeros) : pv.col(k - 1);
            kernels::three_term<T>(alphas[static_cast<std::size_t>(k)],
                                   betas[static_cast<std::size_t>(k)], sx, pv.col(k), prev,
                                   pv.col(k + 1));
        }
        return pv;
    }
};

template <Real T>
struct ForsytheFit {
    ForsytheBasis<T> basis;
    std::vector<T> coeffs;  // b_k

    T evaluate(const T& x) const {
        const auto p = basis.evaluate_all(x);
        kernels::Sum2T<T> acc;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            T s, e;
            kernels::ref::two_sum(acc.hi, coeffs[k] * p[k], s, e);
            acc.hi = s;
            acc.lo += e;
        }
        return acc.value();
    }
};

template <Real T>
ForsytheBasis<T> build_forsythe_basis(const Grid<T>& grid, int m) {
    if (m < 0) {
        throw Error(ErrorKind::invalid_degree, "build_forsythe_basis: degree must be >= 0");
    }
    if (m >= grid.n) {
        throw Error(ErrorKind::rank, "build_forsythe_basis: degree " + std::to_string(m) +
                                         " needs more than " + std::to_string(grid.n) +
                                         " points");
    }
    const std::size_t n = static_cast<std::size_t>(grid.n);
    auto xs = grid.points();
    std::span<const T> sx(xs);

    ForsytheBasis<T> basis;
    basis.grid = grid;
    std::vector<T> prev(n, T(0));
    std::vector<T> cur(n, T(1));
    std::vector<T> next(n);
    std::vector<T> xp(n);
    basis.norms.push_back(T(static_cast<long>(n)));
    for (int k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            xp[i] = xs[i] * cur[i];
        }
        const T nk = basis.norms.back();
        const T alpha = kernels::dot<T>(std::span<const T>(xp), std::span<const T>(cur)) / nk;
        const T beta = k == 0 ? T(0) : nk / basis.norms[basis.norms.size() - 2];
        kernels::three_term<T>(alpha, beta, sx, std::span<const T>(cur),
                               std::span<const T>(prev), std::span<T>(next));
        const T norm = kernels::dot<T>(std::span<const T>(next), std::span<const T>(next));
        if (!(norm > T(0))) {
            throw Error(ErrorKind::rank,
                        "build_forsythe_basis: p_" + std::to_string(k + 1) + " vanishes on the grid");
        }
        basis.alphas.push_back(alpha);
        basis.betas.push_back(beta);
        basis.norms.push_back(norm);
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return basis;
}

/// b_k = <y, p_k> / N_k under the unweighted discrete inner product.
/// Works on raw or normalized data alike.
template <Real T>
ForsytheFit<T> forsythe_fit(const Dataset<T>& ds, int m) {
    ForsytheFit<T> fit{build_forsythe_basis(ds.grid, m), {}};
    const auto pv = fit.basis.values();
    std::span<const T> y(ds.y);
    for (int k = 0; k <= m; ++k) {
        fit.coeffs.push_back(kernels::dot<T>(y, pv.col(k)) /
                             fit.basis.norms[static_cast<std::size_t>(k)]);
    }
    return fit;
}

/// Expands sum b_k p_k into monomial coefficients on the fit's own abscissa
/// scale by running the recurrence on coefficient vectors.
template <Real T>
PolySeries<T> forsythe_to_monomial(const ForsytheFit<T>& fit) {
    const std::size_t len = fit.coeffs.size();
    if (len == 0 || len != fit.basis.norms.size()) {
        throw Error(ErrorKind::shape, "forsythe_to_monomial: coefficient/basis size mismatch");
    }
    std::vector<kernels::Sum2T<T>> acc(len);
    std::vector<T> prev(len, T(0));
    std::vector<T> cur(len, T(0));
    cur[0] = T(1);
    auto add = [&](const std::vector<T>& poly, const T& b) {
        for (std::size_t j = 0; j < len; ++j) {
            T s, e;
            kernels::ref::two_sum(acc[j].hi, b * poly[j], s, e);
            acc[j].hi = s;
            acc[j].lo += e;
        }
    };
    add(cur, fit.coeffs[0]);
    for (std::size_t k = 0; k + 1 < len; ++k) {
        std::vector<T> next(len, T(0));
        const T alpha = fit.basis.alphas[k];
        const T beta = fit.basis.betas[k];
        for (std::size_t j = 0; j < len; ++j) {
            T v = -alpha * cur[j] - beta * prev[j];
            if (j > 0) {
                v += cur[j - 1];
            }
            next[j] = v;
        }
        prev = std::move(cur);
        cur = std::move(next);
        add(cur, fit.coeffs[k + 1]);
    }
    PolySeries<T> out;
    out.basis = BasisKind::monomial;
    out.domain = {fit.basis.grid.a, fit.basis.grid.b};
    out.coeffs.resize(len);
    for (std::size_t j = 0; j < len; ++j) {
        out.coeffs[j] = acc[j].value();
    }
    return out;
}

}  // namespace legreg
