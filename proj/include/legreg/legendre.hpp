#pragma once

// Legendre polynomials: pointwise evaluation, design matrices, and exact
// conversion of Legendre coefficient vectors to the monomial basis.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "legreg/error.hpp"
#include "legreg/grid.hpp"
#include "legreg/kernels.hpp"
#include "legreg/matrix.hpp"
#include "legreg/real.hpp"
#include "legreg/series.hpp"

namespace legreg {

inline void require_degree(int k, const char* op) {
    if (k < 0) {
        throw Error(ErrorKind::invalid_degree,
                    std::string(op) + ": degree must be >= 0, got " + std::to_string(k));
    }
}

/// P_k(x) by the Bonnet recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
template <Real T>
T legendre_eval(int k, const T& x) {
    require_degree(k, "legendre_eval");
    if (k == 0) {
        return T(1);
    }
    T prev(1);
    T cur = x;
    for (int j = 1; j < k; ++j) {
        T next = ((T(2 * j + 1) * x) * cur - T(j) * prev) / T(j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// sqrt(k + 1/2): scales P_k to unit L2 norm on [-1,1].
template <Real T>
T orthonormal_factor(int k) {
    using std::sqrt;
    return sqrt(T(2 * k + 1) / T(2));
}

template <Real T>
T normalized_legendre_eval(int k, const T& x) {
    require_degree(k, "normalized_legendre_eval");
    return orthonormal_factor<T>(k) * legendre_eval(k, x);
}

/// n x (m+1) matrix whose column j is basis function j at every point.
template <Real T>
Matrix<T> design_matrix(std::span<const T> xs, int m, BasisKind basis) {
    require_degree(m, "design_matrix");
    require_basis(basis != BasisKind::forsythe, "design_matrix", basis);
    const int n = static_cast<int>(xs.size());
    Matrix<T> phi(n, m + 1);
    for (int i = 0; i < n; ++i) {
        phi(i, 0) = T(1);
    }
    if (m >= 1) {
        for (int i = 0; i < n; ++i) {
            phi(i, 1) = xs[static_cast<std::size_t>(i)];
        }
    }
    if (basis == BasisKind::monomial) {
        for (int j = 2; j <= m; ++j) {
            for (int i = 0; i < n; ++i) {
                phi(i, j) = phi(i, j - 1) * xs[static_cast<std::size_t>(i)];
            }
        }
        return phi;
    }
    for (int j = 1; j < m; ++j) {
        kernels::legendre_next<T>(j, xs, phi.col(j), phi.col(j - 1), phi.col(j + 1));
    }
    if (basis == BasisKind::legendre_orthonormal) {
        for (int j = 0; j <= m; ++j) {
            const T f = orthonormal_factor<T>(j);
            for (T& v : phi.col(j)) {
                v *= f;
            }
        }
    }
    return phi;
}

template <Real T>
Matrix<T> design_matrix(const Grid<T>& grid, int m, BasisKind basis) {
    auto xs = grid.points();
    return design_matrix<T>(std::span<const T>(xs), m, basis);
}

/// Integer coefficients of 2^k P_k(x): entry j multiplies x^j.
/// 2^k P_k(x) = sum_i (-1)^i C(k,i) C(2k-2i,k) x^{k-2i}.
std::vector<boost::multiprecision::cpp_int> legendre_integer_coeffs(int k);

/// Value of a Legendre or orthonormal-Legendre series at x.
template <Real T>
T evaluate_legendre_series(const PolySeries<T>& s, const T& x) {
    require_basis(s.basis == BasisKind::legendre || s.basis == BasisKind::legendre_orthonormal,
                  "evaluate_legendre_series", s.basis);
    if (x < s.domain.first || x > s.domain.second) {
        throw Error(ErrorKind::invalid_domain, "Legendre series evaluated outside its domain");
    }
    const bool orth = s.basis == BasisKind::legendre_orthonormal;
    T prev(0);
    T cur(1);
    kernels::Sum2T<T> acc;
    for (int k = 0; k <= s.degree(); ++k) {
        if (k == 1) {
            prev = cur;
            cur = x;
        } else if (k > 1) {
            T next = ((T(2 * k - 1) * x) * cur - T(k - 1) * prev) / T(k);
            prev = cur;
            cur = next;
        }
        T term = s.coeffs[static_cast<std::size_t>(k)] * cur;
        if (orth) {
            term *= orthonormal_factor<T>(k);
        }
        T sum, err;
        kernels::ref::two_sum(acc.hi, term, sum, err);
        acc.hi = sum;
        acc.lo += err;
    }
    return acc.value();
}

/// Monomial coefficients on [-1,1] of a Legendre (or orthonormal Legendre)
/// series.  Each P_k is expanded with exact integer coefficients; only the
/// final scaling by c_k / 2^k and the accumulation round.
template <Real T>
PolySeries<T> legendre_to_monomial(const PolySeries<T>& series) {
    require_basis(series.basis == BasisKind::legendre ||
                      series.basis == BasisKind::legendre_orthonormal,
                  "legendre_to_monomial", series.basis);
    using std::ldexp;
    const std::size_t len = series.coeffs.size();
    std::vector<kernels::Sum2T<T>> acc(len);
    for (std::size_t k = 0; k < len; ++k) {
        T ck = series.coeffs[k];
        if (series.basis == BasisKind::legendre_orthonormal) {
            ck *= orthonormal_factor<T>(static_cast<int>(k));
        }
        if (ck == T(0)) {
            continue;
        }
        const auto ints = legendre_integer_coeffs(static_cast<int>(k));
        for (std::size_t j = 0; j < ints.size(); ++j) {
            if (ints[j] == 0) {
                continue;
            }
            T term = ldexp(ck * static_cast<T>(ints[j]), -static_cast<int>(k));
            T sum, err;
            kernels::ref::two_sum(acc[j].hi, term, sum, err);
            acc[j].hi = sum;
            acc[j].lo += err;
        }
    }
    PolySeries<T> out;
    out.basis = BasisKind::monomial;
    out.domain = series.domain;
    out.coeffs.resize(len);
    for (std::size_t j = 0; j < len; ++j) {
        out.coeffs[j] = acc[j].value();
    }
    return out;
}

}  // namespace legreg
