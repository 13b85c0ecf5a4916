#pragma once

// Discrete inner products on equidistant grids.
//
//   rectangle:  h * sum_{i=1}^{n} f_i g_i
//   trapezoid:  h/2 * (f_1 g_1 + 2 sum_{i=2}^{n-1} f_i g_i + f_n g_n)
//
// Both are built from the same compensated interior sum so that
// rectangle - trapezoid == h/2 (f_1 g_1 + f_n g_n) up to the final rounding.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "legreg/error.hpp"
#include "legreg/grid.hpp"
#include "legreg/kernels.hpp"
#include "legreg/legendre.hpp"
#include "legreg/real.hpp"

namespace legreg {

enum class InnerProductRule { rectangle, trapezoid };

const char* to_string(InnerProductRule rule);

namespace detail {

/// Interior sum plus the two endpoint products, each in compensated form.
template <Real T>
struct SplitProducts {
    kernels::Sum2T<T> interior;
    T first_prod, first_err;
    T last_prod, last_err;
};

template <Real T>
SplitProducts<T> split_products(std::span<const T> f, std::span<const T> g) {
    if (f.size() != g.size()) {
        throw Error(ErrorKind::shape, "inner product: length mismatch (" +
                                          std::to_string(f.size()) + " vs " +
                                          std::to_string(g.size()) + ")");
    }
    if (f.size() < 2) {
        throw Error(ErrorKind::invalid_count, "inner product: need at least 2 samples");
    }
    const std::size_t n = f.size();
    SplitProducts<T> s;
    s.interior = kernels::dot2<T>(f.subspan(1, n - 2), g.subspan(1, n - 2));
    kernels::ref::two_prod(f[0], g[0], s.first_prod, s.first_err);
    kernels::ref::two_prod(f[n - 1], g[n - 1], s.last_prod, s.last_err);
    return s;
}

// Adds x (with known error term e) into acc.
template <Real T>
void accumulate(kernels::Sum2T<T>& acc, const T& x, const T& e) {
    T s, q;
    kernels::ref::two_sum(acc.hi, x, s, q);
    acc.hi = s;
    acc.lo += q + e;
}

}  // namespace detail

/// sum over all points of f_i g_i with the rule's endpoint weights, before
/// the factor h.  For the trapezoid this is the bracket divided by 2.
template <Real T>
T weighted_sum(std::span<const T> f, std::span<const T> g, InnerProductRule rule) {
    auto s = detail::split_products<T>(f, g);
    kernels::Sum2T<T> acc = s.interior;
    if (rule == InnerProductRule::rectangle) {
        detail::accumulate(acc, s.first_prod, s.first_err);
        detail::accumulate(acc, s.last_prod, s.last_err);
    } else {
        // Halving is exact in binary floating point.
        detail::accumulate(acc, s.first_prod / T(2), s.first_err / T(2));
        detail::accumulate(acc, s.last_prod / T(2), s.last_err / T(2));
    }
    return acc.value();
}

template <Real T>
T weighted_inner(std::span<const T> f, std::span<const T> g, const T& h,
                 InnerProductRule rule) {
    if (!(h > T(0))) {
        throw Error(ErrorKind::invalid_domain, "weighted_inner: spacing h must be positive");
    }
    return h * weighted_sum<T>(f, g, rule);
}

template <Real T>
T weighted_inner(const std::vector<T>& f, const std::vector<T>& g, const T& h,
                 InnerProductRule rule) {
    return weighted_inner<T>(std::span<const T>(f), std::span<const T>(g), h, rule);
}

/// |trapezoid(P~_k, P~_l) - delta_kl| on an n-point grid over [-1,1],
/// where P~ are the orthonormal Legendre polynomials.
template <Real T>
T quadrature_error_probe(int k, int l, int n) {
    if (k < 0 || l < 0 || k > 30 || l > 30) {
        throw Error(ErrorKind::invalid_degree, "quadrature_error_probe: degrees must lie in [0,30]");
    }
    if (n < std::max(k, l) + 2) {
        throw Error(ErrorKind::invalid_count, "quadrature_error_probe: need n >= max(k,l)+2");
    }
    const auto grid = make_grid(T(-1), T(1), n);
    const auto phi = design_matrix(grid, std::max(k, l), BasisKind::legendre_orthonormal);
    const T q = weighted_inner<T>(phi.col(k), phi.col(l), grid.h, InnerProductRule::trapezoid);
    using std::abs;
    return abs(q - (k == l ? T(1) : T(0)));
}

}  // namespace legreg
