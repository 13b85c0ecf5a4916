#pragma once

// Scalar reference kernels.  These define the results the SIMD variants are
// tested against; keep the arithmetic order in sync with kernels_avx2.cpp.

#include <cmath>
#include <cstddef>
#include <type_traits>

namespace legreg::kernels {

/// Unevaluated sum hi + lo carrying roughly twice the working precision.
template <typename T>
struct Sum2T {
    T hi{0};
    T lo{0};

    T value() const { return hi + lo; }
};

using Sum2 = Sum2T<double>;

namespace ref {

// Knuth's branch-free error-free addition: s + e == a + b exactly.
template <typename T>
inline void two_sum(const T& a, const T& b, T& s, T& e) {
    s = a + b;
    T z = s - a;
    e = (a - (s - z)) + (b - z);
}

// p + e == a * b exactly (for IEEE types; the multiprecision type drops e).
template <typename T>
inline void two_prod(const T& a, const T& b, T& p, T& e) {
    p = a * b;
    if constexpr (std::is_floating_point_v<T>) {
        e = std::fma(a, b, -p);
    } else {
        e = T(0);
    }
}

/// Dot2 of Ogita, Rump and Oishi: sequential, one TwoProduct and one TwoSum
/// per element, error terms folded into a running correction.
template <typename T>
Sum2T<T> dot2(const T* a, const T* b, std::size_t n) {
    Sum2T<T> acc;
    for (std::size_t i = 0; i < n; ++i) {
        T h, r, s, q;
        two_prod(a[i], b[i], h, r);
        two_sum(acc.hi, h, s, q);
        acc.hi = s;
        acc.lo += q + r;
    }
    return acc;
}

template <typename T>
void legendre_next(int k, const T* x, const T* p, const T* q, T* out, std::size_t n) {
    const T c1 = T(2 * k + 1);
    const T c2 = T(k);
    const T c3 = T(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = ((c1 * x[i]) * p[i] - c2 * q[i]) / c3;
    }
}

template <typename T>
void three_term(const T& alpha, const T& beta, const T* x, const T* p, const T* q,
                T* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (x[i] - alpha) * p[i] - beta * q[i];
    }
}

template <typename T>
void axpy(const T& alpha, const T* x, T* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

}  // namespace ref
}  // namespace legreg::kernels
