#pragma once

// The affine map T2 : [a,b] -> [-1,1] and the exact coefficient-space
// operations needed to carry a monomial series back to the data's own
// domain and scale.

#include <cmath>
#include <string>

#include "legreg/error.hpp"
#include "legreg/real.hpp"
#include "legreg/series.hpp"

namespace legreg {

/// forward(v) = scale * v + offset, scale != 0.
template <Real T>
struct AffineMap {
    T scale{1};
    T offset{0};

    T forward(const T& v) const { return scale * v + offset; }
    T backward(const T& w) const { return (w - offset) / scale; }

    AffineMap inverse() const { return {T(1) / scale, -offset / scale}; }

    /// (this o inner)(v) = this(inner(v)).
    AffineMap after(const AffineMap& inner) const {
        return {scale * inner.scale, scale * inner.offset + offset};
    }

    static AffineMap identity() { return {T(1), T(0)}; }

    template <Real U>
    AffineMap<U> cast() const {
        return {static_cast<U>(scale), static_cast<U>(offset)};
    }
};

template <Real T>
void require_interval(const T& a, const T& b, const char* op) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    if (!isfinite(a) || !isfinite(b) || !(b > a)) {
        throw Error(ErrorKind::invalid_domain,
                    std::string(op) + ": need finite a < b, got [" +
                        std::to_string(to_double(a)) + ", " + std::to_string(to_double(b)) +
                        "]");
    }
}

/// T2(x) = (2x - a - b) / (b - a).
template <Real T>
AffineMap<T> t2_forward(const T& a, const T& b) {
    require_interval(a, b, "t2_forward");
    const T width = b - a;
    return {T(2) / width, -(a + b) / width};
}

/// Coefficients of q(x) = p(scale * x + offset).  Horner in coefficient
/// space, highest degree first.
template <Real T>
PolySeries<T> substitute_affine(const PolySeries<T>& series, const AffineMap<T>& map) {
    require_basis(series.basis == BasisKind::monomial, "substitute_affine", series.basis);
    const std::size_t len = series.coeffs.size();
    std::vector<T> acc(len, T(0));
    std::size_t used = 0;  // acc holds a polynomial of degree used-1
    for (std::size_t k = len; k-- > 0;) {
        // acc <- acc * (scale x + offset) + c_k
        if (used > 0) {
            for (std::size_t j = used; j-- > 0;) {
                const T term = acc[j];
                acc[j + 1] += map.scale * term;
                acc[j] = map.offset * term;
            }
        }
        acc[0] += series.coeffs[k];
        used = std::min(used + 1, len);
    }

    PolySeries<T> out;
    out.basis = BasisKind::monomial;
    out.coeffs = std::move(acc);
    // q lives on the preimage of p's domain.
    const T lo = map.backward(series.domain.first);
    const T hi = map.backward(series.domain.second);
    out.domain = lo < hi ? std::pair<T, T>{lo, hi} : std::pair<T, T>{hi, lo};
    return out;
}

/// Coefficients of y_map^{-1}(p(x)).
template <Real T>
PolySeries<T> rescale_output(const PolySeries<T>& series, const AffineMap<T>& y_map) {
    require_basis(series.basis == BasisKind::monomial, "rescale_output", series.basis);
    PolySeries<T> out = series;
    if (out.coeffs.empty()) {
        out.coeffs.push_back(T(0));
    }
    for (T& c : out.coeffs) {
        c /= y_map.scale;
    }
    out.coeffs[0] -= y_map.offset / y_map.scale;
    return out;
}

}  // namespace legreg
