#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legreg/error.hpp"
#include "legreg/real.hpp"

namespace legreg {

enum class BasisKind { monomial, legendre, legendre_orthonormal, forsythe };

const char* to_string(BasisKind kind);
BasisKind basis_from_string(std::string_view name);

/// Coefficient vector c_0..c_m in a named basis, valid on [domain.first, domain.second].
template <Real T>
struct PolySeries {
    BasisKind basis = BasisKind::monomial;
    std::vector<T> coeffs;
    std::pair<T, T> domain{T(-1), T(1)};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    template <Real U>
    PolySeries<U> cast() const {
        PolySeries<U> out;
        out.basis = basis;
        out.coeffs.reserve(coeffs.size());
        for (const T& c : coeffs) {
            out.coeffs.push_back(static_cast<U>(c));
        }
        out.domain = {static_cast<U>(domain.first), static_cast<U>(domain.second)};
        return out;
    }
};

/// Horner evaluation of c_0 + c_1 x + ... + c_m x^m.
template <Real T>
T horner(const std::vector<T>& coeffs, const T& x) {
    T acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

inline void require_basis(bool ok, const char* op, BasisKind got) {
    if (!ok) {
        throw Error(ErrorKind::invalid_basis,
                    std::string(op) + ": unsupported basis '" + to_string(got) + "'");
    }
}

}  // namespace legreg
