#pragma once

// Data-parallel inner loops shared by every estimator.
//
// Each kernel has a scalar reference implementation (kernels_ref.hpp, generic
// over the real type) and, for double, an AVX2/FMA variant picked at runtime
// from CPUID.  The generic entry points below route double through the
// dispatch table and every other type straight to the reference code.

#include <cstddef>
#include <span>
#include <type_traits>

#include "legreg/kernels_ref.hpp"
#include "legreg/real.hpp"

namespace legreg::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

/// Best ISA the running CPU supports (and this build was compiled for).
Isa detected_isa();

/// ISA currently used for double kernels.  Defaults to detected_isa(), or
/// scalar if the LEGREG_FORCE_SCALAR environment variable is set.
Isa active_isa();

/// Overrides the dispatch choice; requests above detected_isa() are clamped.
void set_active_isa(Isa isa);

// Direct entry points for the double implementations, used by the
// equivalence tests and by the dispatching wrappers.
namespace f64 {

Sum2 dot2(Isa isa, const double* a, const double* b, std::size_t n);
void legendre_next(Isa isa, int k, const double* x, const double* p, const double* q,
                   double* out, std::size_t n);
void three_term(Isa isa, double alpha, double beta, const double* x, const double* p,
                const double* q, double* out, std::size_t n);
void axpy(Isa isa, double alpha, const double* x, double* y, std::size_t n);

}  // namespace f64

/// Compensated dot product, returned as an unevaluated (hi, lo) pair.
template <Real T>
Sum2T<T> dot2(std::span<const T> a, std::span<const T> b) {
    if constexpr (std::is_same_v<T, double>) {
        return f64::dot2(active_isa(), a.data(), b.data(), a.size());
    } else {
        return ref::dot2<T>(a.data(), b.data(), a.size());
    }
}

template <Real T>
T dot(std::span<const T> a, std::span<const T> b) {
    return dot2<T>(a, b).value();
}

/// out = ((2k+1) x p - k q) / (k+1): one Bonnet step, P_{k+1} from P_k, P_{k-1}.
template <Real T>
void legendre_next(int k, std::span<const T> x, std::span<const T> p,
                   std::span<const T> q, std::span<T> out) {
    if constexpr (std::is_same_v<T, double>) {
        f64::legendre_next(active_isa(), k, x.data(), p.data(), q.data(), out.data(),
                           x.size());
    } else {
        ref::legendre_next<T>(k, x.data(), p.data(), q.data(), out.data(), x.size());
    }
}

/// out = (x - alpha) p - beta q: one monic three-term step.
template <Real T>
void three_term(const T& alpha, const T& beta, std::span<const T> x,
                std::span<const T> p, std::span<const T> q, std::span<T> out) {
    if constexpr (std::is_same_v<T, double>) {
        f64::three_term(active_isa(), alpha, beta, x.data(), p.data(), q.data(),
                        out.data(), x.size());
    } else {
        ref::three_term<T>(alpha, beta, x.data(), p.data(), q.data(), out.data(),
                           x.size());
    }
}

/// y += alpha x
template <Real T>
void axpy(const T& alpha, std::span<const T> x, std::span<T> y) {
    if constexpr (std::is_same_v<T, double>) {
        f64::axpy(active_isa(), alpha, x.data(), y.data(), x.size());
    } else {
        ref::axpy<T>(alpha, x.data(), y.data(), x.size());
    }
}

}  // namespace legreg::kernels
