#include <atomic>
#include <cstdlib>

#include "legreg/kernels.hpp"

namespace legreg::kernels {

#if defined(LEGREG_HAVE_AVX2)
namespace avx2 {
Sum2 dot2(const double* a, const double* b, std::size_t n);
void legendre_next(int k, const double* x, const double* p, const double* q, double* out,
                   std::size_t n);
void three_term(double alpha, double beta, const double* x, const double* p,
                const double* q, double* out, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace avx2
#endif

namespace {

Isa probe_cpu() {
#if defined(LEGREG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return Isa::avx2;
    }
#endif
    return Isa::scalar;
}

Isa initial_isa() {
    if (std::getenv("LEGREG_FORCE_SCALAR") != nullptr) {
        return Isa::scalar;
    }
    return detected_isa();
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

const char* to_string(Isa isa) {
    switch (isa) {
        case Isa::avx2:
            return "avx2";
        case Isa::scalar:
            break;
    }
    return "scalar";
}

Isa detected_isa() {
    static const Isa isa = probe_cpu();
    return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (isa == Isa::avx2 && detected_isa() != Isa::avx2) {
        isa = Isa::scalar;
    }
    active().store(isa, std::memory_order_relaxed);
}

namespace f64 {

Sum2 dot2(Isa isa, const double* a, const double* b, std::size_t n) {
#if defined(LEGREG_HAVE_AVX2)
    if (isa == Isa::avx2) {
        return avx2::dot2(a, b, n);
    }
#endif
    (void)isa;
    return ref::dot2<double>(a, b, n);
}

void legendre_next(Isa isa, int k, const double* x, const double* p, const double* q,
                   double* out, std::size_t n) {
#if defined(LEGREG_HAVE_AVX2)
    if (isa == Isa::avx2) {
        avx2::legendre_next(k, x, p, q, out, n);
        return;
    }
#endif
    (void)isa;
    ref::legendre_next<double>(k, x, p, q, out, n);
}

void three_term(Isa isa, double alpha, double beta, const double* x, const double* p,
                const double* q, double* out, std::size_t n) {
#if defined(LEGREG_HAVE_AVX2)
    if (isa == Isa::avx2) {
        avx2::three_term(alpha, beta, x, p, q, out, n);
        return;
    }
#endif
    (void)isa;
    ref::three_term<double>(alpha, beta, x, p, q, out, n);
}

void axpy(Isa isa, double alpha, const double* x, double* y, std::size_t n) {
#if defined(LEGREG_HAVE_AVX2)
    if (isa == Isa::avx2) {
        avx2::axpy(alpha, x, y, n);
        return;
    }
#endif
    (void)isa;
    ref::axpy<double>(alpha, x, y, n);
}

}  // namespace f64
}  // namespace legreg::kernels
