#include "legreg/legendre.hpp"

namespace legreg {

std::vector<boost::multiprecision::cpp_int> legendre_integer_coeffs(int k) {
    require_degree(k, "legendre_integer_coeffs");
    using boost::multiprecision::cpp_int;
    auto binom = [](int n, int r) {
        cpp_int c = 1;
        for (int i = 1; i <= r; ++i) {
            c *= n - r + i;
            c /= i;
        }
        return c;
    };
    std::vector<cpp_int> out(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; 2 * i <= k; ++i) {
        cpp_int term = binom(k, i) * binom(2 * k - 2 * i, k);
        out[static_cast<std::size_t>(k - 2 * i)] = (i % 2 == 0) ? term : cpp_int(-term);
    }
    return out;
}

}  // namespace legreg
