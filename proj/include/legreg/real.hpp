#pragma once

// Scalar types the numerical kernels are written against.
//
// Every algorithm in legreg is a template over a real type.  Two working
// precisions are wired up: IEEE double (about 16 significant digits) and a
// 32-decimal-digit binary float from Boost.Multiprecision.

#include <charconv>
#include <cmath>
#include <concepts>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace legreg {

using Real32 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<32>,
                                             boost::multiprecision::et_off>;

template <typename T>
concept Real = std::floating_point<T> || std::same_as<T, Real32>;

/// Decimal digits carried by T, as reported in FitReport::precision_digits.
template <Real T>
constexpr int precision_digits_of() {
    if constexpr (std::same_as<T, Real32>) {
        return 32;
    } else {
        return 16;
    }
}

template <Real T>
T pi() {
    return boost::math::constants::pi<T>();
}

template <Real T>
double to_double(const T& v) {
    return static_cast<double>(v);
}

/// Parses a complete decimal literal directly into T (no detour through
/// double).  Returns nullopt if any character is left unconsumed.
template <Real T>
std::optional<T> parse_real(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    if constexpr (std::same_as<T, Real32>) {
        // cpp_bin_float rejects trailing garbage itself, but also accepts a
        // few spellings from_chars does not; validate the lexical form first.
        double probe = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), probe);
        if (ec == std::errc::invalid_argument || ptr != text.data() + text.size()) {
            return std::nullopt;
        }
        try {
            return T(std::string(text));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    } else {
        double v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            return std::nullopt;
        }
        return static_cast<T>(v);
    }
}

template <Real T>
T epsilon() {
    return std::numeric_limits<T>::epsilon();
}

/// Invokes fn.template operator()<T>() with T chosen from a digit count.
/// Only 16 and 32 are accepted; callers validate beforehand.
template <typename Fn>
decltype(auto) with_precision(int digits, Fn&& fn) {
    if (digits == 32) {
        return fn.template operator()<Real32>();
    }
    return fn.template operator()<double>();
}

}  // namespace legreg
