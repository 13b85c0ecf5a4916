#pragma once

// The worked example: f(x) = sin(3x) cos(5x) e^{-x} + 3 sin(pi x) e^{x/2}
// sampled at 629 equidistant points on [-pi, pi], its degree-30 Taylor
// reference, and generators for the coefficient / sum-of-squares tables and
// the data behind the two figures.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "legreg/grid.hpp"
#include "legreg/real.hpp"

namespace legreg {

inline constexpr int kReferencePoints = 629;
inline constexpr int kReferenceDegree = 30;

template <Real T>
T test_function(const T& x) {
    using std::cos;
    using std::exp;
    using std::sin;
    return sin(T(3) * x) * cos(T(5) * x) * exp(-x) + T(3) * sin(pi<T>() * x) * exp(x / T(2));
}

template <Real T>
Dataset<T> sample_test_function(int n = kReferencePoints) {
    auto grid = make_grid(-pi<T>(), pi<T>(), n);
    std::vector<T> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        y[static_cast<std::size_t>(i)] = test_function(grid.x(i));
    }
    return make_dataset(std::move(grid), std::move(y));
}

/// Monomial coefficients of the degree-30 Taylor polynomial of f at 0, as
/// printed to ten significant digits (index k multiplies x^k).
struct TaylorReference {
    std::array<double, kReferenceDegree + 1> coeffs;
};

const TaylorReference& taylor_reference();

/// True if ds is f sampled on an equidistant grid over [-pi, pi].
bool is_reference_dataset(const Dataset<double>& ds);

/// max(|a|,|b|) / min(|a|,|b|); infinite if exactly one is zero, 1 if both are.
double divergence_factor(double a, double b);

struct TableArtifact {
    int table_id = 0;  // 1..4 for tables, 101/102 for figure data
    std::string title;
    std::vector<std::string> column_labels;
    std::vector<std::string> row_labels;  // optional, used by table 2
    std::vector<std::vector<double>> rows;
    std::vector<std::string> notes;
};

/// Tables 1 and 4: k, trapezoid simple, trapezoid orthonormal, OLS, Taylor.
/// Table 2: sum of squares on both scales for the three methods.
/// Table 3: Forsythe recurrence coefficients, the back-transformed Forsythe
/// monomial coefficients, Taylor, and their divergence factor.
TableArtifact reproduce_table(int id, int precision_digits);

/// 1: (x, f(x)) on 1001 points.  2: (x, y, yhat per method) on 629 points.
TableArtifact figure_data(int which, int precision_digits = 16);

}  // namespace legreg
