#include <doctest.h>

#include <cmath>

#include "legreg/estimators.hpp"
#include "legreg/example_suite.hpp"
#include "legreg/forsythe.hpp"
#include "test_support.hpp"

using namespace legreg;
using legreg::testing::error_kind;
using legreg::testing::normalized_dataset;

namespace {

double orthogonality_residual(const ForsytheBasis<double>& basis) {
    const auto pv = basis.values();
    double worst = 0;
    for (int k = 0; k <= basis.degree(); ++k) {
        for (int l = 0; l < k; ++l) {
            long double s = 0;
            for (int i = 0; i < pv.rows(); ++i) {
                s += static_cast<long double>(pv(i, k)) * pv(i, l);
            }
            const double scale = std::sqrt(basis.norms[static_cast<std::size_t>(k)] *
                                           basis.norms[static_cast<std::size_t>(l)]);
            worst = std::max(worst, static_cast<double>(std::abs(s)) / scale);
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("symmetric three-point grid") {
    auto b = build_forsythe_basis(make_grid(-1.0, 1.0, 3), 1);
    REQUIRE(b.alphas.size() == 1);
    CHECK(b.alphas[0] == 0.0);
    for (double x : {-1.0, -0.3, 0.0, 0.8}) {
        CHECK(b.evaluate_all(x)[1] == x);
    }
}

TEST_CASE("p_0 is one and N_0 is n") {
    for (int n : {2, 7, 629}) {
        auto b = build_forsythe_basis(make_grid(0.5, 3.0, n), 1);
        CHECK(b.norms[0] == double(n));
        CHECK(b.evaluate_all(1.7)[0] == 1.0);
        const auto pv = b.values();
        for (int i = 0; i < n; ++i) {
            CHECK(pv(i, 0) == 1.0);
        }
    }
}

TEST_CASE("norms are positive and degree is capped") {
    auto b = build_forsythe_basis(make_grid(-1.0, 1.0, 21), 20);
    for (double nk : b.norms) {
        CHECK(nk > 0);
    }
    CHECK(error_kind([] { build_forsythe_basis(make_grid(-1.0, 1.0, 5), 5); }) == ErrorKind::rank);
    CHECK(error_kind([] { build_forsythe_basis(make_grid(-1.0, 1.0, 5), -1); }) ==
          ErrorKind::invalid_degree);
}

TEST_CASE("discrete orthogonality up to degree 20") {
    const auto grid = make_grid(-1.0, 1.0, 629);
    CHECK(orthogonality_residual(build_forsythe_basis(grid, 10)) <= 1e-8);
    CHECK(orthogonality_residual(build_forsythe_basis(grid, 20)) <= 1e-8);
    CHECK(orthogonality_residual(build_forsythe_basis(make_grid(-1.0, 1.0, 101), 20)) <= 1e-8);
}

TEST_CASE("values() matches pointwise evaluation") {
    auto b = build_forsythe_basis(make_grid(-1.0, 1.0, 57), 9);
    auto pv = b.values();
    for (int i = 0; i < 57; i += 7) {
        auto p = b.evaluate_all(b.grid.x(i));
        for (int k = 0; k <= 9; ++k) {
            CHECK(pv(i, k) == doctest::Approx(p[static_cast<std::size_t>(k)]).epsilon(1e-13));
        }
    }
}

TEST_CASE("forsythe_fit examples") {
    auto c = forsythe_fit(normalized_dataset(31, std::vector<double>(31, 2.5)), 6);
    CHECK(c.coeffs.size() == 7);
    CHECK(c.coeffs[0] == doctest::Approx(2.5).epsilon(1e-15));
    for (std::size_t k = 1; k < c.coeffs.size(); ++k) {
        CHECK(std::abs(c.coeffs[k]) <= 1e-13);
    }

    const auto grid = make_grid(-1.0, 1.0, 101);
    const auto basis = build_forsythe_basis(grid, 2);
    std::vector<double> y(101);
    for (int i = 0; i < 101; ++i) {
        y[static_cast<std::size_t>(i)] = basis.evaluate_all(grid.x(i))[2];
    }
    auto f = forsythe_fit(normalized_dataset(101, y), 6);
    for (int k = 0; k <= 6; ++k) {
        CHECK(std::abs(f.coeffs[static_cast<std::size_t>(k)] - (k == 2 ? 1.0 : 0.0)) <= 1e-8);
    }
}

TEST_CASE("reference dataset residual stays within 2x of ols") {
    const auto nds = normalize(sample_test_function<double>(629));
    auto fit = forsythe_fit(nds, 30);
    double resid = 0;
    for (int i = 0; i < nds.grid.n; ++i) {
        const double d = nds.y[static_cast<std::size_t>(i)] - fit.evaluate(nds.grid.x(i));
        resid += d * d;
    }
    const double ols = sum_of_squares(nds, fit_ols(nds, 30, BasisKind::legendre_orthonormal),
                                      Scale::normalized)
                           .residual_ss;
    CHECK(resid <= 2 * ols);
    CHECK(ols <= 2 * resid);
}

TEST_CASE("forsythe and ols fitted values agree at degree <= 10") {
    const auto raw = sample_test_function<double>(101);
    const auto nds = normalize(raw);
    for (int m = 0; m <= 10; ++m) {
        auto f = forsythe_fit(nds, m);
        auto o = fit_ols(nds, m, BasisKind::legendre_orthonormal);
        for (int i = 0; i < nds.grid.n; ++i) {
            const double x = nds.grid.x(i);
            const double a = f.evaluate(x);
            const double b = evaluate(o, x);
            CHECK(std::abs(a - b) <= 1e-8 * std::max(std::abs(b), 1e-3));
        }
    }
}

TEST_CASE("residual is nonincreasing in degree") {
    const auto nds = normalize(sample_test_function<double>(629));
    double prev = INFINITY;
    for (int m = 0; m <= 30; ++m) {
        auto fit = forsythe_fit(nds, m);
        double resid = 0;
        for (int i = 0; i < nds.grid.n; ++i) {
            const double d = nds.y[static_cast<std::size_t>(i)] - fit.evaluate(nds.grid.x(i));
            resid += d * d;
        }
        CHECK(resid <= prev * (1 + 1e-9));
        prev = resid;
    }
}

TEST_CASE("forsythe_to_monomial examples") {
    const auto grid = make_grid(-1.0, 1.0, 3);
    ForsytheFit<double> p1{build_forsythe_basis(grid, 1), {0.0, 1.0}};
    auto m1 = forsythe_to_monomial(p1);
    CHECK(m1.basis == BasisKind::monomial);
    CHECK(m1.coeffs == std::vector<double>{0.0, 1.0});

    auto c = forsythe_fit(normalized_dataset(9, std::vector<double>(9, -4.0)), 4);
    auto mc = forsythe_to_monomial(c);
    CHECK(mc.coeffs[0] == doctest::Approx(-4.0).epsilon(1e-15));
    for (std::size_t k = 1; k < mc.coeffs.size(); ++k) {
        CHECK(std::abs(mc.coeffs[k]) <= 1e-13);
    }
}

TEST_CASE("monomial expansion evaluates like the recurrence") {
    const auto nds = normalize(sample_test_function<double>(201));
    auto fit = forsythe_fit(nds, 12);
    auto mono = forsythe_to_monomial(fit);
    for (int i = 0; i < nds.grid.n; i += 10) {
        const double x = nds.grid.x(i);
        CHECK(horner(mono.coeffs, x) == doctest::Approx(fit.evaluate(x)).epsilon(1e-10));
    }
}

TEST_CASE("high-order back-transformed coefficients depart from Taylor") {
    const auto table = reproduce_table(3, 16);
    int diverged = 0;
    int total = 0;
    for (const auto& row : table.rows) {
        if (row[0] >= 13) {
            ++total;
            diverged += row[4] > 10 ? 1 : 0;
        }
    }
    CHECK(total == 18);
    CHECK(2 * diverged >= total);
}

TEST_CASE("divergence_factor") {
    CHECK(divergence_factor(2.0, -20.0) == 10.0);
    CHECK(divergence_factor(-3.0, 0.3) == doctest::Approx(10.0));
    CHECK(divergence_factor(0.0, 0.0) == 1.0);
    CHECK(std::isinf(divergence_factor(0.0, 1.0)));
}

TEST_CASE("raw-domain recurrence coefficients") {
    // b_0 is the mean of the data.
    const auto raw = sample_test_function<double>(629);
    auto fit = forsythe_fit(raw, 4);
    double mean = 0;
    for (double v : raw.y) {
        mean += v;
    }
    mean /= raw.grid.n;
    CHECK(fit.coeffs[0] == doctest::Approx(mean).epsilon(1e-13));
}
