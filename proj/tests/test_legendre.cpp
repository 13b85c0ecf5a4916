#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "legreg/legendre.hpp"
#include "legreg/quadrature.hpp"
#include "oracles.hpp"

using namespace legreg;
using legreg::oracle::horner_ld;
using legreg::oracle::rodrigues_coeffs;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::io;
}

double ulp_of(double v) {
    v = std::max(std::abs(v), std::numeric_limits<double>::min());
    return std::nextafter(v, INFINITY) - v;
}

template <typename T>
double round_trip_error(int degree, BasisKind basis, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    PolySeries<T> s{basis, {}, {T(-1), T(1)}};
    for (int k = 0; k <= degree; ++k) {
        s.coeffs.push_back(T(u(rng)));
    }
    const auto mono = legendre_to_monomial(s);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const T x(u(rng));
        const T direct = evaluate_legendre_series(s, x);
        const T viaHorner = horner(mono.coeffs, x);
        using std::abs;
        worst = std::max(worst, to_double(abs(direct - viaHorner) / abs(direct)));
    }
    return worst;
}

}  // namespace

TEST_CASE("legendre_eval examples") {
    CHECK(legendre_eval(0, 0.37) == 1.0);
    for (int k = 0; k <= 30; ++k) {
        CHECK(legendre_eval(k, 1.0) == 1.0);
    }
    CHECK(legendre_eval(2, 0.5) == -0.125);
    CHECK(kind_of([] { legendre_eval(-1, 0.0); }) == ErrorKind::invalid_degree);
}

TEST_CASE("normalized_legendre_eval examples") {
    CHECK(normalized_legendre_eval(0, 0.3) == doctest::Approx(0.70710678118654752).epsilon(1e-15));
    CHECK(normalized_legendre_eval(0, -0.9) == normalized_legendre_eval(0, 0.3));
    CHECK(normalized_legendre_eval(1, 1.0) == doctest::Approx(1.2247448713915890).epsilon(1e-15));
    CHECK(normalized_legendre_eval(2, 0.5) == doctest::Approx(-0.19764235376052370).epsilon(1e-14));
    CHECK(kind_of([] { normalized_legendre_eval(-3, 0.0); }) == ErrorKind::invalid_degree);
}

TEST_CASE("recurrence agrees with the Rodrigues expansion for k <= 10") {
    for (int k = 0; k <= 10; ++k) {
        const auto c = rodrigues_coeffs(k);
        for (int i = 0; i <= 20; ++i) {
            const double x = -1.0 + 0.1 * i;
            const long double ref = horner_ld(c, x);
            const double got = legendre_eval(k, x);
            if (ref == 0) {
                CHECK(std::abs(got) <= 1e-15);
            } else {
                CHECK(std::abs((got - ref) / ref) <= 1e-10);
            }
        }
    }
}

TEST_CASE("Rodrigues oracle agrees with the exact integer expansion") {
    for (int k = 0; k <= 12; ++k) {
        const auto c = rodrigues_coeffs(k);
        const auto ints = legendre_integer_coeffs(k);
        REQUIRE(ints.size() == c.size());
        for (std::size_t j = 0; j < c.size(); ++j) {
            const long double v = std::ldexp(ints[j].convert_to<long double>(), -k);
            CHECK(std::abs(v - c[j]) <= 1e-15L * std::max(1.0L, std::abs(c[j])));
        }
    }
}

TEST_CASE("|P_k(x)| <= 1 on [-1,1]") {
    for (int k = 0; k <= 30; ++k) {
        for (int i = 0; i <= 1000; ++i) {
            const double x = -1.0 + 2.0 * i / 1000.0;
            CHECK(std::abs(legendre_eval(k, x)) <= 1.0);
        }
    }
}

TEST_CASE("parity P_k(-x) = (-1)^k P_k(x)") {
    for (int k = 0; k <= 30; ++k) {
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double x = -1.0 + 2.0 * i / 100.0;
            const double a = legendre_eval(k, -x);
            const double b = sign * legendre_eval(k, x);
            CHECK(std::abs(a - b) <= 4 * ulp_of(b));
        }
    }
}

TEST_CASE("design_matrix examples") {
    auto g3 = make_grid(-1.0, 1.0, 3);
    auto m1 = design_matrix(g3, 1, BasisKind::legendre);
    REQUIRE(m1.rows() == 3);
    REQUIRE(m1.cols() == 2);
    const double expect1[3][2] = {{1, -1}, {1, 0}, {1, 1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(m1(i, j) == expect1[i][j]);
        }
    }

    auto m2 = design_matrix(g3, 2, BasisKind::legendre);
    CHECK(m2(0, 2) == 1.0);
    CHECK(m2(1, 2) == -0.5);
    CHECK(m2(2, 2) == 1.0);

    auto g2 = make_grid(0.0, 1.0, 2);
    auto mono = design_matrix(g2, 2, BasisKind::monomial);
    const double expect2[2][3] = {{1, 0, 0}, {1, 1, 1}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(mono(i, j) == expect2[i][j]);
        }
    }

    CHECK(kind_of([&] { design_matrix(g3, 1, BasisKind::forsythe); }) == ErrorKind::invalid_basis);
    CHECK(kind_of([&] { design_matrix(g3, -1, BasisKind::legendre); }) ==
          ErrorKind::invalid_degree);
}

TEST_CASE("design_matrix columns match pointwise evaluation") {
    auto g = make_grid(-1.0, 1.0, 37);
    auto phi = design_matrix(g, 12, BasisKind::legendre_orthonormal);
    for (int i = 0; i < g.n; ++i) {
        for (int k = 0; k <= 12; ++k) {
            CHECK(phi(i, k) == doctest::Approx(normalized_legendre_eval(k, g.x(i))).epsilon(1e-14));
        }
    }
}

TEST_CASE("legendre_to_monomial examples") {
    auto a = legendre_to_monomial(PolySeries<double>{BasisKind::legendre, {0, 1}, {-1, 1}});
    CHECK(a.basis == BasisKind::monomial);
    CHECK(a.coeffs == std::vector<double>{0, 1});

    auto b = legendre_to_monomial(PolySeries<double>{BasisKind::legendre, {0, 0, 1}, {-1, 1}});
    CHECK(b.coeffs == std::vector<double>{-0.5, 0, 1.5});

    auto c = legendre_to_monomial(
        PolySeries<double>{BasisKind::legendre_orthonormal, {std::sqrt(2.0), 0, 0}, {-1, 1}});
    REQUIRE(c.coeffs.size() == 3);
    CHECK(c.coeffs[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.coeffs[1] == 0.0);
    CHECK(c.coeffs[2] == 0.0);

    CHECK(kind_of([] {
              legendre_to_monomial(PolySeries<double>{BasisKind::monomial, {1}, {-1, 1}});
          }) == ErrorKind::invalid_basis);
    CHECK(kind_of([] {
              legendre_to_monomial(PolySeries<double>{BasisKind::forsythe, {1}, {-1, 1}});
          }) == ErrorKind::invalid_basis);
}

TEST_CASE("round trip through the monomial basis, double up to degree 20") {
    std::mt19937_64 rng(20240611);
    for (int degree : {0, 1, 5, 10, 15, 20}) {
        for (auto basis : {BasisKind::legendre, BasisKind::legendre_orthonormal}) {
            CHECK(round_trip_error<double>(degree, basis, rng) <= 1e-8);
        }
    }
}

TEST_CASE("round trip through the monomial basis, 32 digits up to degree 30") {
    std::mt19937_64 rng(99);
    for (int degree : {25, 30}) {
        for (auto basis : {BasisKind::legendre, BasisKind::legendre_orthonormal}) {
            CHECK(round_trip_error<Real32>(degree, basis, rng) <= 1e-8);
        }
    }
}

TEST_CASE("orthonormal Legendre under trapezoid quadrature") {
    // O(h^2) quadrature error reaches 1e-3 at k = l = 8 on 629 points.
    auto g = make_grid(-1.0, 1.0, 629);
    auto phi = design_matrix(g, 7, BasisKind::legendre_orthonormal);
    for (int k = 0; k <= 7; ++k) {
        for (int l = 0; l <= 7; ++l) {
            const double q = weighted_inner<double>(phi.col(k), phi.col(l), g.h,
                                                    InnerProductRule::trapezoid);
            CHECK(std::abs(q - (k == l ? 1.0 : 0.0)) <= 1e-3);
        }
    }
}

TEST_CASE("evaluate_legendre_series rejects points outside the domain") {
    PolySeries<double> s{BasisKind::legendre, {1, 2}, {-1, 1}};
    CHECK(evaluate_legendre_series(s, 0.5) == doctest::Approx(2.0));
    CHECK(kind_of([&] { evaluate_legendre_series(s, 1.5); }) == ErrorKind::invalid_domain);
}

TEST_CASE("32-digit evaluation agrees with double") {
    for (int k = 0; k <= 30; k += 3) {
        const double x = 0.3141;
        CHECK(to_double(legendre_eval(k, Real32(x))) ==
              doctest::Approx(legendre_eval(k, x)).epsilon(1e-14));
    }
}
