#pragma once

// Coefficient estimators on normalized data and the end-to-end fit pipeline.
//
// All projection estimators work on a Dataset produced by normalize(), i.e.
// on the grid [-1,1] with y in [-1,1].  Coefficients come back as a Legendre
// (or orthonormal Legendre) series; fit_pipeline carries them to monomial
// coefficients on the original domain and scale.

#include <chrono>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legreg/affine.hpp"
#include "legreg/error.hpp"
#include "legreg/grid.hpp"
#include "legreg/kernels.hpp"
#include "legreg/legendre.hpp"
#include "legreg/matrix.hpp"
#include "legreg/quadrature.hpp"
#include "legreg/real.hpp"
#include "legreg/series.hpp"

namespace legreg {

enum class MethodTag {
    rectangle_simple,
    rectangle_orthonormal,
    trapezoid_simple,
    trapezoid_orthonormal,
    ols_orthonormal,
};

/// Canonical kebab-case name, e.g. "trapezoid-simple".
const char* to_string(MethodTag method);
/// Accepts kebab-case or snake_case; "ols" is an alias for "ols-orthonormal".
MethodTag method_from_string(std::string_view name);

inline constexpr MethodTag kAllMethods[] = {
    MethodTag::rectangle_simple, MethodTag::rectangle_orthonormal, MethodTag::trapezoid_simple,
    MethodTag::trapezoid_orthonormal, MethodTag::ols_orthonormal};

enum class Scale { normalized, original };

const char* to_string(Scale scale);

struct SSReport {
    double data_ss = 0;
    double fitted_ss = 0;
    double residual_ss = 0;
    Scale scale = Scale::normalized;
};

struct ConditionReport {
    double gram_condition_orthonormal = 1;
    double gram_condition_monomial = 1;
};

struct FitReport {
    MethodTag method = MethodTag::trapezoid_orthonormal;
    int degree = 0;
    PolySeries<double> series_normalized;
    PolySeries<double> series_original;
    SSReport ss_normalized;
    SSReport ss_original;
    ConditionReport condition;
    std::chrono::nanoseconds elapsed{0};
    int precision_digits = 16;
    NormalizationRecord<double> norm;

    double elapsed_ms() const { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

namespace detail {

template <Real T>
void require_fit_inputs(const Dataset<T>& ds, int m, const char* op) {
    if (!ds.normalized()) {
        throw Error(ErrorKind::invalid_domain,
                    std::string(op) + ": dataset must be normalized first");
    }
    require_degree(m, op);
    if (m + 1 > ds.grid.n) {
        throw Error(ErrorKind::rank, std::string(op) + ": degree " + std::to_string(m) +
                                         " needs at least " + std::to_string(m + 1) +
                                         " points, dataset has " + std::to_string(ds.grid.n));
    }
}

/// Ratio-of-projections estimator shared by the two "simple" variants.
template <Real T>
PolySeries<T> fourier_ratio(const Dataset<T>& ds, int m, InnerProductRule rule,
                            const char* op) {
    require_fit_inputs(ds, m, op);
    const auto phi = design_matrix(ds.grid, m, BasisKind::legendre);
    std::span<const T> y(ds.y);
    PolySeries<T> out{BasisKind::legendre, std::vector<T>(static_cast<std::size_t>(m + 1)),
                      {T(-1), T(1)}};
    for (int k = 0; k <= m; ++k) {
        // h cancels between numerator and denominator.
        const T num = weighted_sum<T>(y, phi.col(k), rule);
        const T den = weighted_sum<T>(phi.col(k), phi.col(k), rule);
        if (!(den > T(0))) {
            throw Error(ErrorKind::degenerate,
                        std::string(op) + ": zero norm for P_" + std::to_string(k));
        }
        out.coeffs[static_cast<std::size_t>(k)] = num / den;
    }
    return out;
}

/// beta_k = h * weighted_sum(y, P~_k): the quadrature approximation of the
/// continuous Fourier coefficient against the orthonormal basis.
template <Real T>
PolySeries<T> orthonormal_projection(const Dataset<T>& ds, int m, InnerProductRule rule,
                                     const char* op) {
    require_fit_inputs(ds, m, op);
    const auto phi = design_matrix(ds.grid, m, BasisKind::legendre_orthonormal);
    std::span<const T> y(ds.y);
    PolySeries<T> out{BasisKind::legendre_orthonormal,
                      std::vector<T>(static_cast<std::size_t>(m + 1)), {T(-1), T(1)}};
    for (int k = 0; k <= m; ++k) {
        out.coeffs[static_cast<std::size_t>(k)] =
            ds.grid.h * weighted_sum<T>(y, phi.col(k), rule);
    }
    return out;
}

}  // namespace detail

/// c_k = sum y_i P_k(x_i) / sum P_k(x_i)^2.
template <Real T>
PolySeries<T> fit_rectangle_simple(const Dataset<T>& ds, int m) {
    return detail::fourier_ratio(ds, m, InnerProductRule::rectangle, "fit_rectangle_simple");
}

/// beta_k = h sum_{i=1}^{n} y_i P~_k(x_i).
template <Real T>
PolySeries<T> fit_rectangle_orthonormal(const Dataset<T>& ds, int m) {
    return detail::orthonormal_projection(ds, m, InnerProductRule::rectangle,
                                          "fit_rectangle_orthonormal");
}

/// Ratio of trapezoid-weighted sums; endpoints carry half weight.
template <Real T>
PolySeries<T> fit_trapezoid_simple(const Dataset<T>& ds, int m) {
    return detail::fourier_ratio(ds, m, InnerProductRule::trapezoid, "fit_trapezoid_simple");
}

/// beta_k = h/2 (y_1 P~_k(x_1) + 2 sum_{i=2}^{n-1} y_i P~_k(x_i) + y_n P~_k(x_n)).
template <Real T>
PolySeries<T> fit_trapezoid_orthonormal(const Dataset<T>& ds, int m) {
    return detail::orthonormal_projection(ds, m, InnerProductRule::trapezoid,
                                          "fit_trapezoid_orthonormal");
}

/// Least squares on the design matrix of the requested basis, solved by QR.
template <Real T>
PolySeries<T> fit_ols(const Dataset<T>& ds, int m, BasisKind basis) {
    detail::require_fit_inputs(ds, m, "fit_ols");
    require_basis(basis != BasisKind::forsythe, "fit_ols", basis);
    auto phi = design_matrix(ds.grid, m, basis);
    PolySeries<T> out;
    out.basis = basis;
    out.domain = {T(-1), T(1)};
    out.coeffs = least_squares_qr(std::move(phi), ds.y);
    return out;
}

/// Value of a monomial or Legendre-type series at x.
template <Real T>
T evaluate(const PolySeries<T>& s, const T& x) {
    if (s.basis == BasisKind::monomial) {
        return horner(s.coeffs, x);
    }
    return evaluate_legendre_series(s, x);
}

template <Real T>
std::vector<T> evaluate_on_grid(const PolySeries<T>& s, const Grid<T>& grid) {
    std::vector<T> out(static_cast<std::size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i) {
        out[static_cast<std::size_t>(i)] = evaluate(s, grid.x(i));
    }
    return out;
}

/// Sums of squares of the data, of the fitted values, and of the residuals.
/// For Scale::normalized the dataset must be normalized and the series live
/// on [-1,1]; for Scale::original both must be on the data's own scale.
template <Real T>
SSReport sum_of_squares(const Dataset<T>& ds, const PolySeries<T>& series, Scale scale) {
    if ((scale == Scale::normalized) != ds.normalized()) {
        throw Error(ErrorKind::invalid_domain,
                    "sum_of_squares: dataset scale does not match the requested scale");
    }
    const auto fitted = evaluate_on_grid(series, ds.grid);
    std::vector<T> resid(fitted.size());
    for (std::size_t i = 0; i < resid.size(); ++i) {
        resid[i] = ds.y[i] - fitted[i];
    }
    auto sq = [](const std::vector<T>& v) {
        std::span<const T> s(v);
        return to_double(kernels::dot<T>(s, s));
    };
    return SSReport{sq(ds.y), sq(fitted), sq(resid), scale};
}

/// Ratio of extreme singular values squared, i.e. cond_2(A'A), computed by
/// a Jacobi SVD of A so the Gram matrix is never formed.
double gram_condition(const Matrix<double>& a);

template <Real T>
ConditionReport condition_diagnostics(const Dataset<T>& ds, int m) {
    detail::require_fit_inputs(ds, m, "condition_diagnostics");
    std::vector<double> xs(static_cast<std::size_t>(ds.grid.n));
    for (int i = 0; i < ds.grid.n; ++i) {
        xs[static_cast<std::size_t>(i)] = to_double(ds.grid.x(i));
    }
    std::span<const double> sx(xs);
    return ConditionReport{
        gram_condition(design_matrix<double>(sx, m, BasisKind::legendre_orthonormal)),
        gram_condition(design_matrix<double>(sx, m, BasisKind::monomial))};
}

/// Runs one estimator on already-normalized data.
template <Real T>
PolySeries<T> fit_method(const Dataset<T>& nds, int m, MethodTag method) {
    switch (method) {
        case MethodTag::rectangle_simple:
            return fit_rectangle_simple(nds, m);
        case MethodTag::rectangle_orthonormal:
            return fit_rectangle_orthonormal(nds, m);
        case MethodTag::trapezoid_simple:
            return fit_trapezoid_simple(nds, m);
        case MethodTag::trapezoid_orthonormal:
            return fit_trapezoid_orthonormal(nds, m);
        case MethodTag::ols_orthonormal:
            return fit_ols(nds, m, BasisKind::legendre_orthonormal);
    }
    throw Error(ErrorKind::invalid_basis, "unknown method");
}

/// Legendre series on [-1,1] -> monomial series on the original [a,b] and
/// original y scale: convert basis, substitute x -> T2(x), undo y_map.
template <Real T>
PolySeries<T> back_transform(const PolySeries<T>& normalized_series,
                             const NormalizationRecord<T>& rec) {
    PolySeries<T> mono = normalized_series.basis == BasisKind::monomial
                             ? normalized_series
                             : legendre_to_monomial(normalized_series);
    return rescale_output(substitute_affine(mono, rec.x_map), rec.y_map);
}

template <Real T>
FitReport fit_pipeline(const Dataset<T>& ds, int m, MethodTag method) {
    if (ds.normalized()) {
        throw Error(ErrorKind::invalid_domain, "fit_pipeline: expects raw (unnormalized) data");
    }
    const Dataset<T> nds = normalize(ds);

    const auto start = std::chrono::steady_clock::now();
    const PolySeries<T> fitted = fit_method(nds, m, method);
    const auto stop = std::chrono::steady_clock::now();

    const PolySeries<T> original = back_transform(fitted, *nds.norm);

    FitReport report;
    report.method = method;
    report.degree = m;
    report.series_normalized = fitted.template cast<double>();
    report.series_original = original.template cast<double>();
    report.ss_normalized = sum_of_squares(nds, fitted, Scale::normalized);
    report.ss_original = sum_of_squares(ds, original, Scale::original);
    report.condition = condition_diagnostics(nds, m);
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
    report.precision_digits = precision_digits_of<T>();
    report.norm = {nds.norm->x_map.template cast<double>(), nds.norm->y_map.template cast<double>()};
    return report;
}

}  // namespace legreg
