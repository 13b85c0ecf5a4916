#include "legreg/example_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "legreg/error.hpp"
#include "legreg/estimators.hpp"
#include "legreg/forsythe.hpp"

namespace legreg {

const TaylorReference& taylor_reference() {
    static const TaylorReference ref{{
        0.0,            12.42477796,   1.71238898,    -54.82504110,  33.94478037,
        121.2621435,    -125.9202816,  -142.4655789,  184.9106325,   86.58066121,
        -151.3009259,   -23.60696807,  78.47606337,   -2.236993754,  -27.70967780,
        4.386886795,    6.956422865,   -1.866729762,  -1.270259183,  0.488498913,
        0.168431320,    -0.091642089,  -0.015365948,  0.0131083743,  0.0007170316,
        -0.001477436,   0.0000419458,  0.0001336926,  -0.000013156,  -0.0000097947,
        0.0000016359,
    }};
    return ref;
}

bool is_reference_dataset(const Dataset<double>& ds) {
    const double p = pi<double>();
    if (std::abs(ds.grid.a + p) > 1e-12 || std::abs(ds.grid.b - p) > 1e-12) {
        return false;
    }
    double scale = 0;
    for (double v : ds.y) {
        scale = std::max(scale, std::abs(v));
    }
    for (int i = 0; i < ds.grid.n; ++i) {
        const double want = test_function(ds.grid.x(i));
        if (std::abs(want - ds.y[static_cast<std::size_t>(i)]) > 1e-9 * std::max(scale, 1.0)) {
            return false;
        }
    }
    return true;
}

double divergence_factor(double a, double b) {
    const double lo = std::min(std::abs(a), std::abs(b));
    const double hi = std::max(std::abs(a), std::abs(b));
    if (hi == 0) {
        return 1;
    }
    if (lo == 0) {
        return std::numeric_limits<double>::infinity();
    }
    return hi / lo;
}

namespace {

constexpr MethodTag kTableMethods[] = {MethodTag::trapezoid_simple,
                                       MethodTag::trapezoid_orthonormal,
                                       MethodTag::ols_orthonormal};

template <Real T>
std::vector<FitReport> reference_fits() {
    const auto ds = sample_test_function<T>(kReferencePoints);
    std::vector<FitReport> fits;
    for (MethodTag m : kTableMethods) {
        fits.push_back(fit_pipeline(ds, kReferenceDegree, m));
    }
    return fits;
}

std::string digits_note(int precision_digits) {
    return "arithmetic: " + std::to_string(precision_digits) + " significant digits";
}

TableArtifact coefficient_table(int id, int precision_digits) {
    auto fits = with_precision(precision_digits, []<Real T>() { return reference_fits<T>(); });
    TableArtifact t;
    t.table_id = id;
    t.title = id == 1 ? "Legendre coefficients"
                      : "Legendre coefficients for 16 digits accuracy";
    t.column_labels = {"k", "P_k", "Pn_k", "P_k_OLS", "T_k"};
    const auto& taylor = taylor_reference().coeffs;
    for (int k = 0; k <= kReferenceDegree; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        t.rows.push_back({static_cast<double>(k), fits[0].series_original.coeffs[ks],
                          fits[1].series_original.coeffs[ks],
                          fits[2].series_original.coeffs[ks], taylor[ks]});
    }
    t.notes.push_back(digits_note(precision_digits));
    return t;
}

TableArtifact sum_of_squares_table(int precision_digits) {
    auto fits = with_precision(precision_digits, []<Real T>() { return reference_fits<T>(); });
    TableArtifact t;
    t.table_id = 2;
    t.title = "Total Sum of Squares (fitted values, sum of yhat^2)";
    t.column_labels = {"domain", "P_k", "Pn_k", "P_k_OLS"};
    t.row_labels = {"[-1,1]x[-1,1]", "[-pi,pi]x[ymin,ymax]"};
    t.rows.push_back({fits[0].ss_normalized.fitted_ss, fits[1].ss_normalized.fitted_ss,
                      fits[2].ss_normalized.fitted_ss});
    t.rows.push_back({fits[0].ss_original.fitted_ss, fits[1].ss_original.fitted_ss,
                      fits[2].ss_original.fitted_ss});
    t.notes.push_back(digits_note(precision_digits));
    t.notes.push_back("residual SS (normalized): " + std::to_string(fits[0].ss_normalized.residual_ss) +
                      " / " + std::to_string(fits[1].ss_normalized.residual_ss) + " / " +
                      std::to_string(fits[2].ss_normalized.residual_ss));
    return t;
}

template <Real T>
TableArtifact forsythe_table_impl() {
    const auto raw = sample_test_function<T>(kReferencePoints);
    const auto nds = normalize(raw);
    const auto raw_fit = forsythe_fit(raw, kReferenceDegree);
    const auto norm_fit = forsythe_fit(nds, kReferenceDegree);
    const auto mono = back_transform(forsythe_to_monomial(norm_fit), *nds.norm);

    TableArtifact t;
    t.table_id = 3;
    t.title = "Forsythe orthogonal polynomial coefficients";
    t.column_labels = {"k", "b_k_Forsythe", "monomial_Forsythe", "T_k", "divergence"};
    const auto& taylor = taylor_reference().coeffs;
    int diverged = 0;
    for (int k = 0; k <= kReferenceDegree; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        const double c = to_double(mono.coeffs[ks]);
        const double f = divergence_factor(c, taylor[ks]);
        if (k >= 13 && f > 10) {
            ++diverged;
        }
        t.rows.push_back({static_cast<double>(k), to_double(raw_fit.coeffs[ks]), c, taylor[ks], f});
    }
    t.notes.push_back(digits_note(precision_digits_of<T>()));
    t.notes.push_back("b_k: recurrence coefficients on the raw [-pi,pi] data");
    t.notes.push_back("monomial: fit on normalized data, back-transformed to [-pi,pi]");
    t.notes.push_back("indices k >= 13 off from Taylor by more than 10x: " +
                      std::to_string(diverged) + " of 18");
    return t;
}

}  // namespace

TableArtifact reproduce_table(int id, int precision_digits) {
    if (precision_digits != 16 && precision_digits != 32) {
        throw Error(ErrorKind::invalid_count, "precision must be 16 or 32 digits");
    }
    switch (id) {
        case 1:
        case 4:
            return coefficient_table(id, precision_digits);
        case 2:
            return sum_of_squares_table(precision_digits);
        case 3:
            return with_precision(precision_digits,
                                  []<Real T>() { return forsythe_table_impl<T>(); });
        default:
            throw Error(ErrorKind::invalid_count,
                        "no table " + std::to_string(id) + " (expected 1-4)");
    }
}

TableArtifact figure_data(int which, int precision_digits) {
    TableArtifact t;
    if (which == 1) {
        t.table_id = 101;
        t.title = "test function";
        t.column_labels = {"x", "f"};
        const auto grid = make_grid(-pi<double>(), pi<double>(), 1001);
        for (int i = 0; i < grid.n; ++i) {
            const double x = grid.x(i);
            t.rows.push_back({x, test_function(x)});
        }
        return t;
    }
    if (which != 2) {
        throw Error(ErrorKind::invalid_count,
                    "no figure " + std::to_string(which) + " (expected 1 or 2)");
    }
    t.table_id = 102;
    t.title = "Legendre series approximation";
    t.column_labels = {"x", "y", "yhat_P_k", "yhat_Pn_k", "yhat_OLS"};
    auto fits = with_precision(precision_digits, []<Real T>() { return reference_fits<T>(); });
    const auto ds = sample_test_function<double>(kReferencePoints);
    for (int i = 0; i < ds.grid.n; ++i) {
        const double x = ds.grid.x(i);
        std::vector<double> row{x, ds.y[static_cast<std::size_t>(i)]};
        for (const auto& f : fits) {
            row.push_back(horner(f.series_original.coeffs, x));
        }
        t.rows.push_back(std::move(row));
    }
    t.notes.push_back(digits_note(precision_digits));
    return t;
}

}  // namespace legreg
