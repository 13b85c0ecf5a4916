// legreg: polynomial regression with Legendre series.
//
//   legreg fit --input data.csv [--degree 30] [--method trapezoid-orthonormal]
//   legreg compare --input data.csv
//   legreg reproduce --table 1 | --figure 2
//   legreg sample --n 629 --output f.csv
//   legreg bench --repeat 5

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "legreg/error.hpp"
#include "legreg/estimators.hpp"
#include "legreg/example_suite.hpp"
#include "legreg/forsythe.hpp"
#include "legreg/grid.hpp"
#include "legreg/kernels.hpp"
#include "legreg/report.hpp"

namespace {

using namespace legreg;

struct CliConfig {
    std::string input_path;
    std::string output_path;
    int degree = kReferenceDegree;
    std::string method = "trapezoid-orthonormal";
    std::optional<int> precision_digits;
    std::string format = "text";
    std::optional<int> table;
    std::optional<int> figure;
    int n = kReferencePoints;
    int repeat = 5;
};

int precision_or(const CliConfig& cfg, int fallback) {
    return cfg.precision_digits.value_or(fallback);
}

/// Writes to --output if given, else standard output.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) {
            throw Error(ErrorKind::io, "write failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

template <Real T>
Dataset<T> read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    }
    return load_dataset<T>(in);
}

int cmd_fit(const CliConfig& cfg) {
    const MethodTag method = method_from_string(cfg.method);
    const Format format = format_from_string(cfg.format);
    FitReport report = with_precision(precision_or(cfg, 16), [&]<Real T>() {
        return fit_pipeline(read_input<T>(cfg.input_path), cfg.degree, method);
    });
    Sink sink(cfg.output_path);
    write_fit_report(report, format, sink.stream());
    sink.finish();
    return 0;
}

struct Comparison {
    std::vector<FitReport> fits;  // in kAllMethods order
    PolySeries<double> forsythe_original;
    ForsytheFit<double> forsythe;
    SSReport forsythe_ss_normalized;
    SSReport forsythe_ss_original;
    bool reference = false;
};

template <Real T>
Comparison run_comparison(const CliConfig& cfg) {
    const Dataset<T> ds = read_input<T>(cfg.input_path);
    Comparison cmp;
    for (MethodTag m : kAllMethods) {
        cmp.fits.push_back(fit_pipeline(ds, cfg.degree, m));
    }
    const Dataset<T> nds = normalize(ds);
    const auto ffit = forsythe_fit(nds, cfg.degree);
    const auto original = back_transform(forsythe_to_monomial(ffit), *nds.norm);

    std::vector<T> fitted(static_cast<std::size_t>(nds.grid.n));
    std::vector<T> resid(fitted.size());
    for (int i = 0; i < nds.grid.n; ++i) {
        const auto is = static_cast<std::size_t>(i);
        fitted[is] = ffit.evaluate(nds.grid.x(i));
        resid[is] = nds.y[is] - fitted[is];
    }
    auto sq = [](const std::vector<T>& v) {
        std::span<const T> s(v);
        return to_double(kernels::dot<T>(s, s));
    };
    cmp.forsythe_ss_normalized = {sq(nds.y), sq(fitted), sq(resid), Scale::normalized};
    cmp.forsythe_ss_original = sum_of_squares(ds, original, Scale::original);

    ForsytheFit<double> fd;
    fd.coeffs.reserve(ffit.coeffs.size());
    for (const T& c : ffit.coeffs) fd.coeffs.push_back(to_double(c));
    for (const T& a : ffit.basis.alphas) fd.basis.alphas.push_back(to_double(a));
    for (const T& b : ffit.basis.betas) fd.basis.betas.push_back(to_double(b));
    for (const T& v : ffit.basis.norms) fd.basis.norms.push_back(to_double(v));
    fd.basis.grid = {to_double(nds.grid.a), to_double(nds.grid.b), nds.grid.n,
                     to_double(nds.grid.h)};
    cmp.forsythe = std::move(fd);
    cmp.forsythe_original = original.template cast<double>();

    if constexpr (std::is_same_v<T, double>) {
        cmp.reference = is_reference_dataset(ds) && cfg.degree <= kReferenceDegree;
    } else {
        Dataset<double> dd = make_dataset(
            make_grid(to_double(ds.grid.a), to_double(ds.grid.b), ds.grid.n),
            [&] {
                std::vector<double> v;
                for (const T& y : ds.y) v.push_back(to_double(y));
                return v;
            }());
        cmp.reference = is_reference_dataset(dd) && cfg.degree <= kReferenceDegree;
    }
    return cmp;
}

const FitReport& fit_of(const Comparison& cmp, MethodTag m) {
    for (const auto& f : cmp.fits) {
        if (f.method == m) return f;
    }
    throw Error(ErrorKind::invalid_basis, "method missing from comparison");
}

int cmd_compare(const CliConfig& cfg) {
    const Format format = format_from_string(cfg.format);
    const int digits = precision_or(cfg, 16);
    Comparison cmp = with_precision(digits, [&]<Real T>() { return run_comparison<T>(cfg); });

    const MethodTag cols[] = {MethodTag::trapezoid_simple, MethodTag::trapezoid_orthonormal,
                              MethodTag::ols_orthonormal};
    const auto& taylor = taylor_reference().coeffs;
    const std::size_t len = static_cast<std::size_t>(cfg.degree) + 1;

    // Smallest normalized residual; OLS by construction.
    MethodTag best = cmp.fits.front().method;
    for (const auto& f : cmp.fits) {
        if (f.ss_normalized.residual_ss < fit_of(cmp, best).ss_normalized.residual_ss) {
            best = f.method;
        }
    }

    Sink sink(cfg.output_path);
    std::ostream& out = sink.stream();
    if (format == Format::structured) {
        nlohmann::json j;
        j["degree"] = cfg.degree;
        j["precision_digits"] = digits;
        j["fits"] = nlohmann::json::array();
        for (const auto& f : cmp.fits) j["fits"].push_back(to_json(f));
        j["forsythe"] = forsythe_to_json(cmp.forsythe, cmp.forsythe_original,
                                         cmp.forsythe_ss_original);
        j["condition"] = to_json(cmp.fits.front()).at("condition");
        j["min_residual_method"] = to_string(best);
        if (cmp.reference) {
            j["taylor_reference"] = std::vector<double>(taylor.begin(), taylor.end());
        }
        out << j.dump(2) << '\n';
        sink.finish();
        return 0;
    }

    std::vector<std::string> labels{"k"};
    for (MethodTag m : cols) labels.emplace_back(to_string(m));
    labels.emplace_back("forsythe");
    if (cmp.reference) labels.emplace_back("taylor");

    TableArtifact coeffs;
    coeffs.title = "original-domain monomial coefficients, degree " + std::to_string(cfg.degree);
    coeffs.column_labels = labels;
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<double> row{static_cast<double>(k)};
        for (MethodTag m : cols) row.push_back(fit_of(cmp, m).series_original.coeffs[k]);
        row.push_back(cmp.forsythe_original.coeffs[k]);
        if (cmp.reference) row.push_back(taylor[k]);
        coeffs.rows.push_back(std::move(row));
    }

    TableArtifact ss;
    ss.title = "residual sum of squares";
    ss.column_labels = {"method", "normalized", "original"};
    for (const auto& f : cmp.fits) {
        ss.row_labels.emplace_back(to_string(f.method));
        ss.rows.push_back({f.ss_normalized.residual_ss, f.ss_original.residual_ss});
    }
    ss.row_labels.emplace_back("forsythe");
    ss.rows.push_back({cmp.forsythe_ss_normalized.residual_ss,
                       cmp.forsythe_ss_original.residual_ss});

    write_table(coeffs, format, out);
    out << '\n';
    write_table(ss, format, out);
    if (format == Format::text) {
        const auto& cond = cmp.fits.front().condition;
        out << "\nminimum residual: " << to_string(best) << '\n'
            << "Gram condition: orthonormal Legendre " << cond.gram_condition_orthonormal
            << ", monomial " << cond.gram_condition_monomial << '\n';
    }
    sink.finish();
    return 0;
}

int cmd_reproduce(const CliConfig& cfg) {
    const Format format = format_from_string(cfg.format);
    if (cfg.table.has_value() == cfg.figure.has_value()) {
        throw Error(ErrorKind::invalid_count, "reproduce needs exactly one of --table or --figure");
    }
    TableArtifact t;
    if (cfg.table) {
        // Tables 1 and 2 were computed with 32 digits, tables 3 and 4 with 16.
        const int fallback = (*cfg.table == 1 || *cfg.table == 2) ? 32 : 16;
        t = reproduce_table(*cfg.table, precision_or(cfg, fallback));
    } else {
        t = figure_data(*cfg.figure, precision_or(cfg, 16));
    }
    Sink sink(cfg.output_path);
    write_table(t, format, sink.stream());
    sink.finish();
    return 0;
}

int cmd_sample(const CliConfig& cfg) {
    Sink sink(cfg.output_path);
    with_precision(precision_or(cfg, 16), [&]<Real T>() {
        save_dataset(sample_test_function<T>(cfg.n), sink.stream());
        return 0;
    });
    sink.finish();
    return 0;
}

int cmd_bench(const CliConfig& cfg) {
    const int digits = precision_or(cfg, 16);
    const MethodTag methods[] = {MethodTag::trapezoid_simple, MethodTag::trapezoid_orthonormal,
                                 MethodTag::ols_orthonormal};
    struct Timing {
        MethodTag method;
        double mean_ms;
        double min_ms;
    };
    std::vector<Timing> timings = with_precision(digits, [&]<Real T>() {
        const Dataset<T> ds = cfg.input_path.empty() ? sample_test_function<T>(kReferencePoints)
                                                     : read_input<T>(cfg.input_path);
        std::vector<Timing> out;
        for (MethodTag m : methods) {
            double total = 0;
            double best = std::numeric_limits<double>::infinity();
            for (int r = 0; r < cfg.repeat; ++r) {
                const double ms = fit_pipeline(ds, cfg.degree, m).elapsed_ms();
                total += ms;
                best = std::min(best, ms);
            }
            out.push_back({m, total / cfg.repeat, best});
        }
        return out;
    });

    Sink sink(cfg.output_path);
    std::ostream& out = sink.stream();
    out << "kernels: " << kernels::to_string(kernels::active_isa()) << ", precision " << digits
        << " digits, degree " << cfg.degree << ", repeat " << cfg.repeat << '\n';
    out << std::left << std::setw(24) << "method" << std::right << std::setw(14) << "mean_ms"
        << std::setw(14) << "min_ms" << '\n';
    for (const auto& t : timings) {
        out << std::left << std::setw(24) << to_string(t.method) << std::right << std::fixed
            << std::setprecision(4) << std::setw(14) << t.mean_ms << std::setw(14) << t.min_ms
            << '\n';
    }
    out.unsetf(std::ios::floatfield);
    const auto fastest = std::min_element(timings.begin(), timings.end(),
                                          [](const Timing& a, const Timing& b) {
                                              return a.mean_ms < b.mean_ms;
                                          });
    out << "fastest: " << to_string(fastest->method)
        << (fastest->method == MethodTag::trapezoid_orthonormal
                ? " (orthonormal trapezoid fastest)"
                : " (orthonormal trapezoid not fastest on this run)")
        << '\n';
    sink.finish();
    return 0;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"Polynomial regression with Legendre series: trapezoidal, rectangle and "
                 "least-squares coefficient estimators"};
    app.require_subcommand(1);

    auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--precision", cfg.precision_digits, "working precision in digits (16 or 32)")
            ->check(CLI::IsMember({16, 32}));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output,-o", cfg.output_path, "output file (default: stdout)");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text | csv | structured")
            ->check(CLI::IsMember({"text", "csv", "structured", "json"}));
    };
    auto add_degree = [&](CLI::App* sub) {
        sub->add_option("--degree,-m", cfg.degree, "polynomial degree (default 30)")
            ->check(CLI::NonNegativeNumber);
    };

    auto* fit = app.add_subcommand("fit", "fit one estimator and print its report");
    fit->add_option("--input,-i", cfg.input_path, "two-column x,y data file")->required();
    add_degree(fit);
    fit->add_option("--method", cfg.method,
                    "rectangle-simple | rectangle-orthonormal | trapezoid-simple | "
                    "trapezoid-orthonormal | ols");
    add_precision(fit);
    add_output(fit);
    add_format(fit);

    auto* compare = app.add_subcommand("compare", "all estimators, Forsythe and conditioning side by side");
    compare->add_option("--input,-i", cfg.input_path, "two-column x,y data file")->required();
    add_degree(compare);
    add_precision(compare);
    add_output(compare);
    add_format(compare);

    auto* reproduce = app.add_subcommand("reproduce", "regenerate a table (1-4) or figure data (1-2)");
    reproduce->add_option("--table", cfg.table, "table id 1-4")->check(CLI::Range(1, 4));
    reproduce->add_option("--figure", cfg.figure, "figure id 1-2")->check(CLI::Range(1, 2));
    add_precision(reproduce);
    add_output(reproduce);
    add_format(reproduce);

    auto* sample = app.add_subcommand("sample", "write the sampled test function as x,y lines");
    sample->add_option("--n", cfg.n, "number of grid points (default 629)")
        ->check(CLI::Range(2, 100000000));
    add_precision(sample);
    add_output(sample);

    auto* bench = app.add_subcommand("bench", "time the three estimators");
    bench->add_option("--input,-i", cfg.input_path, "data file (default: sampled test function)");
    bench->add_option("--repeat", cfg.repeat, "repetitions per method")->check(CLI::PositiveNumber);
    add_degree(bench);
    add_precision(bench);
    add_output(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "legreg: " << one_line(e.what()) << '\n';
        return 2;
    }

    try {
        if (*fit) return cmd_fit(cfg);
        if (*compare) return cmd_compare(cfg);
        if (*reproduce) return cmd_reproduce(cfg);
        if (*sample) return cmd_sample(cfg);
        if (*bench) return cmd_bench(cfg);
    } catch (const Error& e) {
        std::cerr << "legreg: " << to_string(e.kind()) << " error: " << one_line(e.what()) << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "legreg: " << one_line(e.what()) << '\n';
        return 1;
    }
    return 1;
}
