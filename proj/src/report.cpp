#include "legreg/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "legreg/error.hpp"

namespace legreg {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json to_json(const PolySeries<double>& series) {
    return {{"basis", to_string(series.basis)},
            {"domain", {series.domain.first, series.domain.second}},
            {"coeffs", series.coeffs}};
}

PolySeries<double> series_from_json(const nlohmann::json& j) {
    try {
        PolySeries<double> s;
        s.basis = basis_from_string(j.at("basis").get<std::string>());
        const auto& d = j.at("domain");
        s.domain = {d.at(0).get<double>(), d.at(1).get<double>()};
        s.coeffs = j.at("coeffs").get<std::vector<double>>();
        if (s.coeffs.empty() || !(s.domain.second > s.domain.first)) {
            throw Error(ErrorKind::parse, "series record needs coefficients and a valid domain");
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("series record: ") + e.what());
    }
}

nlohmann::json to_json(const SSReport& ss) {
    return {{"scale", to_string(ss.scale)},
            {"data_ss", ss.data_ss},
            {"fitted_ss", ss.fitted_ss},
            {"residual_ss", ss.residual_ss}};
}

nlohmann::json to_json(const FitReport& report) {
    return {{"method", to_string(report.method)},
            {"degree", report.degree},
            {"precision_digits", report.precision_digits},
            {"series_normalized", to_json(report.series_normalized)},
            {"series_original", to_json(report.series_original)},
            {"sum_of_squares",
             {{"normalized", to_json(report.ss_normalized)},
              {"original", to_json(report.ss_original)}}},
            {"condition",
             {{"gram_condition_orthonormal", report.condition.gram_condition_orthonormal},
              {"gram_condition_monomial", report.condition.gram_condition_monomial}}},
            {"elapsed_ms", report.elapsed_ms()}};
}

nlohmann::json forsythe_to_json(const ForsytheFit<double>& fit,
                                const PolySeries<double>& original, const SSReport& ss) {
    PolySeries<double> native{BasisKind::forsythe, fit.coeffs,
                              {fit.basis.grid.a, fit.basis.grid.b}};
    return {{"method", "forsythe"},
            {"degree", fit.basis.degree()},
            {"precision_digits", 16},
            {"series_normalized", to_json(native)},
            {"series_original", to_json(original)},
            {"recurrence",
             {{"alphas", fit.basis.alphas}, {"betas", fit.basis.betas}, {"norms", fit.basis.norms}}},
            {"sum_of_squares", {{to_string(ss.scale), to_json(ss)}}}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string short_number(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

void write_ss_text(const SSReport& ss, std::ostream& out) {
    out << "  " << std::left << std::setw(11) << to_string(ss.scale) << std::right
        << " data " << std::setw(16) << short_number(ss.data_ss)
        << "  fitted " << std::setw(16) << short_number(ss.fitted_ss)
        << "  residual " << format_number(ss.residual_ss) << '\n';
}

}  // namespace

void write_fit_report(const FitReport& report, Format format, std::ostream& out) {
    switch (format) {
        case Format::structured:
            out << to_json(report).dump(2) << '\n';
            return;
        case Format::csv:
            out << "k,normalized,original\n";
            for (std::size_t k = 0; k < report.series_original.coeffs.size(); ++k) {
                out << k << ',' << format_number(report.series_normalized.coeffs[k]) << ','
                    << format_number(report.series_original.coeffs[k]) << '\n';
            }
            return;
        case Format::text:
            break;
    }
    out << "method     " << to_string(report.method) << '\n'
        << "degree     " << report.degree << '\n'
        << "precision  " << report.precision_digits << " digits\n"
        << "domain     [" << short_number(report.series_original.domain.first) << ", "
        << short_number(report.series_original.domain.second) << "]\n\n";
    out << std::setw(4) << "k" << "  " << std::setw(26)
        << (std::string("normalized (") + to_string(report.series_normalized.basis) + ")")
        << "  " << std::setw(26) << "original (monomial)" << '\n';
    for (std::size_t k = 0; k < report.series_original.coeffs.size(); ++k) {
        out << std::setw(4) << k << "  " << std::setw(26)
            << format_number(report.series_normalized.coeffs[k]) << "  " << std::setw(26)
            << format_number(report.series_original.coeffs[k]) << '\n';
    }
    out << "\nsum of squares\n";
    write_ss_text(report.ss_normalized, out);
    write_ss_text(report.ss_original, out);
    out << "\ncondition (Gram matrix, 2-norm)\n"
        << "  orthonormal Legendre  " << short_number(report.condition.gram_condition_orthonormal)
        << "\n  monomial              " << short_number(report.condition.gram_condition_monomial)
        << "\n\nelapsed    " << std::fixed << std::setprecision(3) << report.elapsed_ms()
        << " ms\n";
    out.unsetf(std::ios::floatfield);
}

void write_table(const TableArtifact& table, Format format, std::ostream& out) {
    const bool labelled = !table.row_labels.empty();
    if (format == Format::structured) {
        nlohmann::json j{{"table_id", table.table_id},
                         {"title", table.title},
                         {"columns", table.column_labels},
                         {"rows", table.rows},
                         {"notes", table.notes}};
        if (labelled) {
            j["row_labels"] = table.row_labels;
        }
        out << j.dump(2) << '\n';
        return;
    }
    if (format == Format::csv) {
        for (std::size_t c = 0; c < table.column_labels.size(); ++c) {
            out << (c ? "," : "") << csv_field(table.column_labels[c]);
        }
        out << '\n';
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            bool first = true;
            if (labelled) {
                out << csv_field(table.row_labels[r]);
                first = false;
            }
            for (double v : table.rows[r]) {
                out << (first ? "" : ",") << format_number(v);
                first = false;
            }
            out << '\n';
        }
        return;
    }

    out << table.title << '\n';
    constexpr int width = 18;
    for (std::size_t c = 0; c < table.column_labels.size(); ++c) {
        const int w = (c == 0 && !labelled) ? 4 : (c == 0 ? 22 : width);
        out << std::setw(w) << table.column_labels[c];
    }
    out << '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        std::size_t c = 0;
        if (labelled) {
            out << std::setw(22) << table.row_labels[r];
            c = 1;
        }
        for (std::size_t i = 0; i < table.rows[r].size(); ++i, ++c) {
            const double v = table.rows[r][i];
            if (c == 0) {
                out << std::setw(4) << v;
            } else {
                out << std::setw(width) << short_number(v);
            }
        }
        out << '\n';
    }
    for (const auto& note : table.notes) {
        out << "# " << note << '\n';
    }
}

}  // namespace legreg
