#pragma once

// Text, CSV and structured (JSON) renderings of fits, series and tables.
// Machine formats carry 17 significant digits, enough to round-trip a double.

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "legreg/estimators.hpp"
#include "legreg/example_suite.hpp"
#include "legreg/forsythe.hpp"
#include "legreg/series.hpp"

namespace legreg {

enum class Format { text, csv, structured };

Format format_from_string(std::string_view name);

/// %.17g
std::string format_number(double v);

nlohmann::json to_json(const PolySeries<double>& series);
PolySeries<double> series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SSReport& ss);
nlohmann::json to_json(const FitReport& report);

/// ForsytheFit rendered like a FitReport with method "forsythe".
nlohmann::json forsythe_to_json(const ForsytheFit<double>& fit,
                                const PolySeries<double>& original, const SSReport& ss);

void write_fit_report(const FitReport& report, Format format, std::ostream& out);
void write_table(const TableArtifact& table, Format format, std::ostream& out);

}  // namespace legreg
