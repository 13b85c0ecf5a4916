#include <algorithm>
#include <string>

#include "legreg/error.hpp"
#include "legreg/estimators.hpp"
#include "legreg/quadrature.hpp"
#include "legreg/report.hpp"
#include "legreg/series.hpp"

namespace legreg {

namespace {

std::string canonical(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return c == '_' ? '-' : static_cast<char>(std::tolower(c));
    });
    return s;
}

}  // namespace

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_domain: return "invalid-domain";
        case ErrorKind::invalid_count: return "invalid-count";
        case ErrorKind::invalid_degree: return "invalid-degree";
        case ErrorKind::invalid_basis: return "invalid-basis";
        case ErrorKind::parse: return "parse";
        case ErrorKind::equidistance: return "equidistance";
        case ErrorKind::ordering: return "ordering";
        case ErrorKind::shape: return "shape";
        case ErrorKind::rank: return "rank";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::io: return "io";
    }
    return "error";
}

const char* to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::monomial: return "monomial";
        case BasisKind::legendre: return "legendre";
        case BasisKind::legendre_orthonormal: return "legendre-orthonormal";
        case BasisKind::forsythe: return "forsythe";
    }
    return "?";
}

BasisKind basis_from_string(std::string_view name) {
    const auto s = canonical(name);
    for (auto k : {BasisKind::monomial, BasisKind::legendre, BasisKind::legendre_orthonormal,
                   BasisKind::forsythe}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw Error(ErrorKind::invalid_basis, "unknown basis '" + std::string(name) + "'");
}

const char* to_string(MethodTag method) {
    switch (method) {
        case MethodTag::rectangle_simple: return "rectangle-simple";
        case MethodTag::rectangle_orthonormal: return "rectangle-orthonormal";
        case MethodTag::trapezoid_simple: return "trapezoid-simple";
        case MethodTag::trapezoid_orthonormal: return "trapezoid-orthonormal";
        case MethodTag::ols_orthonormal: return "ols-orthonormal";
    }
    return "?";
}

MethodTag method_from_string(std::string_view name) {
    const auto s = canonical(name);
    if (s == "ols") {
        return MethodTag::ols_orthonormal;
    }
    for (MethodTag m : kAllMethods) {
        if (s == to_string(m)) {
            return m;
        }
    }
    throw Error(ErrorKind::invalid_basis, "unknown method '" + std::string(name) + "'");
}

const char* to_string(Scale scale) {
    return scale == Scale::normalized ? "normalized" : "original";
}

const char* to_string(InnerProductRule rule) {
    return rule == InnerProductRule::rectangle ? "rectangle" : "trapezoid";
}

Format format_from_string(std::string_view name) {
    const auto s = canonical(name);
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "structured" || s == "json") return Format::structured;
    throw Error(ErrorKind::parse, "unknown format '" + std::string(name) + "'");
}

}  // namespace legreg
