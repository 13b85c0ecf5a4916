#pragma once

#include <stdexcept>
#include <string>

namespace legreg {

enum class ErrorKind {
    invalid_domain,
    invalid_count,
    invalid_degree,
    invalid_basis,
    parse,
    equidistance,
    ordering,
    shape,
    rank,
    degenerate,
    io,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every validation and numerical failure; the
/// kind lets callers and tests discriminate without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace legreg
