#pragma once

#include <stdexcept>
#include <string>

namespace pufent {

// Malformed numeric input; carries a 1-based row/column location when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t row, std::size_t col)
        : std::runtime_error(msg + " (row " + std::to_string(row) + ", column " + std::to_string(col) + ")"),
          row_(row), col_(col) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), row_(0), col_(0) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_, col_;
};

// Structurally invalid data: ragged rows, odd RO count, length mismatches.
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid or unsupported parameter (unknown code name, even repetition length, ...).
class ParamError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested computation is infeasible for the given code size. Callers that can
// fall back (e.g. the table report) render this as NaN instead of failing.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pufent
