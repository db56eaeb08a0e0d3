#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detcert {

// A square matrix with determinant zero was passed to an operation that
// needs an invertible one.
struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("matrix is singular") {}
    explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

// Node matrix of a zero-volume simplex.
struct DegenerateSimplex : std::domain_error {
    DegenerateSimplex() : std::domain_error("simplex is degenerate (zero volume)") {}
    explicit DegenerateSimplex(const std::string& what) : std::domain_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct OrderTooLarge : std::invalid_argument {
    explicit OrderTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Consistency failure that should be impossible for valid inputs.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Malformed matrix file. line/column are 1-based; 0 means "not applicable".
struct ParseError : std::runtime_error {
    std::size_t line = 0;
    std::size_t column = 0;

    explicit ParseError(const std::string& what, std::size_t line_no = 0,
                        std::size_t column_no = 0)
        : std::runtime_error(format(what, line_no, column_no)),
          line(line_no),
          column(column_no) {}

private:
    static std::string format(const std::string& what, std::size_t line_no,
                              std::size_t column_no) {
        if (line_no == 0) return what;
        return what + " (line " + std::to_string(line_no) + ", column " +
               std::to_string(column_no) + ")";
    }
};

struct NonSquare : ParseError {
    using ParseError::ParseError;
};

struct BadSymbol : ParseError {
    using ParseError::ParseError;
};

}  // namespace detcert
