#pragma once

#include <string>

#include <json.hpp>

#include "detcert/binary_matrix.hpp"
#include "detcert/certify.hpp"
#include "detcert/geometry.hpp"

namespace detcert {

// Everything the analyze command reports about a 0/1 matrix: the row-sum
// verdict plus the simplex geometry of the bordered node matrix.
struct AnalysisReport {
    std::size_t order = 0;
    Verdict verdict;
    GeometryReport geometry;
};

// Runs the full pipeline with a single matrix inversion. Throws
// SingularMatrix when det(m) = 0.
AnalysisReport analyze_matrix(const Matrix01& m);

// JSON shape: every rational appears as {"exact": "p/q", "decimal": "x.xxxx"}
// with the exact string authoritative; decimals are 4-place, round half to
// even, and exist only for human consumption.
nlohmann::json report_to_json(const AnalysisReport& report);

std::string report_to_text(const AnalysisReport& report);

std::string_view verdict_kind_name(VerdictKind kind);

}  // namespace detcert
