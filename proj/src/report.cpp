#include "detcert/report.hpp"

#include <sstream>

#include "detcert/errors.hpp"
#include "detcert/linalg.hpp"
#include "detcert/version.hpp"

namespace detcert {

namespace {

constexpr unsigned kDecimalPlaces = 4;

nlohmann::json rational_json(const Rational& value) {
    return {{"exact", value.to_string()}, {"decimal", value.to_decimal_string(kDecimalPlaces)}};
}

}  // namespace

std::string_view verdict_kind_name(VerdictKind kind) {
    return kind == VerdictKind::NotMaximal ? "NotMaximal" : "NecessaryConditionHolds";
}

AnalysisReport analyze_matrix(const Matrix01& m) {
    BigInt det = det_exact(m.to_int_matrix());
    if (det.is_zero())
        throw SingularMatrix("0/1 matrix is singular; the row-sum test needs det != 0");

    NodeMatrix node = border_01(m);
    LagrangeData lagrange = lagrange_data(node);

    AnalysisReport report;
    report.order = m.order();
    report.verdict = verdict_from(std::move(det), row_abs_sums(lagrange));
    report.geometry = geometry_report(lagrange, node);
    return report;
}

nlohmann::json report_to_json(const AnalysisReport& report) {
    nlohmann::json j;
    j["tool_version"] = std::string(kToolVersion);
    j["order"] = report.order;
    j["det"] = report.verdict.det_value.to_string();

    nlohmann::json sums = nlohmann::json::array();
    for (const Rational& s : report.verdict.sums.sums) sums.push_back(rational_json(s));
    j["row_sums"] = std::move(sums);

    nlohmann::json diameters = nlohmann::json::array();
    for (const Rational& d : report.geometry.axial_diameters)
        diameters.push_back(rational_json(d));
    j["axial_diameters"] = std::move(diameters);

    j["alpha"] = rational_json(report.geometry.alpha);
    j["xi"] = rational_json(report.geometry.xi);
    j["verdict"] = {{"kind", std::string(verdict_kind_name(report.verdict.kind))},
                    {"witness_rows", report.verdict.witness_rows}};
    return j;
}

std::string report_to_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "order: " << report.order << "\n";
    out << "det: " << report.verdict.det_value << "\n";
    out << "row sums of |A^-1| (rows 1.." << report.order << "):\n";
    for (std::size_t i = 0; i < report.verdict.sums.sums.size(); ++i) {
        const Rational& s = report.verdict.sums.sums[i];
        out << "  s_" << (i + 1) << " = " << s << " (" << s.to_decimal_string(kDecimalPlaces)
            << ")\n";
    }
    out << "axial diameters:\n";
    for (std::size_t i = 0; i < report.geometry.axial_diameters.size(); ++i) {
        const Rational& d = report.geometry.axial_diameters[i];
        out << "  d_" << (i + 1) << " = " << d << " (" << d.to_decimal_string(kDecimalPlaces)
            << ")\n";
    }
    out << "alpha: " << report.geometry.alpha << " ("
        << report.geometry.alpha.to_decimal_string(kDecimalPlaces) << ")\n";
    out << "xi: " << report.geometry.xi << " ("
        << report.geometry.xi.to_decimal_string(kDecimalPlaces) << ")\n";
    out << "verdict: " << verdict_kind_name(report.verdict.kind);
    if (!report.verdict.witness_rows.empty()) {
        out << " (rows";
        for (std::size_t row : report.verdict.witness_rows) out << " " << row;
        out << ")";
    }
    out << "\n";
    return out.str();
}

}  // namespace detcert
