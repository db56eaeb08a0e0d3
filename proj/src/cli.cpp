#include "detcert/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "detcert/errors.hpp"
#include "detcert/matrix_io.hpp"
#include "detcert/report.hpp"
#include "detcert/search.hpp"
#include "detcert/transform.hpp"
#include "detcert/version.hpp"

namespace detcert {

namespace {

constexpr int kExitSingular = 2;
constexpr int kExitNotMaximal = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 74;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading '" + path + "'");
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed while writing '" + path + "'");
}

struct AnalyzeArgs {
    std::string input;
    std::string format = "grid01";
    bool json = false;
};

struct TransformArgs {
    std::string input;
    std::string output;
    std::string direction;
    std::string input_format;   // empty: derived from direction
    std::string output_format;  // empty: derived from direction
};

struct SearchArgs {
    std::string kind = "01";
    std::size_t order = 0;
    unsigned workers = 0;
    unsigned budget = 0;
};

struct ConvertArgs {
    std::string input;
    std::string output;  // empty: stdout
    std::string from;
    std::string to;
};

int do_analyze(const AnalyzeArgs& args, std::ostream& out) {
    const std::string text = read_file(args.input);
    Matrix01 m = parse_matrix_01(text, matrix_format_from_name(args.format));
    AnalysisReport report = analyze_matrix(m);
    if (args.json)
        out << report_to_json(report).dump(2) << "\n";
    else
        out << report_to_text(report);
    return report.verdict.kind == VerdictKind::NotMaximal ? kExitNotMaximal : 0;
}

int do_transform(const TransformArgs& args, std::ostream& out) {
    if (args.direction == "pm1-to-01") {
        const std::string in_fmt = args.input_format.empty() ? "gridpm" : args.input_format;
        const std::string out_fmt = args.output_format.empty() ? "grid01" : args.output_format;
        MatrixPM1 u = parse_matrix_pm1(read_file(args.input), matrix_format_from_name(in_fmt));
        Matrix01 t = pm1_to_01(u);
        DetRatioCheck check = check_det_ratio(u);
        write_file(args.output, serialize_matrix(t, matrix_format_from_name(out_fmt)));
        out << "input order: " << u.order() << " (+/-1), output order: " << t.order()
            << " (0/1)\n";
        out << "|det(U)| = " << check.rhs << "\n";
        out << "2^" << t.order() << " * |det(T)| = " << check.lhs << "\n";
        out << "determinant identity: " << (check.holds ? "ok" : "VIOLATED") << "\n";
        return check.holds ? 0 : 1;
    }

    // 01-to-pm1
    const std::string in_fmt = args.input_format.empty() ? "grid01" : args.input_format;
    const std::string out_fmt = args.output_format.empty() ? "gridpm" : args.output_format;
    Matrix01 t = parse_matrix_01(read_file(args.input), matrix_format_from_name(in_fmt));
    MatrixPM1 v = zero_one_to_pm1(t);
    DetRatioCheck check = check_det_ratio(v);
    write_file(args.output, serialize_matrix(v, matrix_format_from_name(out_fmt)));
    out << "input order: " << t.order() << " (0/1), output order: " << v.order() << " (+/-1)\n";
    out << "|det(V)| = " << check.rhs << "\n";
    out << "2^" << t.order() << " * |det(T)| = " << check.lhs << "\n";
    out << "determinant identity: " << (check.holds ? "ok" : "VIOLATED") << "\n";
    return check.holds ? 0 : 1;
}

int do_search(const SearchArgs& args, std::ostream& out) {
    SearchOptions options{args.workers, args.budget};
    out << "kind: " << args.kind << "\n";
    out << "order: " << args.order << "\n";
    if (args.kind == "01") {
        SearchResult01 result = brute_force_h(args.order, options);
        out << "max |det|: " << result.max_abs_det << "\n";
        out << "maximizers: " << result.count_maximizers << "\n";
        out << "witness:\n" << serialize_grid01(result.witness);
    } else {
        SearchResultPM1 result = brute_force_g(args.order, options);
        out << "max |det|: " << result.max_abs_det << "\n";
        out << "maximizers (first row/column normalized to +1): " << result.count_maximizers
            << "\n";
        out << "witness:\n" << serialize_gridpm(result.witness);
    }
    return 0;
}

int do_convert(const ConvertArgs& args, std::ostream& out) {
    const MatrixFormat from = matrix_format_from_name(args.from);
    const MatrixFormat to = matrix_format_from_name(args.to);
    const std::string text = read_file(args.input);

    // The value set travels with the grid format; PBM adapts to either side.
    std::string converted;
    if (from == MatrixFormat::GridPm || to == MatrixFormat::GridPm)
        converted = serialize_matrix(parse_matrix_pm1(text, from), to);
    else
        converted = serialize_matrix(parse_matrix_01(text, from), to);

    if (args.output.empty())
        out << converted;
    else
        write_file(args.output, converted);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certification of 0/1 determinant non-maximality via the row-sum "
                 "test, +/-1 <-> 0/1 transforms, brute-force determinant maxima, and exact "
                 "simplex-in-cube geometry"};
    app.name(std::string(kToolName));
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Certify a 0/1 matrix: exact determinant, row sums, verdict, geometry");
    analyze->add_option("--input", analyze_args.input, "matrix file")->required();
    analyze
        ->add_option("--format", analyze_args.format,
                     "input format (0/1 value set): grid01 or pbm")
        ->check(CLI::IsMember({"grid01", "pbm"}));
    CLI::Option* json_flag = analyze->add_flag("--json", analyze_args.json, "emit a JSON report");
    analyze->add_flag("--text", "emit the plain-text report (default)")->excludes(json_flag);

    TransformArgs transform_args;
    CLI::App* transform = app.add_subcommand(
        "transform", "Apply the +/-1 <-> 0/1 procedure and report the determinant identity");
    transform->add_option("--input", transform_args.input, "matrix file")->required();
    transform->add_option("--output", transform_args.output, "output matrix file")->required();
    transform
        ->add_option("--direction", transform_args.direction, "pm1-to-01 or 01-to-pm1")
        ->required()
        ->check(CLI::IsMember({"pm1-to-01", "01-to-pm1"}));
    transform
        ->add_option("--input-format", transform_args.input_format,
                     "override the input format (default: gridpm / grid01 by direction)")
        ->check(CLI::IsMember({"grid01", "gridpm", "pbm"}));
    transform
        ->add_option("--output-format", transform_args.output_format,
                     "override the output format (default: grid01 / gridpm by direction)")
        ->check(CLI::IsMember({"grid01", "gridpm", "pbm"}));

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand(
        "search", "Exhaustive maximum |det| over 0/1 or +/-1 matrices of a given order");
    search->add_option("--kind", search_args.kind, "01 or pm1")
        ->check(CLI::IsMember({"01", "pm1"}));
    search->add_option("--order", search_args.order, "matrix order")->required();
    search
        ->add_option("--workers", search_args.workers,
                     "worker thread count (default: DETCERT_WORKERS or hardware)")
        ->envname("DETCERT_WORKERS");
    search->add_option("--budget", search_args.budget,
                       "largest order to allow (default: 5 for 01, 6 for pm1)");

    ConvertArgs convert_args;
    CLI::App* convert =
        app.add_subcommand("convert", "Convert a matrix file between formats, including PBM");
    convert->add_option("--input", convert_args.input, "matrix file")->required();
    convert->add_option("--output", convert_args.output, "output file (default: stdout)");
    convert->add_option("--from", convert_args.from, "input format")
        ->required()
        ->check(CLI::IsMember({"grid01", "gridpm", "pbm"}));
    convert->add_option("--to", convert_args.to, "output format")
        ->required()
        ->check(CLI::IsMember({"grid01", "gridpm", "pbm"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed()) return do_analyze(analyze_args, out);
        if (transform->parsed()) return do_transform(transform_args, out);
        if (search->parsed()) return do_search(search_args, out);
        return do_convert(convert_args, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const SingularMatrix& e) {
        err << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const OrderTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace detcert
