#include "detcert/matrix_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "detcert/errors.hpp"

namespace detcert {

namespace {

// Splits into lines, accepting both LF and CRLF; a trailing newline is
// optional. Trailing blank lines are ignored.
std::vector<std::string_view> grid_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// Validated square grid of symbols from a two-letter alphabet.
std::vector<std::string_view> checked_grid(std::string_view text, std::string_view alphabet) {
    std::vector<std::string_view> lines = grid_lines(text);
    if (lines.empty()) throw ParseError("empty matrix file");
    const std::size_t n = lines.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (lines[r].size() != n)
            throw NonSquare("grid is not square: " + std::to_string(n) + " lines but line has " +
                                std::to_string(lines[r].size()) + " symbols",
                            r + 1, lines[r].size() + 1);
        for (std::size_t c = 0; c < n; ++c) {
            char symbol = lines[r][c];
            if (alphabet.find(symbol) == std::string_view::npos)
                throw BadSymbol(std::string("unexpected symbol '") + symbol + "'", r + 1, c + 1);
        }
    }
    return lines;
}

// Cursor over PBM text that skips whitespace and '#' comments, tracking
// 1-based line/column for error messages.
class PbmCursor {
public:
    explicit PbmCursor(std::string_view text) : text_(text) {}

    bool at_end() {
        skip_separators();
        return pos_ >= text_.size();
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    char take() {
        char c = text_[pos_];
        advance();
        return c;
    }

    std::string take_token() {
        skip_separators();
        std::string token;
        while (pos_ < text_.size() && !is_separator(text_[pos_])) token.push_back(take());
        return token;
    }

    std::size_t take_dimension() {
        skip_separators();
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
            throw ParseError("expected a decimal dimension", line_, column_);
        std::size_t value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + static_cast<std::size_t>(take() - '0');
            if (value > 100000) throw ParseError("dimension out of range", line_, column_);
        }
        return value;
    }

private:
    static bool is_separator(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#';
    }

    void skip_separators() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct PbmRaster {
    std::size_t order = 0;
    std::vector<std::uint8_t> bits;  // row-major
};

PbmRaster parse_pbm_raster(std::string_view text) {
    PbmCursor cursor(text);
    std::string magic = cursor.take_token();
    if (magic != "P1")
        throw ParseError("expected ASCII PBM magic \"P1\", got \"" + magic + "\"", 1, 1);
    const std::size_t width = cursor.take_dimension();
    const std::size_t height = cursor.take_dimension();
    if (width == 0 || height == 0) throw ParseError("PBM dimensions must be positive");
    if (width != height)
        throw NonSquare("PBM raster is " + std::to_string(width) + "x" + std::to_string(height) +
                        ", expected a square matrix");

    PbmRaster raster;
    raster.order = width;
    raster.bits.reserve(width * height);
    for (std::size_t i = 0; i < width * height; ++i) {
        if (cursor.at_end())
            throw ParseError("PBM raster ended early", cursor.line(), cursor.column());
        const std::size_t line = cursor.line(), column = cursor.column();
        char c = cursor.take();
        if (c != '0' && c != '1')
            throw BadSymbol(std::string("unexpected symbol '") + c + "' in PBM raster", line,
                            column);
        raster.bits.push_back(c == '1' ? 1 : 0);
    }
    if (!cursor.at_end())
        throw ParseError("trailing content after PBM raster", cursor.line(), cursor.column());
    return raster;
}

}  // namespace

MatrixFormat matrix_format_from_name(std::string_view name) {
    if (name == "grid01") return MatrixFormat::Grid01;
    if (name == "gridpm") return MatrixFormat::GridPm;
    if (name == "pbm") return MatrixFormat::Pbm;
    throw std::invalid_argument("unknown matrix format: " + std::string(name));
}

std::string_view matrix_format_name(MatrixFormat format) {
    switch (format) {
        case MatrixFormat::Grid01: return "grid01";
        case MatrixFormat::GridPm: return "gridpm";
        case MatrixFormat::Pbm: return "pbm";
    }
    return "?";
}

Matrix01 parse_grid01(std::string_view text) {
    std::vector<std::string_view> lines = checked_grid(text, "01");
    Matrix01 result(lines.size());
    for (std::size_t r = 0; r < lines.size(); ++r)
        for (std::size_t c = 0; c < lines.size(); ++c)
            result.set(r, c, lines[r][c] == '1' ? 1 : 0);
    return result;
}

MatrixPM1 parse_gridpm(std::string_view text) {
    std::vector<std::string_view> lines = checked_grid(text, "+-");
    MatrixPM1 result(lines.size());
    for (std::size_t r = 0; r < lines.size(); ++r)
        for (std::size_t c = 0; c < lines.size(); ++c)
            result.set(r, c, lines[r][c] == '+' ? 1 : -1);
    return result;
}

Matrix01 parse_pbm_01(std::string_view text) {
    PbmRaster raster = parse_pbm_raster(text);
    Matrix01 result(raster.order);
    for (std::size_t r = 0; r < raster.order; ++r)
        for (std::size_t c = 0; c < raster.order; ++c)
            result.set(r, c, raster.bits[r * raster.order + c]);
    return result;
}

MatrixPM1 parse_pbm_pm1(std::string_view text) {
    PbmRaster raster = parse_pbm_raster(text);
    MatrixPM1 result(raster.order);
    for (std::size_t r = 0; r < raster.order; ++r)
        for (std::size_t c = 0; c < raster.order; ++c)
            result.set(r, c, raster.bits[r * raster.order + c] ? 1 : -1);
    return result;
}

Matrix01 parse_matrix_01(std::string_view text, MatrixFormat format) {
    switch (format) {
        case MatrixFormat::Grid01: return parse_grid01(text);
        case MatrixFormat::Pbm: return parse_pbm_01(text);
        case MatrixFormat::GridPm:
            throw std::invalid_argument("gridpm carries a +/-1 matrix, not 0/1");
    }
    throw std::invalid_argument("unknown matrix format");
}

MatrixPM1 parse_matrix_pm1(std::string_view text, MatrixFormat format) {
    switch (format) {
        case MatrixFormat::GridPm: return parse_gridpm(text);
        case MatrixFormat::Pbm: return parse_pbm_pm1(text);
        case MatrixFormat::Grid01:
            throw std::invalid_argument("grid01 carries a 0/1 matrix, not +/-1");
    }
    throw std::invalid_argument("unknown matrix format");
}

std::string serialize_grid01(const Matrix01& m) {
    std::string out;
    out.reserve(m.order() * (m.order() + 1));
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) out.push_back(m.at(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::string serialize_gridpm(const MatrixPM1& m) {
    std::string out;
    out.reserve(m.order() * (m.order() + 1));
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) out.push_back(m.at(r, c) == 1 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

namespace {

template <typename BitAt>
std::string pbm_raster_text(std::size_t order, BitAt bit_at) {
    std::string out = "P1\n" + std::to_string(order) + " " + std::to_string(order) + "\n";
    for (std::size_t r = 0; r < order; ++r) {
        for (std::size_t c = 0; c < order; ++c) {
            if (c > 0) out.push_back(' ');
            out.push_back(bit_at(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace

std::string export_pbm(const Matrix01& m) {
    return pbm_raster_text(m.order(),
                           [&m](std::size_t r, std::size_t c) { return m.at(r, c) == 1; });
}

std::string export_pbm(const MatrixPM1& m) {
    return pbm_raster_text(m.order(),
                           [&m](std::size_t r, std::size_t c) { return m.at(r, c) == 1; });
}

std::string serialize_matrix(const Matrix01& m, MatrixFormat format) {
    switch (format) {
        case MatrixFormat::Grid01: return serialize_grid01(m);
        case MatrixFormat::Pbm: return export_pbm(m);
        case MatrixFormat::GridPm:
            throw std::invalid_argument("gridpm carries a +/-1 matrix, not 0/1");
    }
    throw std::invalid_argument("unknown matrix format");
}

std::string serialize_matrix(const MatrixPM1& m, MatrixFormat format) {
    switch (format) {
        case MatrixFormat::GridPm: return serialize_gridpm(m);
        case MatrixFormat::Pbm: return export_pbm(m);
        case MatrixFormat::Grid01:
            throw std::invalid_argument("grid01 carries a 0/1 matrix, not +/-1");
    }
    throw std::invalid_argument("unknown matrix format");
}

}  // namespace detcert
