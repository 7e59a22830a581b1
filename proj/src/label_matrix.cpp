#include "pentropy/label_matrix.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pentropy {

namespace {

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
    throw std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what);
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }

    // PGM token scanning: whitespace separated, '#' starts a comment to end of line
    void skip_space_and_comments() {
        while (!eof()) {
            char c = text[pos];
            if (c == '#') {
                while (!eof() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    std::uint64_t next_uint(const char* what) {
        skip_space_and_comments();
        if (eof()) parse_fail(pos, std::string("expected ") + what + ", got end of input");
        if (text[pos] == '-') parse_fail(pos, std::string(what) + " must be non-negative");
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec == std::errc::result_out_of_range) parse_fail(pos, std::string(what) + " overflows");
        if (ec != std::errc() || ptr == text.data() + pos)
            parse_fail(pos, std::string("expected ") + what);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }
};

LabelMatrix load_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        parse_fail(0, "not a PGM file (expected magic P2 or P5)");
    const bool binary = bytes[1] == '5';
    Cursor cur{bytes, 2};

    const std::uint64_t width = cur.next_uint("width");
    const std::uint64_t height = cur.next_uint("height");
    const std::uint64_t maxval = cur.next_uint("maxval");
    if (width == 0 || height == 0) parse_fail(cur.pos, "zero image dimension");
    if (maxval == 0 || maxval > 65535) parse_fail(cur.pos, "maxval out of range [1, 65535]");

    LabelMatrix m;
    m.rows = static_cast<std::size_t>(height);
    m.cols = static_cast<std::size_t>(width);
    m.labels.resize(m.rows * m.cols);

    if (binary) {
        // single whitespace byte after maxval, then raw samples
        if (cur.eof() || !std::isspace(static_cast<unsigned char>(bytes[cur.pos])))
            parse_fail(cur.pos, "expected whitespace before binary samples");
        ++cur.pos;
        const std::size_t sample_size = maxval > 255 ? 2 : 1;
        const std::size_t need = m.labels.size() * sample_size;
        if (bytes.size() - cur.pos < need)
            parse_fail(bytes.size(), "dimension mismatch: truncated sample data, need " +
                                         std::to_string(need) + " bytes");
        for (std::size_t i = 0; i < m.labels.size(); ++i) {
            std::size_t off = cur.pos + i * sample_size;
            std::uint32_t v;
            if (sample_size == 2) {
                // big-endian 16-bit
                v = (static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off])) << 8) |
                    static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off + 1]));
            } else {
                v = static_cast<unsigned char>(bytes[off]);
            }
            if (v > maxval) parse_fail(off, "sample value " + std::to_string(v) + " exceeds maxval");
            m.labels[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < m.labels.size(); ++i) {
            cur.skip_space_and_comments();
            const std::size_t at = cur.pos;
            std::uint64_t v = cur.next_uint("sample value");
            if (v > maxval) parse_fail(at, "sample value " + std::to_string(v) + " exceeds maxval");
            m.labels[i] = static_cast<std::uint32_t>(v);
        }
        cur.skip_space_and_comments();
        if (!cur.eof()) parse_fail(cur.pos, "dimension mismatch: trailing data after samples");
    }
    return m;
}

LabelMatrix load_csv(std::string_view bytes) {
    LabelMatrix m;
    std::size_t pos = 0;
    std::size_t expected_cols = 0;
    while (pos < bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        std::size_t line_end = (eol == std::string_view::npos) ? bytes.size() : eol;
        std::size_t effective_end = line_end;
        if (effective_end > pos && bytes[effective_end - 1] == '\r') --effective_end;

        if (effective_end > pos) {  // skip blank lines (incl. trailing newline)
            std::size_t field_start = pos;
            std::size_t cols_in_row = 0;
            std::size_t p = pos;
            while (true) {
                std::size_t comma = bytes.find(',', p);
                std::size_t field_end = (comma == std::string_view::npos || comma >= effective_end)
                                            ? effective_end
                                            : comma;
                // trim spaces
                std::size_t s = field_start, e = field_end;
                while (s < e && bytes[s] == ' ') ++s;
                while (e > s && bytes[e - 1] == ' ') --e;
                if (s == e) parse_fail(field_start, "empty field");
                if (bytes[s] == '-') parse_fail(s, "label values must be non-negative");
                std::uint32_t value = 0;
                auto [ptr, ec] = std::from_chars(bytes.data() + s, bytes.data() + e, value);
                if (ec == std::errc::result_out_of_range) parse_fail(s, "value overflow");
                if (ec != std::errc() || ptr != bytes.data() + e)
                    parse_fail(s, "expected a non-negative integer");
                m.labels.push_back(value);
                ++cols_in_row;
                if (field_end == effective_end) break;
                p = field_end + 1;
                field_start = p;
            }
            if (expected_cols == 0) {
                expected_cols = cols_in_row;
            } else if (cols_in_row != expected_cols) {
                parse_fail(pos, "dimension mismatch: row has " + std::to_string(cols_in_row) +
                                    " columns, expected " + std::to_string(expected_cols));
            }
            ++m.rows;
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (m.rows == 0) parse_fail(0, "empty matrix");
    m.cols = expected_cols;
    return m;
}

}  // namespace

LabelMatrix load_label_matrix(std::string_view bytes, MatrixFormat format) {
    return format == MatrixFormat::pgm16 ? load_pgm(bytes) : load_csv(bytes);
}

LabelMatrix load_label_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string bytes = ss.str();
    const bool pgm = bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5');
    try {
        return load_label_matrix(bytes, pgm ? MatrixFormat::pgm16 : MatrixFormat::csv);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace pentropy
