#include "paracert/diagram.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "paracert/errors.hpp"

namespace paracert::cli {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_blank_or_comment(const std::string& line) {
    const std::string t = strip(line);
    return t.empty() || t[0] == '#';
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         std::size_t line_no) {
    std::vector<std::int64_t> out;
    std::istringstream iss(text);
    std::string tok;
    while (iss >> tok) {
        std::int64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("expected integer, got '" + tok + "'", line_no,
                             1);
        out.push_back(value);
    }
    return out;
}

}  // namespace

DiagramFile parse_diagram(std::istream& in) {
    DiagramFile d;
    std::vector<std::vector<std::int64_t>> matrix_rows;
    bool in_matrix = false;
    bool saw_matrix_key = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (is_blank_or_comment(raw)) {
            in_matrix = false;  // a break ends the matrix block
            continue;
        }
        const std::string line = strip(raw);
        const std::size_t colon = line.find(':');
        if (colon != std::string::npos &&
            line.find_first_of(" \t") > colon) {
            // key line
            in_matrix = false;
            const std::string key = line.substr(0, colon);
            const std::string value = strip(line.substr(colon + 1));
            if (key == "name") {
                d.name = value;
            } else if (key == "comment") {
                d.comment = value;
            } else if (key == "braid") {
                if (d.braid)
                    throw ParseError("duplicate braid section", line_no, 1);
                try {
                    d.braid = braids::parse_braid(value);
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), line_no,
                                     colon + 2 + e.column());
                }
            } else if (key == "framings") {
                if (d.framings)
                    throw ParseError("duplicate framings section", line_no,
                                     1);
                d.framings = parse_int_list(value, line_no);
            } else if (key == "matrix") {
                if (saw_matrix_key)
                    throw ParseError("duplicate matrix section", line_no, 1);
                if (!value.empty())
                    throw ParseError("matrix rows start on following lines",
                                     line_no, 1);
                saw_matrix_key = true;
                in_matrix = true;
            } else {
                throw ParseError("unknown key '" + key + "'", line_no, 1);
            }
            continue;
        }
        if (!in_matrix)
            throw ParseError("unexpected line '" + line + "'", line_no, 1);
        auto row = parse_int_list(line, line_no);
        for (std::int64_t v : row) {
            if (v != 0 && v != 1)
                throw ParseError("matrix entries must be 0 or 1", line_no,
                                 1);
        }
        matrix_rows.push_back(std::move(row));
    }

    if (saw_matrix_key) {
        const std::size_t n = matrix_rows.size();
        gf2::Gf2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (matrix_rows[i].size() != n)
                throw ParseError("matrix is not square: row " +
                                     std::to_string(i + 1) + " has " +
                                     std::to_string(matrix_rows[i].size()) +
                                     " entries, expected " +
                                     std::to_string(n),
                                 0, 0);
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, matrix_rows[i][j] != 0);
        }
        try {
            d.matrix = gf2::LinkingParity(std::move(m));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()), 0, 0);
        }
    }

    if (d.braid && d.matrix)
        throw ParseError("diagram has both braid and matrix sections", 0, 0);
    if (!d.braid && !d.matrix)
        throw ParseError("diagram needs a braid or a matrix section", 0, 0);
    if (d.framings && !d.braid)
        throw ParseError("framings are only valid with a braid", 0, 0);
    if (d.framings) {
        const auto lc = braids::closure_components(*d.braid);
        if (d.framings->size() != lc.count)
            throw ParseError("framing count " +
                                 std::to_string(d.framings->size()) +
                                 " does not match component count " +
                                 std::to_string(lc.count),
                             0, 0);
    }
    return d;
}

DiagramFile parse_diagram_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_diagram(iss);
}

DiagramFile load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
    return parse_diagram(in);
}

}  // namespace paracert::cli
