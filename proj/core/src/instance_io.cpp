#include "copq/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "copq/errors.hpp"

namespace copq {

namespace {

struct Token {
    std::string text;
    int line;   // 1-based
    int column; // 1-based
};

struct Line {
    std::string text;
    int number; // 1-based
    bool blank() const {
        return std::all_of(text.begin(), text.end(),
                           [](unsigned char c) { return std::isspace(c); });
    }
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::string cur;
    int number = 1;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back({cur, number++});
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back({cur, number});
    return lines;
}

std::vector<Token> tokenize_line(const Line& line) {
    std::vector<Token> out;
    const std::string& s = line.text;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        out.push_back({s.substr(start, i - start), line.number, static_cast<int>(start) + 1});
    }
    return out;
}

std::vector<Token> tokenize(const std::vector<Line>& lines) {
    std::vector<Token> out;
    for (const Line& line : lines) {
        auto t = tokenize_line(line);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

double parse_number(const Token& tok) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(tok.text, &used);
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + tok.text + "'", tok.line, tok.column);
    }
    if (used != tok.text.size()) {
        throw ParseError("expected a number, got '" + tok.text + "'", tok.line, tok.column);
    }
    return value;
}

int parse_dimension(const Token& tok) {
    const double v = parse_number(tok);
    const int n = static_cast<int>(v);
    if (v != n || n < 1) {
        throw ParseError("expected a positive integer dimension, got '" + tok.text + "'",
                         tok.line, tok.column);
    }
    return n;
}

/// Reads n matrix rows starting at lines[row]; advances row past them.
SquareMatrix read_matrix_rows(const std::vector<Line>& lines, std::size_t& row, int n,
                              int last_line) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        while (row < lines.size() && lines[row].blank()) ++row;
        if (row >= lines.size()) {
            throw ParseError("file truncated: expected " + std::to_string(n) +
                                 " matrix rows, got " + std::to_string(i),
                             last_line, 1);
        }
        const auto toks = tokenize_line(lines[row]);
        if (static_cast<int>(toks.size()) != n) {
            throw std::invalid_argument("row " + std::to_string(i + 1) + " on line " +
                                        std::to_string(lines[row].number) + " has " +
                                        std::to_string(toks.size()) + " entries, expected " +
                                        std::to_string(n));
        }
        for (int j = 0; j < n; ++j) m.at(i, j) = parse_number(toks[j]);
        ++row;
    }
    return m;
}

ProblemInstance parse_matrix(const std::vector<Line>& lines, const std::string& name) {
    const int last_line = lines.empty() ? 1 : lines.back().number;
    std::size_t row = 0;
    while (row < lines.size() && lines[row].blank()) ++row;
    if (row >= lines.size()) throw ParseError("empty file", 1, 1);

    const auto header = tokenize_line(lines[row]);
    if (header.size() != 1) {
        throw ParseError("first line must hold the dimension alone", lines[row].number, 1);
    }
    const int n = parse_dimension(header[0]);
    ++row;

    SquareMatrix first = read_matrix_rows(lines, row, n, last_line);

    // A second block after a separating gap makes this a QAP instance.
    std::size_t next = row;
    while (next < lines.size() && lines[next].blank()) ++next;
    if (next >= lines.size()) {
        return TspInstance{name, std::move(first)};
    }
    row = next;
    SquareMatrix second = read_matrix_rows(lines, row, n, last_line);
    while (row < lines.size()) {
        if (!lines[row].blank()) {
            throw ParseError("unexpected content after the distance block",
                             lines[row].number, 1);
        }
        ++row;
    }
    return QapInstance{name, std::move(first), std::move(second)};
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

ProblemInstance parse_tsplib(const std::vector<Line>& lines, const std::string& fallback_name) {
    std::string name = fallback_name;
    int n = -1;
    bool explicit_weights = false;
    bool full_matrix = false;
    std::size_t row = 0;
    bool in_section = false;

    for (; row < lines.size(); ++row) {
        const Line& line = lines[row];
        if (line.blank()) continue;
        const std::string text = trim(line.text);
        const std::string u = upper(text);
        if (u == "EDGE_WEIGHT_SECTION") {
            in_section = true;
            ++row;
            break;
        }
        if (u == "EOF") break;
        const std::size_t colon = text.find(':');
        if (colon == std::string::npos) {
            throw ParseError("expected 'KEY : VALUE' or EDGE_WEIGHT_SECTION", line.number, 1);
        }
        const std::string key = upper(trim(text.substr(0, colon)));
        const std::string value = trim(text.substr(colon + 1));
        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            if (upper(value) != "TSP") {
                throw ParseError("unsupported TYPE '" + value + "' (only TSP)", line.number,
                                 static_cast<int>(colon) + 2);
            }
        } else if (key == "DIMENSION") {
            n = parse_dimension({value, line.number, static_cast<int>(colon) + 2});
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (upper(value) != "EXPLICIT") {
                throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + value + "' (only EXPLICIT)",
                                 line.number, static_cast<int>(colon) + 2);
            }
            explicit_weights = true;
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            if (upper(value) != "FULL_MATRIX") {
                throw ParseError("unsupported EDGE_WEIGHT_FORMAT '" + value +
                                     "' (only FULL_MATRIX)",
                                 line.number, static_cast<int>(colon) + 2);
            }
            full_matrix = true;
        }
        // COMMENT and unrecognized keys are ignored.
    }

    const int last_line = lines.empty() ? 1 : lines.back().number;
    if (!in_section) throw ParseError("missing EDGE_WEIGHT_SECTION", last_line, 1);
    if (n < 1) throw ParseError("missing DIMENSION", last_line, 1);
    if (!explicit_weights) throw ParseError("missing EDGE_WEIGHT_TYPE : EXPLICIT", last_line, 1);
    if (!full_matrix) throw ParseError("missing EDGE_WEIGHT_FORMAT : FULL_MATRIX", last_line, 1);

    std::vector<Token> weights;
    for (; row < lines.size(); ++row) {
        const Line& line = lines[row];
        if (line.blank()) continue;
        if (upper(trim(line.text)) == "EOF") break;
        const auto toks = tokenize_line(line);
        weights.insert(weights.end(), toks.begin(), toks.end());
    }

    const std::size_t need = static_cast<std::size_t>(n) * n;
    if (weights.size() != need) {
        throw std::invalid_argument("edge weight section has " + std::to_string(weights.size()) +
                                    " entries, expected " + std::to_string(need));
    }
    SquareMatrix d(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            d.at(i, j) = parse_number(weights[static_cast<std::size_t>(i) * n + j]);
        }
    }
    return TspInstance{name, std::move(d)};
}

ProblemInstance parse_qaplib(const std::vector<Line>& lines, const std::string& name) {
    const auto toks = tokenize(lines);
    if (toks.empty()) throw ParseError("empty file", 1, 1);
    const int n = parse_dimension(toks[0]);
    const std::size_t need = 1 + 2 * static_cast<std::size_t>(n) * n;
    const int last_line = lines.empty() ? 1 : lines.back().number;
    if (toks.size() < need) {
        throw ParseError("file truncated: expected " + std::to_string(need - 1) +
                             " matrix entries after the dimension, got " +
                             std::to_string(toks.size() - 1),
                         last_line, 1);
    }
    if (toks.size() > need) {
        throw std::invalid_argument("trailing data: expected " + std::to_string(need - 1) +
                                    " matrix entries, got " + std::to_string(toks.size() - 1));
    }
    SquareMatrix b(n);
    SquareMatrix c(n);
    std::size_t k = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b.at(i, j) = parse_number(toks[k++]);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) c.at(i, j) = parse_number(toks[k++]);
    }
    return QapInstance{name, std::move(b), std::move(c)};
}

std::string format_entry(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix(std::ostringstream& out, const SquareMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) out << ' ';
            out << format_entry(m.at(i, j));
        }
        out << '\n';
    }
}

} // namespace

InstanceFormat parse_format_name(const std::string& name) {
    if (name == "matrix") return InstanceFormat::matrix;
    if (name == "tsplib") return InstanceFormat::tsplib;
    if (name == "qaplib") return InstanceFormat::qaplib;
    throw std::invalid_argument("unknown instance format '" + name +
                                "' (expected matrix, tsplib, or qaplib)");
}

ProblemInstance parse_instance_text(const std::string& text, InstanceFormat format,
                                    const std::string& name) {
    const auto lines = split_lines(text);
    switch (format) {
        case InstanceFormat::matrix: return parse_matrix(lines, name);
        case InstanceFormat::tsplib: return parse_tsplib(lines, name);
        case InstanceFormat::qaplib: return parse_qaplib(lines, name);
    }
    throw std::invalid_argument("unknown instance format");
}

ProblemInstance parse_instance(const std::string& path, InstanceFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str(), format, std::filesystem::path(path).stem().string());
}

std::string write_instance_text(const ProblemInstance& inst) {
    std::ostringstream out;
    out << instance_size(inst) << '\n';
    if (const auto* t = std::get_if<TspInstance>(&inst)) {
        write_matrix(out, t->d);
    } else {
        const auto& q = std::get<QapInstance>(inst);
        write_matrix(out, q.b);
        out << '\n';
        write_matrix(out, q.c);
    }
    return out.str();
}

void write_instance(const ProblemInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << write_instance_text(inst);
}

} // namespace copq
