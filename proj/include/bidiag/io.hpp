#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

// Text matrix format:
//   line 1: N
//   line 2: N whitespace-separated q values
//   line 3: N-1 whitespace-separated e values (absent or empty when N == 1)
// Lines starting with '#' are comments and may appear anywhere.

namespace detail {

struct NumberedLine {
    std::string text;
    std::size_t number = 0;
};

inline bool next_data_line(std::istream& in, std::size_t& lineno, NumberedLine& out) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        out.text = line;
        out.number = lineno;
        return true;
    }
    return false;
}

inline std::vector<double> parse_values(const NumberedLine& line, std::size_t expected,
                                        const char* what) {
    std::istringstream iss(line.text);
    std::vector<double> values;
    std::string token;
    while (iss >> token) {
        try {
            std::size_t used = 0;
            double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("cannot parse '" + token + "' as a number in " + what + " line",
                             line.number);
        }
    }
    if (values.size() != expected)
        throw ParseError(std::string(what) + " line must contain exactly " +
                             std::to_string(expected) + " value(s), got " +
                             std::to_string(values.size()),
                         line.number);
    return values;
}

}  // namespace detail

inline BidiagonalMatrix read_matrix(std::istream& in) {
    std::size_t lineno = 0;
    detail::NumberedLine line;
    if (!detail::next_data_line(in, lineno, line))
        throw ParseError("missing order line", lineno == 0 ? 1 : lineno);

    long n = 0;
    {
        std::istringstream iss(line.text);
        std::string extra;
        if (!(iss >> n) || (iss >> extra))
            throw ParseError("order line must contain a single integer", line.number);
        if (n < 1) throw ParseError("matrix order must be at least 1", line.number);
    }

    if (!detail::next_data_line(in, lineno, line))
        throw ParseError("missing q line (expected " + std::to_string(n) + " values)", lineno);
    std::vector<double> q = detail::parse_values(line, static_cast<std::size_t>(n), "q");

    std::vector<double> e;
    if (n > 1) {
        if (!detail::next_data_line(in, lineno, line))
            throw ParseError("missing e line (expected " + std::to_string(n - 1) + " values)",
                             lineno);
        e = detail::parse_values(line, static_cast<std::size_t>(n - 1), "e");
    } else if (detail::next_data_line(in, lineno, line)) {
        // An order-1 matrix may carry an empty third line but not data.
        std::vector<double> extra = detail::parse_values(line, 0, "e");
        (void)extra;
    }
    return BidiagonalMatrix(std::move(q), std::move(e));
}

inline BidiagonalMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open '" + path + "' for reading");
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const BidiagonalMatrix& B) {
    char buf[40];
    out << B.order() << '\n';
    for (std::size_t i = 0; i < B.order(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", B.q(i));
        out << (i ? " " : "") << buf;
    }
    out << '\n';
    for (std::size_t i = 0; i + 1 < B.order(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", B.e(i));
        out << (i ? " " : "") << buf;
    }
    if (B.order() > 1) out << '\n';
}

inline std::string matrix_to_string(const BidiagonalMatrix& B) {
    std::ostringstream oss;
    write_matrix(oss, B);
    return oss.str();
}

}  // namespace bidiag
