#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bidiag/errors.hpp"

namespace cli {

using nlohmann::json;

/// One table cell: a number (rendered at 6 or 17 significant digits depending
/// on the sink), verbatim text, or empty.
struct Cell {
    std::variant<std::monostate, double, std::string> data;

    Cell() = default;
    Cell(double v) : data(v) {}
    Cell(std::string s) : data(std::move(s)) {}
    Cell(const char* s) : data(std::string(s)) {}
    Cell(int v) : data(static_cast<double>(v)) {}
};

inline std::string format_double(double v, int significant) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

inline std::string render_cell(const Cell& c, int significant) {
    if (std::holds_alternative<double>(c.data))
        return format_double(std::get<double>(c.data), significant);
    if (std::holds_alternative<std::string>(c.data)) return std::get<std::string>(c.data);
    return "";
}

/// A command report: structured JSON plus a flat table view for text/csv.
struct Report {
    json config = json::object();
    json results = json::array();
    json warnings = json::array();

    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> footnotes;  // text/csv only; JSON carries `warnings`
};

inline void write_text(std::ostream& out, const Report& rep) {
    out << "# " << rep.config.value("command", "?");
    for (auto& [key, value] : rep.config.items())
        if (key != "command") out << " " << key << "=" << value.dump();
    out << "\n";
    if (!rep.columns.empty()) {
        out << "# ";
        for (std::size_t i = 0; i < rep.columns.size(); ++i)
            out << (i ? ", " : "") << rep.columns[i];
        out << "\n";
    }
    for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = render_cell(row[i], 6);
            out << (i ? ", " : "") << (cell.empty() ? "-" : cell);
        }
        out << "\n";
    }
    for (const std::string& note : rep.footnotes) out << "# " << note << "\n";
}

inline void write_csv(std::ostream& out, const Report& rep) {
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        out << (i ? "," : "") << rep.columns[i];
    out << "\n";
    for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render_cell(row[i], 17);
        out << "\n";
    }
    for (const std::string& note : rep.footnotes) out << "# " << note << "\n";
}

inline void write_json(std::ostream& out, const Report& rep) {
    json doc;
    doc["config"] = rep.config;
    doc["results"] = rep.results;
    doc["warnings"] = rep.warnings;
    out << doc.dump(2) << "\n";
}

inline void emit(const Report& rep, const std::string& format, const std::string& output_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) throw bidiag::FileError("cannot open '" + output_path + "' for writing");
        out = &file;
    }
    if (format == "json")
        write_json(*out, rep);
    else if (format == "csv")
        write_csv(*out, rep);
    else
        write_text(*out, rep);
}

}  // namespace cli
