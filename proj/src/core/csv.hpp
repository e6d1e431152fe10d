#pragma once

#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sucktac::csv {

inline std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    // avoid the "-0.000000" artifact so reruns are byte-stable
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

inline std::string sci(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*e", digits, v);
    return buf;
}

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

/// Numeric CSV body under an exact expected header line.
inline std::vector<std::vector<double>> read_rows(std::istream& in,
                                                  const std::string& expected_header,
                                                  size_t columns) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw parse_error("csv: expected header '" + expected_header + "', got '" + line + "'");
    std::vector<std::vector<double>> rows;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() != columns)
            throw parse_error("csv: line " + std::to_string(lineno) + ": expected " +
                              std::to_string(columns) + " columns");
        std::vector<double> row;
        for (const auto& cell : cells) {
            try {
                size_t pos = 0;
                row.push_back(std::stod(cell, &pos));
                if (pos != cell.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw parse_error("csv: line " + std::to_string(lineno) + ": bad number '" +
                                  cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sucktac::csv
