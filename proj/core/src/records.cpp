// records.cpp
#include "xxzstrip/records.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xxzstrip {

std::string fmt_g(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string fmt_int(long long value) { return std::to_string(value); }

RecordTable::RecordTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("record table needs columns");
}

void RecordTable::add(std::vector<std::string> row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("record row width does not match header");
    rows_.push_back(std::move(row));
}

namespace {
void append_cell(std::string& out, const std::string& cell) {
    if (cell.find_first_of(",\"\n") != std::string::npos) {
        out += '"';
        for (char c : cell) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
    } else {
        out += cell;
    }
}
}  // namespace

std::string RecordTable::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        append_cell(out, columns_[i]);
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_cell(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace xxzstrip
