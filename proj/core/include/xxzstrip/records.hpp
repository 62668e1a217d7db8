// records.hpp - delimiter-separated experiment records
#pragma once

#include <string>
#include <vector>

namespace xxzstrip {

std::string fmt_g(double value);           // "%.12g", reproducible decimal form
std::string fmt_int(long long value);

// Header row plus string cells; serializes to CSV. Cells containing the
// delimiter are not supported by design (all emitted values are plain
// numbers, flags, or bracketed tuples without commas... configurations do
// contain commas, so those cells are quoted).
class RecordTable {
public:
    explicit RecordTable(std::vector<std::string> columns);

    void add(std::vector<std::string> row);
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    std::string to_csv() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace xxzstrip
