#include "wavecorner/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "wavecorner/errors.hpp"

namespace wavecorner {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) {
    add_row(std::move(header));
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != columns_) throw std::logic_error("CsvTable: wrong column count");
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) text_ += ',';
        text_ += row[i];
    }
    text_ += '\n';
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out.write(text_.data(), static_cast<std::streamsize>(text_.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

} // namespace wavecorner
