#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wavecorner {

// Shortest decimal representation that round-trips the double ('.' decimal
// separator, locale independent). Infinity prints as "inf".
std::string format_double(double v);

// Binary-mode write so line endings stay LF everywhere.
void write_text_file(const std::string& text, const std::string& path);

// CSV with a header row, comma separators and LF line endings. Values are
// emitted verbatim; none of the fields written by this project need quoting.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    const std::string& text() const { return text_; }
    void write(const std::string& path) const;

private:
    std::string text_;
    std::size_t columns_ = 0;
};

} // namespace wavecorner
