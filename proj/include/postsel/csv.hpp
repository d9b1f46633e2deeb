#pragma once

// Deterministic CSV output: numbers at 12 significant digits, LF line
// endings, minimal quoting. Identical inputs produce identical bytes.

#include <string>
#include <vector>

namespace postsel {

// %.12g with negative zero folded to "0".
std::string format_number(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180 style: cells containing a comma, quote, or newline are wrapped in
// double quotes with inner quotes doubled; everything else is written as-is.
std::string to_string(const CsvTable& table);

// Writes to_string(table) to path. Throws Error when the file cannot be
// opened or written.
void write_file(const std::string& path, const CsvTable& table);

}  // namespace postsel
