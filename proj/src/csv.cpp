#include "postsel/csv.hpp"

#include <cstdio>
#include <fstream>

#include "postsel/errors.hpp"

namespace postsel {

std::string format_number(double x) {
  if (x == 0.0) return "0";  // fold -0 and +0 together
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

bool needs_quoting(const std::string& cell) {
  return cell.find_first_of(",\"\n\r") != std::string::npos;
}

void append_cell(std::string& out, const std::string& cell) {
  if (!needs_quoting(cell)) {
    out += cell;
    return;
  }
  out += '"';
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    append_cell(out, row[i]);
  }
  out += '\n';
}

}  // namespace

std::string to_string(const CsvTable& table) {
  std::string out;
  append_row(out, table.header);
  for (const auto& row : table.rows) append_row(out, row);
  return out;
}

void write_file(const std::string& path, const CsvTable& table) {
  std::ofstream f(path, std::ios::binary);  // binary: keep LF on every OS
  if (!f) throw Error("cannot open for writing: " + path);
  f << to_string(table);
  f.flush();
  if (!f) throw Error("write failed: " + path);
}

}  // namespace postsel
