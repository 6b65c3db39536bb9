#include "qcount/csv.hpp"

#include <cstdio>

namespace qcount {

void CsvWriter::header(std::initializer_list<const char*> names) {
  begin_row();
  for (const char* n : names) field(n);
  end_row();
}

void CsvWriter::begin_row() {
  row_open_ = true;
  first_field_ = true;
}

void CsvWriter::end_row() {
  out_ += '\n';
  row_open_ = false;
}

void CsvWriter::separator() {
  if (!first_field_) out_ += ',';
  first_field_ = false;
}

void CsvWriter::field(const std::string& value) {
  separator();
  out_ += value;
}

void CsvWriter::field(const char* value) {
  separator();
  out_ += value;
}

void CsvWriter::field(double value) { field(format_double(value)); }

void CsvWriter::field(bool value) { field(value ? "1" : "0"); }

void CsvWriter::field(std::uint64_t value) { field(std::to_string(value)); }

void CsvWriter::field(std::int64_t value) { field(std::to_string(value)); }

std::string CsvWriter::format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace qcount
