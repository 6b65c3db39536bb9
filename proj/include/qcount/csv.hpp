#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

namespace qcount {

// Deterministic CSV assembly: header row, '.' decimal separator, doubles at
// 17 significant digits so values round-trip exactly.
class CsvWriter {
 public:
  void header(std::initializer_list<const char*> names);

  void begin_row();
  void end_row();

  void field(const std::string& value);
  void field(const char* value);
  void field(double value);
  void field(bool value);
  void field(std::uint64_t value);
  void field(std::int64_t value);
  void field(int value) { field(static_cast<std::int64_t>(value)); }

  const std::string& str() const { return out_; }

  static std::string format_double(double value);

 private:
  void separator();

  std::string out_;
  bool row_open_ = false;
  bool first_field_ = true;
};

}  // namespace qcount
