#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vison {

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct CsvRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 style: comma separator, double-quote quoting with "" escapes,
// LF or CRLF line ends. Blank lines are skipped. Input must be valid UTF-8;
// a leading byte-order mark is ignored.
std::vector<CsvRecord> read_csv(std::string_view bytes);

std::string write_csv_row(const std::vector<std::string>& fields);

}  // namespace vison
