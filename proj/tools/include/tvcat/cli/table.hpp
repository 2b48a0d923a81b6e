#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tvcat::cli {

/// Number of code points, which is the column width for the labels we print.
std::size_t display_width(std::string_view s) noexcept;

/// Plain aligned text table with a header rule.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  bool empty() const noexcept { return rows_.empty(); }
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace tvcat::cli
