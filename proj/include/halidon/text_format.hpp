#pragma once

// Line-oriented "key=value" reader shared by the key, table and ciphertext
// file formats. All of them are UTF-8 with LF line endings.

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halidon/core_arith.hpp"

namespace halidon::detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(Errc::malformed_file, "line " + std::to_string(line_no_) + ": " + message);
  }

  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') fail("CR line endings are not accepted");
    return line;
  }

  std::string require_line(std::string_view what) {
    auto line = next();
    if (!line) {
      ++line_no_;
      fail("unexpected end of file, expected " + std::string(what));
    }
    return *line;
  }

  void expect_exact(std::string_view expected) {
    std::string line = require_line(expected);
    if (line != expected) fail("expected '" + std::string(expected) + "', found '" + line + "'");
  }

  std::string field(std::string_view key) {
    std::string line = require_line(std::string(key) + "=");
    std::string prefix = std::string(key) + "=";
    if (line.compare(0, prefix.size(), prefix) != 0) fail("expected '" + prefix + "...', found '" + line + "'");
    return line.substr(prefix.size());
  }

  template <ModularInteger Int>
  Int natural_field(std::string_view key) {
    std::string text = field(key);
    auto value = parse_decimal<Int>(text);
    if (!value) fail("'" + text + "' is not a canonical decimal for " + std::string(key));
    return *value;
  }

  std::uint64_t u64_field(std::string_view key) { return natural_field<std::uint64_t>(key); }

  void expect_end() {
    while (auto line = next()) {
      if (!line->empty()) fail("unexpected trailing content '" + *line + "'");
    }
  }

  std::size_t line_number() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

/// Splits on single spaces; rejects empty tokens.
template <ModularInteger Int>
std::optional<std::vector<Int>> parse_decimal_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    auto value = parse_decimal<Int>(text.substr(pos, end - pos));
    if (!value) return std::nullopt;
    out.push_back(*value);
    pos = end + 1;
  }
  return out;
}

template <ModularInteger Int>
std::string join_decimal(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += to_decimal(values[i]);
  }
  return out;
}

}  // namespace halidon::detail
