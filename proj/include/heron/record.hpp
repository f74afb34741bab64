#pragma once

// One-line key=value records, the output format of the CLI and of
// enumeration reports. Fields keep insertion order. Values containing
// whitespace, quotes, backslashes or '=' are double-quoted with backslash
// escapes; everything else is written bare.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heron/rational.hpp"

namespace heron {

class Record {
 public:
  Record& add(std::string key, std::string value);
  Record& add(std::string key, const Rational& value) { return add(std::move(key), value.to_string()); }

  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }

  std::optional<std::string> get(std::string_view key) const;
  /// Throws Error(parse) when the key is missing or its value is not a rational.
  Rational rational(std::string_view key) const;

  std::string to_line() const;
  /// Tab-separated values, in field order.
  std::string to_tsv_values() const;
  std::string to_tsv_header() const;

  /// Inverse of to_line. Throws Error(parse) on malformed input.
  static Record parse_line(std::string_view line);

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace heron
