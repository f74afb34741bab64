#include "heron/record.hpp"

#include "heron/error.hpp"

namespace heron {

namespace {

bool needs_quotes(std::string_view value) {
  if (value.empty()) return true;
  for (char c : value)
    if (c == ' ' || c == '\t' || c == '\n' || c == '"' || c == '\\' || c == '=') return true;
  return false;
}

std::string quote(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Record& Record::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::optional<std::string> Record::get(std::string_view key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return v;
  return std::nullopt;
}

Rational Record::rational(std::string_view key) const {
  auto value = get(key);
  if (!value) fail(ErrorCode::parse, "record has no field '" + std::string(key) + "'");
  return Rational::parse(*value);
}

std::string Record::to_line() const {
  std::string line;
  for (const auto& [key, value] : fields_) {
    if (!line.empty()) line += ' ';
    line += key;
    line += '=';
    line += needs_quotes(value) ? quote(value) : value;
  }
  return line;
}

std::string Record::to_tsv_values() const {
  std::string line;
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) line += '\t';
    for (char c : fields_[i].second) line += (c == '\t' || c == '\n') ? ' ' : c;
  }
  return line;
}

std::string Record::to_tsv_header() const {
  std::string line;
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) line += '\t';
    line += fields_[i].first;
  }
  return line;
}

Record Record::parse_line(std::string_view line) {
  Record record;
  std::size_t i = 0;
  auto malformed = [&](const char* why) {
    fail(ErrorCode::parse, std::string("malformed record (") + why + "): " + std::string(line));
  };
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    if (i >= line.size()) break;
    std::size_t eq = line.find('=', i);
    if (eq == std::string_view::npos || eq == i) malformed("missing key");
    std::string key(line.substr(i, eq - i));
    if (key.find(' ') != std::string::npos) malformed("space in key");
    i = eq + 1;
    std::string value;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char c = line[i++];
        if (c == '\\') {
          if (i >= line.size()) malformed("dangling escape");
          char e = line[i++];
          value += e == 'n' ? '\n' : e;
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          value += c;
        }
      }
      if (!closed) malformed("unterminated quote");
    } else {
      std::size_t end = line.find(' ', i);
      if (end == std::string_view::npos) end = line.size();
      value = std::string(line.substr(i, end - i));
      i = end;
    }
    record.add(std::move(key), std::move(value));
  }
  return record;
}

}  // namespace heron
