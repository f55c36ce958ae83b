#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bindiv {

// Malformed text input (reference tables, b-files). Carries a 1-based line
// number when one is known.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
  parse_error(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_ = 0;
};

// Filesystem failure, as opposed to malformed content; the CLI maps this to
// a dedicated exit code.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= s.size(); ++pos) {
    if (pos == s.size() || s[pos] == sep) {
      parts.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
  }
  return parts;
}

// Whitespace-delimited fields (runs of spaces/tabs collapse).
inline std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') ++pos;
    if (pos > start) fields.push_back(s.substr(start, pos - start));
  }
  return fields;
}

inline bool parse_u64(std::string_view s, std::uint64_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), last, out, 10);
  return ec == std::errc{} && ptr == last;
}

inline bool parse_i64(std::string_view s, std::int64_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), last, out, 10);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail
}  // namespace bindiv
