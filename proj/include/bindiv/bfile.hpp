#pragma once

#include <bindiv/common.hpp>

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

// b-file sequence format: optional leading '#' comment lines, then one
// "index value" record per line with ASCII decimal integers and strictly
// increasing indices. An empty sequence is a file with comments only.

namespace bindiv {

struct bfile_record {
  std::int64_t index = 0;
  std::int64_t value = 0;
  bool operator==(const bfile_record&) const = default;
};

inline std::vector<bfile_record> parse_bfile(std::istream& in) {
  std::vector<bfile_record> records;
  std::string line;
  std::size_t lineno = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_done && !line.empty() && line.front() == '#') continue;
    header_done = true;
    const auto fields = detail::split_fields(line);
    if (fields.size() != 2)
      throw parse_error(lineno, "expected 'index value', got '" + line + "'");
    bfile_record r;
    if (!detail::parse_i64(fields[0], r.index))
      throw parse_error(lineno, "malformed index '" + std::string(fields[0]) + "'");
    if (!detail::parse_i64(fields[1], r.value))
      throw parse_error(lineno, "malformed value '" + std::string(fields[1]) + "'");
    if (!records.empty() && r.index <= records.back().index)
      throw parse_error(lineno, "indices must be strictly increasing");
    records.push_back(r);
  }
  return records;
}

inline void write_bfile(std::ostream& out, const std::vector<std::string>& comments,
                        const std::vector<bfile_record>& records) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& r : records) out << r.index << ' ' << r.value << '\n';
}

struct bfile_diff {
  std::int64_t index = 0;
  std::int64_t file_value = 0;
  std::int64_t computed_value = 0;
  bool operator==(const bfile_diff&) const = default;
};

// Value mismatches over the indices both sequences carry; indices present on
// only one side are not differences. Inputs must be index-sorted, which
// parse_bfile guarantees.
inline std::vector<bfile_diff> diff_records(const std::vector<bfile_record>& file,
                                            const std::vector<bfile_record>& computed) {
  std::vector<bfile_diff> diffs;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < file.size() && b < computed.size()) {
    if (file[a].index < computed[b].index) {
      ++a;
    } else if (file[a].index > computed[b].index) {
      ++b;
    } else {
      if (file[a].value != computed[b].value)
        diffs.push_back({file[a].index, file[a].value, computed[b].value});
      ++a;
      ++b;
    }
  }
  return diffs;
}

}  // namespace bindiv
