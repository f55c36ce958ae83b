#pragma once

#include <bindiv/common.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

// Bundled reference tables of known values. The data is golden: it is stored
// as text in the same record grammar accepted for override files, parsed on
// every load, and never computed.
//
// Record grammar (one record per line):
//
//   TABLE <id> | KEY <k> | VALUES v1,v2,...
//
// '#' comment lines and blank lines are ignored. <k> and the values are
// unsigned decimal integers; VALUES may be empty. Later records replace
// earlier ones with the same (table, key), which is what makes override
// files work: they are applied on top of the bundled rows.
//
// Tables:
//   classes          KEY = b-value (0..20),  VALUES = known n with that b(n)
//   bsets            KEY = n,                VALUES = the full set B_n
//   divisor-members  KEY = 100 (the bound),  VALUES = n <= 100 where some member of B_n divides n
//   divisor-counts   KEY = limit,            VALUES = one count of such n up to the limit
//   corrected-cases  KEY = 0,                VALUES = cases highlighted in report headers

namespace bindiv {

struct corpus {
  std::map<std::uint64_t, std::vector<std::uint64_t>> class_lists;
  std::map<std::uint64_t, std::vector<std::uint64_t>> explicit_sets;
  std::vector<std::uint64_t> divisor_members;
  std::map<std::uint64_t, std::uint64_t> divisor_counts;
  std::vector<std::uint64_t> corrected_cases;
  bool operator==(const corpus&) const = default;
};

inline constexpr std::string_view default_corpus_text =
    R"(# Bundled reference tables. Grammar: TABLE <id> | KEY <k> | VALUES v1,v2,...
TABLE classes | KEY 0 | VALUES 1,2,3,4,5,6,7,8,9,10,11,12,13,15,17,19,20,21,23,24,25,29,31,33,35,37,41,43,47,49,53,59,61,67,71,73,79,83,89,97,101
TABLE classes | KEY 1 | VALUES 14,16,18,22,27,28,39,55,65,77,85,221,437
TABLE classes | KEY 2 | VALUES 26,30,36,40,42,44,91,95,115,119,133,161,187,247,391,667,1147
TABLE classes | KEY 3 | VALUES 32,38,45,51,52,56,57,63,69,87,145,209,713,1073
TABLE classes | KEY 4 | VALUES 34,75,84,93,125,155,203,217,253,259,299,319,341,551
TABLE classes | KEY 5 | VALUES 46,48,60,68,76,81,105,377,403,407,481,493,533,589,1189
TABLE classes | KEY 6 | VALUES 50,54,72,88,99,287,301,329,527,559,851
TABLE classes | KEY 7 | VALUES 70,78,80,111,185,371,451,629,697,731,799,901
TABLE classes | KEY 8 | VALUES 58,64,66,74,92,104,473,517,583,611,703,779,817,893,943,1007,1121
TABLE classes | KEY 9 | VALUES 86,117,123,175,205,343,649,989,1159
TABLE classes | KEY 10 | VALUES 82,90,96,100,129,135,140,215,413,671,689,767,793,871,1003,1081
TABLE classes | KEY 11 | VALUES 62,120,427,1037
TABLE classes | KEY 12 | VALUES 116,141,153,235,737,781,803,869,923
TABLE classes | KEY 13 | VALUES 102,108,112,136,147,171,265,949
TABLE classes | KEY 14 | VALUES 106,110,148,152,295,305,335,469,913,1139
TABLE classes | KEY 15 | VALUES 94,159,165,177,183,195,355,365,1027,1079,1157
TABLE classes | KEY 16 | VALUES 98,124,201,207,245,395,497,979,1067,1111
TABLE classes | KEY 17 | VALUES 114,132,164,275,511,1133
TABLE classes | KEY 18 | VALUES 168,172,189,213,219,237,249,415
TABLE classes | KEY 19 | VALUES 118,128,156,184,231,325,1177
TABLE classes | KEY 20 | VALUES 130,154,261,553,1199
TABLE bsets | KEY 39 | VALUES 9
TABLE bsets | KEY 54 | VALUES 4,14,15,16,20,21
TABLE bsets | KEY 60 | VALUES 18,21,22,24,26
TABLE bsets | KEY 68 | VALUES 14,22,26,28,30
TABLE bsets | KEY 70 | VALUES 4,12,14,15,22,24,26
TABLE bsets | KEY 72 | VALUES 6,14,15,22,26,33
TABLE bsets | KEY 76 | VALUES 8,10,24,26,30
TABLE bsets | KEY 78 | VALUES 4,8,10,15,20,21,28
TABLE bsets | KEY 82 | VALUES 6,10,12,14,16,22,26,28,30,38
TABLE bsets | KEY 91 | VALUES 28,35
TABLE bsets | KEY 96 | VALUES 9,10,14,20,22,26,28,38,39,46
TABLE bsets | KEY 98 | VALUES 6,10,12,18,20,22,24,26,28,30,32,35,38,42,44,46
TABLE divisor-members | KEY 100 | VALUES 18,45,48,70,72,75,84,90,100
TABLE divisor-counts | KEY 500 | VALUES 74
TABLE divisor-counts | KEY 1000 | VALUES 174
TABLE divisor-counts | KEY 1500 | VALUES 274
TABLE divisor-counts | KEY 2000 | VALUES 379
TABLE corrected-cases | KEY 0 | VALUES 54,60,68,70,72,78,91,96
)";

namespace detail {

inline std::string_view expect_field(std::string_view part, std::string_view label,
                                     std::size_t line) {
  part = trim(part);
  if (part.substr(0, label.size()) != label)
    throw parse_error(line, "expected '" + std::string(label) + "', got '" + std::string(part) + "'");
  return trim(part.substr(label.size()));
}

inline void apply_corpus_record(corpus& c, std::string_view text_line, std::size_t line) {
  const auto parts = split(text_line, '|');
  if (parts.size() != 3) throw parse_error(line, "expected 'TABLE <id> | KEY <k> | VALUES ...'");
  const std::string id(expect_field(parts[0], "TABLE", line));
  const std::string_view key_text = expect_field(parts[1], "KEY", line);
  const std::string_view values_text = expect_field(parts[2], "VALUES", line);

  std::uint64_t key = 0;
  if (!parse_u64(key_text, key)) throw parse_error(line, "malformed key '" + std::string(key_text) + "'");

  std::vector<std::uint64_t> values;
  if (!trim(values_text).empty()) {
    for (const auto& piece : split(values_text, ',')) {
      std::uint64_t v = 0;
      if (!parse_u64(piece, v)) throw parse_error(line, "malformed value '" + std::string(trim(piece)) + "'");
      values.push_back(v);
    }
  }

  if (id == "classes") {
    if (key > 20) throw parse_error(line, "classes key must be in 0..20");
    c.class_lists[key] = std::move(values);
  } else if (id == "bsets") {
    if (key == 0) throw parse_error(line, "bsets key must be >= 1");
    c.explicit_sets[key] = std::move(values);
  } else if (id == "divisor-members") {
    if (key != 100) throw parse_error(line, "divisor-members key must be 100");
    c.divisor_members = std::move(values);
  } else if (id == "divisor-counts") {
    if (key == 0) throw parse_error(line, "divisor-counts key must be >= 1");
    if (values.size() != 1) throw parse_error(line, "divisor-counts rows take exactly one value");
    c.divisor_counts[key] = values[0];
  } else if (id == "corrected-cases") {
    if (key != 0) throw parse_error(line, "corrected-cases key must be 0");
    c.corrected_cases = std::move(values);
  } else {
    throw parse_error(line, "unknown table '" + id + "'");
  }
}

inline void apply_corpus_text(corpus& c, std::string_view text) {
  std::size_t line = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line;
    const std::string_view body = trim(raw);
    if (body.empty() || body.front() == '#') continue;
    apply_corpus_record(c, body, line);
  }
}

}  // namespace detail

// Structural invariants of a loaded corpus. Lists may hold arbitrary values
// (override files are free to plant wrong ones; verification is what judges
// them), but the corpus shape itself must be sound.
inline void validate_corpus(const corpus& c) {
  for (std::uint64_t b = 0; b <= 20; ++b) {
    if (!c.class_lists.count(b))
      throw parse_error("corpus is missing the class list for b=" + std::to_string(b));
  }
  if (c.divisor_members.empty()) throw parse_error("corpus has no divisor-members row");
  if (c.divisor_counts.empty()) throw parse_error("corpus has no divisor-counts rows");
  for (const std::uint64_t n : c.corrected_cases) {
    bool known = c.explicit_sets.count(n) > 0;
    for (auto it = c.class_lists.begin(); !known && it != c.class_lists.end(); ++it) {
      known = std::find(it->second.begin(), it->second.end(), n) != it->second.end();
    }
    if (!known)
      throw parse_error("corrected case " + std::to_string(n) + " appears in no corpus table");
  }
}

inline corpus parse_corpus(std::string_view text) {
  corpus c;
  detail::apply_corpus_text(c, text);
  validate_corpus(c);
  return c;
}

inline corpus load_corpus() { return parse_corpus(default_corpus_text); }

inline corpus load_corpus_with_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read corpus override file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  corpus c = load_corpus();
  detail::apply_corpus_text(c, buf.str());
  validate_corpus(c);
  return c;
}

// Canonical serialization; parse_corpus(corpus_to_text(c)) == c.
inline std::string corpus_to_text(const corpus& c) {
  std::ostringstream out;
  auto row = [&out](const char* id, std::uint64_t key, const std::vector<std::uint64_t>& values) {
    out << "TABLE " << id << " | KEY " << key << " | VALUES ";
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j > 0) out << ',';
      out << values[j];
    }
    out << '\n';
  };
  for (const auto& [b, list] : c.class_lists) row("classes", b, list);
  for (const auto& [n, set] : c.explicit_sets) row("bsets", n, set);
  row("divisor-members", 100, c.divisor_members);
  for (const auto& [limit, count] : c.divisor_counts) row("divisor-counts", limit, {count});
  row("corrected-cases", 0, c.corrected_cases);
  return out.str();
}

}  // namespace bindiv
