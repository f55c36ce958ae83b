#pragma once

#include <bindiv/bsets.hpp>
#include <bindiv/corpus.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

// Checks every corpus datum against freshly computed values. Each datum
// becomes exactly one report entry, in canonical corpus order, so a single
// planted mutation surfaces as a single failing entry.

namespace bindiv {

enum class check_status { pass, fail };

struct report_entry {
  std::string table;    // corpus table id
  std::string subject;  // "b=2 n=26", "n=54", "limit=500"
  std::string expected;
  std::string actual;
  check_status status = check_status::pass;
};

struct verification_report {
  std::vector<report_entry> entries;
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  std::vector<std::uint64_t> corrected_cases;  // header cross-reference, not asserted
  bool all_passed() const { return fail_count == 0; }
};

struct verify_options {
  backend be = backend::fast;
  std::uint64_t max_n = 0;          // 0 = unlimited; entries above the cap are skipped
  std::vector<std::string> tables;  // empty = all; ids as in the corpus grammar
  unsigned workers = 1;
};

inline const std::vector<std::string>& corpus_table_ids() {
  static const std::vector<std::string> ids = {"classes", "bsets", "divisor-members",
                                               "divisor-counts", "corrected-cases"};
  return ids;
}

namespace detail {

inline std::string join_u64(const std::vector<std::uint64_t>& values) {
  std::string s = "{";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0) s += ' ';
    s += std::to_string(values[j]);
  }
  s += '}';
  return s;
}

}  // namespace detail

inline verification_report verify_corpus(const corpus& c, const verify_options& opt = {}) {
  for (const auto& t : opt.tables) {
    const auto& ids = corpus_table_ids();
    if (std::find(ids.begin(), ids.end(), t) == ids.end())
      throw std::domain_error("unknown corpus table: " + t);
  }
  const auto selected = [&opt](std::string_view id) {
    return opt.tables.empty() ||
           std::find(opt.tables.begin(), opt.tables.end(), id) != opt.tables.end();
  };
  const auto capped = [&opt](std::uint64_t n) { return opt.max_n != 0 && n > opt.max_n; };

  verification_report rep;
  rep.corrected_cases = c.corrected_cases;
  const auto add = [&rep](std::string table, std::string subject, std::string expected,
                          std::string actual) {
    const check_status st = expected == actual ? check_status::pass : check_status::fail;
    if (st == check_status::pass)
      ++rep.pass_count;
    else
      ++rep.fail_count;
    rep.entries.push_back({std::move(table), std::move(subject), std::move(expected),
                           std::move(actual), st});
  };

  if (selected("classes")) {
    for (const auto& [b, list] : c.class_lists) {
      for (const std::uint64_t n : list) {
        if (capped(n)) continue;
        add("classes", "b=" + std::to_string(b) + " n=" + std::to_string(n),
            "b=" + std::to_string(b), "b=" + std::to_string(b_value(n, opt.be)));
      }
    }
  }

  if (selected("bsets")) {
    for (const auto& [n, set] : c.explicit_sets) {
      if (capped(n)) continue;
      add("bsets", "n=" + std::to_string(n), detail::join_u64(set),
          detail::join_u64(b_set(n, opt.be).members));
    }
  }

  if (selected("divisor-members")) {
    for (const std::uint64_t n : c.divisor_members) {
      if (capped(n)) continue;
      add("divisor-members", "n=" + std::to_string(n), "divisor in B_n",
          contains_divisor(n, opt.be) ? "divisor in B_n" : "no divisor in B_n");
    }
  }

  if (selected("divisor-counts")) {
    std::vector<std::uint64_t> limits;
    for (const auto& [limit, count] : c.divisor_counts) {
      (void)count;
      if (!capped(limit)) limits.push_back(limit);
    }
    if (!limits.empty()) {
      // One sweep to the largest limit; smaller limits are prefix counts.
      const auto sweep = divisor_containment_sweep(limits.back(), opt.be, opt.workers);
      for (const std::uint64_t limit : limits) {
        const auto upper =
            std::upper_bound(sweep.members.begin(), sweep.members.end(), limit);
        const std::uint64_t count = static_cast<std::uint64_t>(upper - sweep.members.begin());
        add("divisor-counts", "limit=" + std::to_string(limit),
            std::to_string(c.divisor_counts.at(limit)), std::to_string(count));
      }
    }
  }

  return rep;
}

// Informational: n <= limit whose computed b(n) has a class list in the
// corpus, is below that list's largest entry, yet is missing from the list.
// The published lists claim completeness only up to their own horizon, so
// findings are reported, never asserted.
struct completeness_finding {
  std::uint64_t n = 0;
  std::uint64_t b = 0;
  bool operator==(const completeness_finding&) const = default;
};

inline std::vector<completeness_finding> completeness_scan(const corpus& c, std::uint64_t limit,
                                                           backend be = backend::fast,
                                                           unsigned workers = 1) {
  const auto values = b_values_range(1, limit, be, workers);
  std::vector<completeness_finding> findings;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const std::uint64_t b = values[n - 1];
    const auto it = c.class_lists.find(b);
    if (it == c.class_lists.end() || it->second.empty()) continue;
    const auto& list = it->second;
    if (n >= *std::max_element(list.begin(), list.end())) continue;
    if (std::find(list.begin(), list.end(), n) == list.end()) findings.push_back({n, b});
  }
  return findings;
}

}  // namespace bindiv
