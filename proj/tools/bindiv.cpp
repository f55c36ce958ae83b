// Command-line front end: query B_n sets and b(n) values, classify ranges,
// verify the bundled reference tables, export/compare b-file sequences, and
// benchmark the fast backend against the exact one.
//
// Exit codes: 0 success (and verification/comparison agreement), 1 any
// verification or comparison mismatch, 2 usage or parse errors, 3 I/O errors.

#include <bindiv/bfile.hpp>
#include <bindiv/bsets.hpp>
#include <bindiv/corpus.hpp>
#include <bindiv/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

unsigned default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

const CLI::Validator positive_int{[](std::string& input) -> std::string {
                                    std::uint64_t v = 0;
                                    if (!bindiv::detail::parse_u64(input, v) || v == 0)
                                      return std::string("must be a positive integer");
                                    return {};
                                  },
                                  "UINT>=1"};

std::string join(const std::vector<std::uint64_t>& values) {
  std::string s;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0) s += ' ';
    s += std::to_string(values[j]);
  }
  return s;
}

// ---------------------------------------------------------------- sequences

enum class seq_kind { bvalue, divisor_members, class_members };

seq_kind seq_from_string(const std::string& s) {
  if (s == "bvalue") return seq_kind::bvalue;
  if (s == "contains-divisor-members") return seq_kind::divisor_members;
  if (s == "class-members") return seq_kind::class_members;
  throw std::domain_error("unknown sequence: " + s);
}

struct sequence_request {
  std::string sequence;
  std::uint64_t lo = 1;
  std::uint64_t max = 0;
  std::uint64_t cls = 0;
  bool cls_set = false;
  std::int64_t offset = 1;
  bindiv::backend be = bindiv::backend::fast;
  unsigned workers = 1;
};

std::vector<bindiv::bfile_record> make_sequence(const sequence_request& req,
                                                std::vector<std::string>& comments) {
  std::vector<bindiv::bfile_record> records;
  switch (seq_from_string(req.sequence)) {
    case seq_kind::bvalue: {
      const auto values = bindiv::b_values_range(req.lo, req.max, req.be, req.workers);
      for (std::uint64_t n = req.lo; n <= req.max; ++n)
        records.push_back({req.offset + static_cast<std::int64_t>(n - req.lo),
                           static_cast<std::int64_t>(values[n - req.lo])});
      comments = {"sequence: bvalue",
                  "range: n = " + std::to_string(req.lo) + ".." + std::to_string(req.max)};
      break;
    }
    case seq_kind::divisor_members: {
      if (req.lo != 1) throw std::domain_error("--lo applies to the bvalue sequence only");
      const auto sweep = bindiv::divisor_containment_sweep(req.max, req.be, req.workers);
      for (std::size_t j = 0; j < sweep.members.size(); ++j)
        records.push_back({req.offset + static_cast<std::int64_t>(j),
                           static_cast<std::int64_t>(sweep.members[j])});
      comments = {"sequence: contains-divisor-members", "limit: " + std::to_string(req.max)};
      break;
    }
    case seq_kind::class_members: {
      if (req.lo != 1) throw std::domain_error("--lo applies to the bvalue sequence only");
      if (!req.cls_set) throw std::domain_error("class-members requires --class");
      const auto values = bindiv::b_values_range(1, req.max, req.be, req.workers);
      std::int64_t idx = req.offset;
      for (std::uint64_t n = 1; n <= req.max; ++n) {
        if (values[n - 1] == req.cls) records.push_back({idx++, static_cast<std::int64_t>(n)});
      }
      comments = {"sequence: class-members", "class: " + std::to_string(req.cls),
                  "limit: " + std::to_string(req.max)};
      break;
    }
  }
  return records;
}

void write_sequence(std::ostream& out, const std::string& format,
                    const std::vector<std::string>& comments,
                    const std::vector<bindiv::bfile_record>& records) {
  if (format == "bfile") {
    bindiv::write_bfile(out, comments, records);
  } else if (format == "csv") {
    out << "index,value\n";
    for (const auto& r : records) out << r.index << ',' << r.value << '\n';
  } else {  // jsonl
    for (const auto& r : records) {
      nlohmann::json j;
      j["index"] = r.index;
      j["value"] = r.value;
      out << j.dump() << '\n';
    }
  }
}

// ----------------------------------------------------------------- commands

int run_bset(std::uint64_t n, bindiv::backend be, const std::string& format) {
  const auto r = bindiv::b_set(n, be);
  if (format == "table") {
    std::cout << join(r.members) << '\n';
  } else if (format == "csv") {
    std::cout << "n,i\n";
    for (const auto i : r.members) std::cout << n << ',' << i << '\n';
  } else if (format == "jsonl") {
    nlohmann::json j;
    j["n"] = n;
    j["members"] = r.members;
    std::cout << j.dump() << '\n';
  } else {  // bfile
    std::vector<bindiv::bfile_record> records;
    for (std::size_t k = 0; k < r.members.size(); ++k)
      records.push_back({static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(r.members[k])});
    bindiv::write_bfile(std::cout, {"sequence: members of B_n", "n: " + std::to_string(n)}, records);
  }
  return exit_ok;
}

int run_bvalue(std::uint64_t n, bindiv::backend be, const std::string& format) {
  const std::uint64_t b = bindiv::b_value(n, be);
  if (format == "table") {
    std::cout << b << '\n';
  } else if (format == "csv") {
    std::cout << "n,b\n" << n << ',' << b << '\n';
  } else if (format == "jsonl") {
    nlohmann::json j;
    j["n"] = n;
    j["b"] = b;
    std::cout << j.dump() << '\n';
  } else {  // bfile
    bindiv::write_bfile(std::cout,
                        {"sequence: bvalue", "range: n = " + std::to_string(n) + ".." + std::to_string(n)},
                        {{static_cast<std::int64_t>(n), static_cast<std::int64_t>(b)}});
  }
  return exit_ok;
}

int run_classify(std::uint64_t lo, std::uint64_t hi, bindiv::backend be, unsigned workers,
                 const std::string& format, std::uint64_t cls, bool cls_set) {
  const auto c = bindiv::classify_range(lo, hi, be, workers);
  if (cls_set) {
    const auto it = c.classes.find(cls);
    static const std::vector<std::uint64_t> none;
    const auto& members = it == c.classes.end() ? none : it->second;
    if (format == "table") {
      std::cout << join(members) << '\n';
    } else if (format == "csv") {
      std::cout << "b,n\n";
      for (const auto n : members) std::cout << cls << ',' << n << '\n';
    } else if (format == "jsonl") {
      nlohmann::json j;
      j["b"] = cls;
      j["n"] = members;
      std::cout << j.dump() << '\n';
    } else {  // bfile
      std::vector<bindiv::bfile_record> records;
      for (std::size_t k = 0; k < members.size(); ++k)
        records.push_back({static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(members[k])});
      bindiv::write_bfile(std::cout,
                          {"sequence: class members", "class: " + std::to_string(cls),
                           "range: n = " + std::to_string(lo) + ".." + std::to_string(hi)},
                          records);
    }
    return exit_ok;
  }
  if (format == "table") {
    for (const auto& [b, members] : c.classes) std::cout << "class " << b << ": " << join(members) << '\n';
  } else if (format == "csv") {
    std::cout << "b,n\n";
    for (const auto& [b, members] : c.classes)
      for (const auto n : members) std::cout << b << ',' << n << '\n';
  } else if (format == "jsonl") {
    for (const auto& [b, members] : c.classes) {
      nlohmann::json j;
      j["b"] = b;
      j["n"] = members;
      std::cout << j.dump() << '\n';
    }
  } else {  // bfile: n b(n) per line
    std::vector<std::int64_t> values(hi - lo + 1, 0);
    for (const auto& [b, members] : c.classes)
      for (const auto n : members) values[n - lo] = static_cast<std::int64_t>(b);
    std::vector<bindiv::bfile_record> records;
    for (std::uint64_t n = lo; n <= hi; ++n)
      records.push_back({static_cast<std::int64_t>(n), values[n - lo]});
    bindiv::write_bfile(std::cout,
                        {"sequence: bvalue", "range: n = " + std::to_string(lo) + ".." + std::to_string(hi)},
                        records);
  }
  return exit_ok;
}

std::vector<std::string> expand_table_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& t : raw) {
    if (t == "5.1") {
      ids.push_back("classes");
    } else if (t == "5.2") {
      ids.push_back("bsets");
    } else if (t == "1.1") {
      ids.push_back("divisor-members");
      ids.push_back("divisor-counts");
    } else {
      ids.push_back(t);
    }
  }
  return ids;
}

int run_verify(const std::string& corpus_path, bindiv::backend be, unsigned workers,
               const std::vector<std::string>& tables, std::uint64_t max_n,
               std::uint64_t scan_limit, bool verbose) {
  const bindiv::corpus c = corpus_path.empty() ? bindiv::load_corpus()
                                               : bindiv::load_corpus_with_overrides(corpus_path);
  bindiv::verify_options opt;
  opt.be = be;
  opt.workers = workers;
  opt.max_n = max_n;
  opt.tables = expand_table_ids(tables);
  const auto rep = bindiv::verify_corpus(c, opt);

  std::cout << "corrected cases: " << join(rep.corrected_cases) << '\n';
  for (const auto& e : rep.entries) {
    if (e.status == bindiv::check_status::fail) {
      std::cout << "FAIL " << e.table << ' ' << e.subject << ": expected " << e.expected
                << ", got " << e.actual << '\n';
    } else if (verbose) {
      std::cout << "pass " << e.table << ' ' << e.subject << ": " << e.actual << '\n';
    }
  }
  for (const auto& id : bindiv::corpus_table_ids()) {
    std::size_t passed = 0;
    std::size_t failed = 0;
    for (const auto& e : rep.entries) {
      if (e.table != id) continue;
      (e.status == bindiv::check_status::pass ? passed : failed) += 1;
    }
    if (passed + failed > 0)
      std::cout << id << ": " << passed << " passed, " << failed << " failed\n";
  }
  if (scan_limit > 0) {
    const auto findings = bindiv::completeness_scan(c, scan_limit, be, workers);
    for (const auto& f : findings)
      std::cout << "scan: n=" << f.n << " has b=" << f.b
                << " but is missing from that class list\n";
    std::cout << "scan: " << findings.size() << " gaps found up to " << scan_limit << '\n';
  }
  const std::size_t total = rep.pass_count + rep.fail_count;
  if (rep.all_passed()) {
    std::cout << "all " << total << " checks passed\n";
    return exit_ok;
  }
  std::cout << total << " checks: " << rep.pass_count << " passed, " << rep.fail_count
            << " failed\n";
  return exit_mismatch;
}

int run_export(const sequence_request& req, const std::string& format, const std::string& out_path) {
  std::vector<std::string> comments;
  const auto records = make_sequence(req, comments);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw bindiv::io_error("cannot open for writing: " + out_path);
    out = &file;
  }
  write_sequence(*out, format, comments, records);
  out->flush();
  if (out->fail()) throw bindiv::io_error("write failed: " + out_path);
  return exit_ok;
}

int run_compare(const sequence_request& req, const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw bindiv::io_error("cannot read: " + file_path);
  const auto file_records = bindiv::parse_bfile(in);
  std::vector<std::string> comments;
  const auto computed = make_sequence(req, comments);
  const auto diffs = bindiv::diff_records(file_records, computed);
  std::size_t shared = 0;
  {
    std::size_t a = 0, b = 0;
    while (a < file_records.size() && b < computed.size()) {
      if (file_records[a].index < computed[b].index) {
        ++a;
      } else if (file_records[a].index > computed[b].index) {
        ++b;
      } else {
        ++shared;
        ++a;
        ++b;
      }
    }
  }
  for (const auto& d : diffs)
    std::cout << "index " << d.index << ": file " << d.file_value << ", computed "
              << d.computed_value << '\n';
  if (diffs.empty()) {
    std::cout << "identical: " << shared << " indices compared\n";
    return exit_ok;
  }
  std::cout << diffs.size() << (diffs.size() == 1 ? " mismatch" : " mismatches") << " over "
            << shared << " shared indices\n";
  return exit_mismatch;
}

int run_bench(std::uint64_t max, unsigned reps, const std::string& backend_name, unsigned workers) {
  std::vector<bindiv::backend> backends;
  if (backend_name == "both" || backend_name == "fast") backends.push_back(bindiv::backend::fast);
  if (backend_name == "both" || backend_name == "oracle") backends.push_back(bindiv::backend::oracle);

  std::vector<bindiv::b_classification> results;
  for (const auto be : backends) {
    double total = 0.0;
    bindiv::b_classification last;
    for (unsigned r = 0; r < reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      last = bindiv::classify_range(1, max, be, workers);
      const auto t1 = std::chrono::steady_clock::now();
      total += std::chrono::duration<double>(t1 - t0).count();
    }
    const double mean = total / reps;
    std::cout << std::left << std::setw(8) << (std::string(bindiv::to_string(be)) + ":")
              << std::right << std::fixed << std::setprecision(4) << mean << " s  ("
              << std::setprecision(1) << (mean > 0 ? static_cast<double>(max) / mean : 0.0)
              << " n/s)\n";
    results.push_back(std::move(last));
  }
  if (results.size() == 2) {
    if (results[0] == results[1]) {
      std::cout << "results identical\n";
    } else {
      std::cout << "results differ\n";
      return exit_mismatch;
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisibility sets B_n and counts b(n) for the binomial family C(n-i-1, i-1)"};
  app.require_subcommand(1);

  int rc = exit_ok;

  // bset / bvalue
  struct {
    std::uint64_t n = 0;
    std::string backend = "fast";
    std::string format = "table";
  } point[2];
  const char* point_names[2] = {"bset", "bvalue"};
  const char* point_help[2] = {"print the members of B_n", "print b(n) = |B_n|"};
  for (int d = 0; d < 2; ++d) {
    auto* sub = app.add_subcommand(point_names[d], point_help[d]);
    sub->add_option("--n", point[d].n, "subject n")->required()->check(positive_int);
    sub->add_option("--backend", point[d].backend, "carry counting or exact bignum")
        ->check(CLI::IsMember({"fast", "oracle"}))
        ->capture_default_str();
    sub->add_option("--format", point[d].format, "output format")
        ->check(CLI::IsMember({"table", "csv", "jsonl", "bfile"}))
        ->capture_default_str();
    sub->callback([&, d] {
      rc = d == 0 ? run_bset(point[d].n, bindiv::backend_from_string(point[d].backend), point[d].format)
                  : run_bvalue(point[d].n, bindiv::backend_from_string(point[d].backend), point[d].format);
    });
  }

  // classify
  struct {
    std::uint64_t lo = 1;
    std::uint64_t max = 0;
    std::uint64_t cls = 0;
    std::string backend = "fast";
    std::string format = "table";
    unsigned workers = default_workers();
  } cl;
  auto* classify = app.add_subcommand("classify", "group n in [lo, max] by b(n)");
  classify->add_option("--lo", cl.lo, "range start")->check(positive_int)->capture_default_str();
  classify->add_option("--max", cl.max, "range end")->required()->check(positive_int);
  auto* cl_cls = classify->add_option("--class", cl.cls, "print only members of this class");
  classify->add_option("--backend", cl.backend, "carry counting or exact bignum")
      ->check(CLI::IsMember({"fast", "oracle"}))
      ->capture_default_str();
  classify->add_option("--format", cl.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "jsonl", "bfile"}))
      ->capture_default_str();
  classify->add_option("--workers", cl.workers, "worker threads")->check(positive_int);
  classify->callback([&] {
    rc = run_classify(cl.lo, cl.max, bindiv::backend_from_string(cl.backend), cl.workers, cl.format,
                      cl.cls, cl_cls->count() > 0);
  });

  // verify
  struct {
    std::string corpus_path;
    std::string backend = "fast";
    std::vector<std::string> tables;
    std::uint64_t max_n = 0;
    std::uint64_t scan = 0;
    unsigned workers = default_workers();
    bool verbose = false;
  } vf;
  auto* verify = app.add_subcommand("verify", "check every bundled reference value");
  verify->add_option("--corpus", vf.corpus_path, "override file applied over the bundled tables");
  verify->add_option("--backend", vf.backend, "carry counting or exact bignum")
      ->check(CLI::IsMember({"fast", "oracle"}))
      ->capture_default_str();
  verify->add_option("--tables,--sections", vf.tables,
                     "restrict to tables (classes, bsets, divisor-members, divisor-counts; "
                     "aliases 5.1, 5.2, 1.1)")
      ->delimiter(',');
  verify->add_option("--max-n", vf.max_n, "skip checks above this n (0 = no cap)");
  verify->add_option("--scan", vf.scan, "also report class-list gaps up to this limit");
  verify->add_option("--workers", vf.workers, "worker threads")->check(positive_int);
  verify->add_flag("--verbose", vf.verbose, "print passing checks too");
  verify->callback([&] {
    rc = run_verify(vf.corpus_path, bindiv::backend_from_string(vf.backend), vf.workers, vf.tables,
                    vf.max_n, vf.scan, vf.verbose);
  });

  // export / compare
  struct {
    std::string sequence;
    std::uint64_t lo = 1;
    std::uint64_t max = 0;
    std::uint64_t cls = 0;
    std::int64_t offset = 1;
    std::string backend = "fast";
    std::string format = "bfile";
    std::string out = "-";
    std::string file;
    unsigned workers = default_workers();
  } ex, cp;
  auto wire_sequence_flags = [](CLI::App* sub, auto& p) -> CLI::Option* {
    sub->add_option("--sequence", p.sequence, "bvalue, contains-divisor-members, or class-members")
        ->required()
        ->check(CLI::IsMember({"bvalue", "contains-divisor-members", "class-members"}));
    sub->add_option("--lo", p.lo, "range start (bvalue only)")
        ->check(positive_int)
        ->capture_default_str();
    sub->add_option("--max", p.max, "range end / sweep limit")->required()->check(positive_int);
    CLI::Option* cls = sub->add_option("--class", p.cls, "class for class-members");
    sub->add_option("--offset", p.offset, "index of the first record")->capture_default_str();
    sub->add_option("--backend", p.backend, "carry counting or exact bignum")
        ->check(CLI::IsMember({"fast", "oracle"}))
        ->capture_default_str();
    sub->add_option("--workers", p.workers, "worker threads")->check(positive_int);
    return cls;
  };

  auto* exp = app.add_subcommand("export", "write a sequence as bfile, csv, or jsonl");
  auto* ex_cls = wire_sequence_flags(exp, ex);
  exp->add_option("--format", ex.format, "output format")
      ->check(CLI::IsMember({"bfile", "csv", "jsonl"}))
      ->capture_default_str();
  exp->add_option("--out", ex.out, "output path ('-' = stdout)")->capture_default_str();
  exp->callback([&] {
    sequence_request req{ex.sequence, ex.lo,    ex.max,
                         ex.cls,      ex_cls->count() > 0, ex.offset,
                         bindiv::backend_from_string(ex.backend), ex.workers};
    rc = run_export(req, ex.format, ex.out);
  });

  auto* cmp = app.add_subcommand("compare", "diff a b-file against the computed sequence");
  auto* cp_cls = wire_sequence_flags(cmp, cp);
  cmp->add_option("--file", cp.file, "b-file to compare against")->required();
  cmp->callback([&] {
    sequence_request req{cp.sequence, cp.lo,    cp.max,
                         cp.cls,      cp_cls->count() > 0, cp.offset,
                         bindiv::backend_from_string(cp.backend), cp.workers};
    rc = run_compare(req, cp.file);
  });

  // bench
  struct {
    std::uint64_t max = 0;
    unsigned reps = 1;
    std::string backend = "both";
    unsigned workers = default_workers();
  } bn;
  auto* bench = app.add_subcommand("bench", "time classify sweeps and cross-check backends");
  bench->add_option("--max", bn.max, "sweep limit")->required()->check(positive_int);
  bench->add_option("--reps", bn.reps, "repetitions per backend")
      ->check(positive_int)
      ->capture_default_str();
  bench->add_option("--backend", bn.backend, "fast, oracle, or both")
      ->check(CLI::IsMember({"fast", "oracle", "both"}))
      ->capture_default_str();
  bench->add_option("--workers", bn.workers, "worker threads")->check(positive_int);
  bench->callback([&] { rc = run_bench(bn.max, bn.reps, bn.backend, bn.workers); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  } catch (const bindiv::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const bindiv::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return rc;
}
