#pragma once

#include <bindiv/arith.hpp>
#include <bindiv/oracle.hpp>

#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

// Divisibility sets for the binomial family C(n-i-1, i-1):
//
//   B_n = { i : 2 <= i <= floor(n/2), gcd(i, n) > 1, i divides C(n-i-1, i-1) }
//
// b(n) = |B_n| classifies n; primes always land in class 0.

namespace bindiv {

enum class backend { fast, oracle };

inline const char* to_string(backend be) { return be == backend::fast ? "fast" : "oracle"; }

inline backend backend_from_string(std::string_view s) {
  if (s == "fast") return backend::fast;
  if (s == "oracle") return backend::oracle;
  throw std::domain_error("unknown backend: " + std::string(s));
}

namespace detail {

inline bool b_member(std::uint64_t n, std::uint64_t i, backend be) {
  if (std::gcd(i, n) <= 1) return false;
  const std::uint64_t m = n - i - 1;
  const std::uint64_t k = i - 1;
  return be == backend::fast ? arith::divides_binomial(i, m, k)
                             : oracle::divides_binomial_oracle(i, m, k);
}

// out[n - lo] = fn(n) for every n in [lo, hi], striding n across workers.
// Each slot is written by exactly one thread, so the result is independent of
// scheduling and worker count.
template <class T, class Fn>
std::vector<T> map_range(std::uint64_t lo, std::uint64_t hi, unsigned workers, Fn fn) {
  const std::uint64_t count = hi - lo + 1;
  std::vector<T> out(count);
  std::uint64_t w = workers == 0 ? 1 : workers;
  if (w > count) w = count;
  if (w <= 1) {
    for (std::uint64_t n = lo; n <= hi; ++n) out[n - lo] = fn(n);
    return out;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::uint64_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::uint64_t idx = t; idx < count; idx += w) out[idx] = fn(lo + idx);
      } catch (...) {
        std::lock_guard<std::mutex> guard(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace detail

struct b_set_result {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> members;
  bool operator==(const b_set_result&) const = default;
};

inline b_set_result b_set(std::uint64_t n, backend be = backend::fast) {
  if (n == 0) throw std::domain_error("b_set: undefined for n = 0");
  b_set_result r{n, {}};
  for (std::uint64_t i = 2; i <= n / 2; ++i) {
    if (detail::b_member(n, i, be)) r.members.push_back(i);
  }
  return r;
}

inline std::uint64_t b_value(std::uint64_t n, backend be = backend::fast) {
  return b_set(n, be).members.size();
}

// b(n) for every n in [lo, hi], in order.
inline std::vector<std::uint64_t> b_values_range(std::uint64_t lo, std::uint64_t hi,
                                                 backend be = backend::fast, unsigned workers = 1) {
  if (lo == 0) throw std::domain_error("b_values_range: range starts at 1");
  if (hi < lo) throw std::out_of_range("b_values_range: inverted range");
  return detail::map_range<std::uint64_t>(lo, hi, workers,
                                          [be](std::uint64_t n) { return b_value(n, be); });
}

struct b_classification {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::map<std::uint64_t, std::vector<std::uint64_t>> classes;  // b -> members, both ascending
  bool operator==(const b_classification&) const = default;
};

inline b_classification classify_range(std::uint64_t lo, std::uint64_t hi,
                                       backend be = backend::fast, unsigned workers = 1) {
  const auto values = b_values_range(lo, hi, be, workers);
  b_classification c{lo, hi, {}};
  for (std::uint64_t n = lo; n <= hi; ++n) c.classes[values[n - lo]].push_back(n);
  return c;
}

// True iff some member of B_n divides n. Only divisors of n can qualify, and
// any divisor d in [2, n/2] has gcd(d, n) = d > 1, so scanning divisors is
// equivalent to intersecting B_n with the divisors of n.
inline bool contains_divisor(std::uint64_t n, backend be = backend::fast) {
  if (n == 0) throw std::domain_error("contains_divisor: undefined for n = 0");
  for (std::uint64_t d = 2; d <= n / 2; ++d) {
    if (n % d == 0 && detail::b_member(n, d, be)) return true;
  }
  return false;
}

struct divisor_containment_result {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> members;  // ascending
  std::uint64_t count = 0;
  bool operator==(const divisor_containment_result&) const = default;
};

inline divisor_containment_result divisor_containment_sweep(std::uint64_t limit,
                                                            backend be = backend::fast,
                                                            unsigned workers = 1) {
  if (limit == 0) throw std::domain_error("divisor_containment_sweep: limit must be >= 1");
  const auto flags = detail::map_range<char>(
      1, limit, workers, [be](std::uint64_t n) { return static_cast<char>(contains_divisor(n, be)); });
  divisor_containment_result r{limit, {}, 0};
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (flags[n - 1]) r.members.push_back(n);
  }
  r.count = r.members.size();
  return r;
}

}  // namespace bindiv
