#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

// Exact arbitrary-precision reference path. Deliberately shares no code with
// the carry-counting routines: results here come from forming the binomial
// coefficient in full and reducing it, so the two routes can check each other.

namespace bindiv::oracle {

using big_natural = boost::multiprecision::cpp_int;

// Exact C(m, k) by the multiplicative recurrence. After step j the running
// product equals C(m - k + j, j), an integer, so every division is exact.
inline big_natural binomial_exact(std::uint64_t m, std::uint64_t k) {
  if (k > m) throw std::out_of_range("binomial_exact: k exceeds m");
  big_natural r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    r *= m - k + j;
    r /= j;
  }
  return r;
}

inline std::uint64_t binomial_mod(std::uint64_t m, std::uint64_t k, std::uint64_t i) {
  if (i < 2) throw std::domain_error("binomial_mod: modulus must be >= 2");
  return static_cast<std::uint64_t>(binomial_exact(m, k) % i);
}

inline bool divides_binomial_oracle(std::uint64_t i, std::uint64_t m, std::uint64_t k) {
  return binomial_mod(m, k, i) == 0;
}

// v_p(C(m, k)) by repeated exact division of the full binomial.
inline std::uint32_t valuation_exact(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
  if (p < 2) throw std::domain_error("valuation_exact: p must be >= 2");
  big_natural c = binomial_exact(m, k);
  std::uint32_t v = 0;
  while (c % p == 0) {
    c /= p;
    ++v;
  }
  return v;
}

}  // namespace bindiv::oracle
