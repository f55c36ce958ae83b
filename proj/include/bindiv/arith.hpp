#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Native 64-bit prime-power arithmetic: smallest-factor sieve, factorization,
// base-p digits, and carry counting. Divisibility of C(m, k) by an integer i
// is decided digit-by-digit; the binomial itself is never formed here.

namespace bindiv::arith {

struct prime_power {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  bool operator==(const prime_power&) const = default;
};

// Canonical factorization: primes strictly increasing, exponents >= 1, and
// value equal to the product. value == 1 gives an empty factor list.
struct prime_factorization {
  std::uint64_t value = 1;
  std::vector<prime_power> factors;
  bool operator==(const prime_factorization&) const = default;
};

// Little-endian digits in the given base, no trailing zero digit; the value 0
// is the empty digit sequence.
struct digit_vector {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;
  bool operator==(const digit_vector&) const = default;
};

inline std::uint64_t reconstruct(const digit_vector& dv) {
  std::uint64_t value = 0;
  std::uint64_t scale = 1;
  for (std::size_t j = 0; j < dv.digits.size(); ++j) {
    value += dv.digits[j] * scale;
    if (j + 1 < dv.digits.size()) scale *= dv.base;
  }
  return value;
}

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  if (m % 3 == 0) return m == 3;
  for (std::uint64_t d = 5; d * d <= m; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

// Smallest prime factor of every m in [2, limit]; table[p] == p exactly for
// primes. Entries 0 and 1 are 0.
inline std::vector<std::uint32_t> sieve_smallest_factor(std::uint64_t limit) {
  if (limit == 0) throw std::out_of_range("sieve_smallest_factor: limit must be >= 1");
  if (limit >= std::numeric_limits<std::uint32_t>::max())
    throw std::length_error("sieve_smallest_factor: limit too large for 32-bit factor entries");
  std::vector<std::uint32_t> table(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (table[i] != 0) continue;
    table[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (table[j] == 0) table[j] = static_cast<std::uint32_t>(i);
    }
  }
  return table;
}

inline constexpr std::uint64_t default_sieve_limit = 10'000'000;

// Process-wide table at default_sieve_limit, built on first use and read-only
// afterwards, so concurrent lookups are safe.
inline const std::vector<std::uint32_t>& shared_sieve() {
  static const std::vector<std::uint32_t> table = sieve_smallest_factor(default_sieve_limit);
  return table;
}

inline prime_factorization factorize(std::uint64_t m, const std::vector<std::uint32_t>& smallest_factor) {
  if (m == 0) throw std::domain_error("factorize: undefined for 0");
  if (m >= smallest_factor.size()) throw std::out_of_range("factorize: value beyond factor table");
  prime_factorization f;
  f.value = m;
  while (m > 1) {
    const std::uint64_t p = smallest_factor[m];
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

// Sieve-backed up to default_sieve_limit, trial division beyond.
inline prime_factorization factorize(std::uint64_t m) {
  if (m == 0) throw std::domain_error("factorize: undefined for 0");
  if (m <= default_sieve_limit) return factorize(m, shared_sieve());
  prime_factorization f;
  f.value = m;
  auto extract = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  extract(2);
  for (std::uint64_t d = 3; d * d <= m; d += 2) extract(d);
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

inline digit_vector digits_base(std::uint64_t m, std::uint64_t p) {
  if (p < 2) throw std::domain_error("digits_base: base must be >= 2");
  digit_vector dv{p, {}};
  while (m != 0) {
    dv.digits.push_back(m % p);
    m /= p;
  }
  return dv;
}

namespace detail {

// Carries produced when adding a and b in base p. No primality check.
inline std::uint32_t carry_count(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint32_t carries = 0;
  std::uint64_t carry = 0;
  while (a != 0 || b != 0 || carry != 0) {
    carry = (a % p + b % p + carry >= p) ? 1 : 0;
    carries += static_cast<std::uint32_t>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

}  // namespace detail

// v_p(C(a+b, a)): the number of carries when adding a and b in base p.
inline std::uint32_t kummer_carries(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("kummer_carries: " + std::to_string(p) + " is not prime");
  return detail::carry_count(a, b, p);
}

// v_p(C(m, k)) for 0 <= k <= m.
inline std::uint32_t valuation_binomial(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
  if (k > m) throw std::out_of_range("valuation_binomial: k exceeds m");
  return kummer_carries(k, m - k, p);
}

// True iff i divides C(m, k): v_p(C(m, k)) >= v_p(i) for every prime p of i.
inline bool divides_binomial(std::uint64_t i, std::uint64_t m, std::uint64_t k) {
  if (i < 2) throw std::domain_error("divides_binomial: divisor must be >= 2");
  if (k > m) throw std::out_of_range("divides_binomial: k exceeds m");
  for (const auto& pp : factorize(i).factors) {
    if (detail::carry_count(k, m - k, pp.prime) < pp.exponent) return false;
  }
  return true;
}

}  // namespace bindiv::arith
