#include <bindiv/bsets.hpp>
#include <bindiv/corpus.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "testutil.hpp"

using namespace bindiv;

TEST_CASE("b_set matches hand-worked sets", "[bsets]") {
  // B_18: only i = 6 works; C(11,5) = 462 = 6 * 77.
  REQUIRE(b_set(18).members == std::vector<std::uint64_t>{6});
  REQUIRE(b_set(60).members == std::vector<std::uint64_t>{18, 21, 22, 24, 26});
  REQUIRE(b_set(54).members == std::vector<std::uint64_t>{4, 14, 15, 16, 20, 21});
  REQUIRE(b_set(39).members == std::vector<std::uint64_t>{9});
  REQUIRE(b_set(1).members.empty());
  REQUIRE(b_set(4).members.empty());
  REQUIRE_THROWS_AS(b_set(0), std::domain_error);
}

TEST_CASE("b_value counts members", "[bsets]") {
  REQUIRE(b_value(60) == 5);
  REQUIRE(b_value(97) == 0);
  REQUIRE(b_value(1) == 0);
  REQUIRE(b_value(14) == 1);
}

TEST_CASE("prime n always gives an empty set", "[bsets]") {
  for (std::uint64_t n = 2; n <= 600; ++n) {
    if (!testutil::naive_is_prime(n)) continue;
    if (!b_set(n).members.empty()) {
      INFO("n = " << n);
      REQUIRE(b_set(n).members.empty());
    }
  }
}

TEST_CASE("members are composite, in range, strictly increasing", "[bsets]") {
  for (std::uint64_t n = 1; n <= 800; ++n) {
    const auto r = b_set(n);
    REQUIRE(r.n == n);
    std::uint64_t prev = 0;
    for (const auto i : r.members) {
      INFO("n = " << n << " member " << i);
      REQUIRE(i > prev);
      REQUIRE(i >= 4);
      REQUIRE(i <= n / 2);
      REQUIRE_FALSE(arith::is_prime(i));
      prev = i;
    }
  }
}

TEST_CASE("fast and oracle backends agree", "[bsets]") {
  for (std::uint64_t n = 1; n <= 150; ++n) {
    if (b_set(n, backend::fast) != b_set(n, backend::oracle)) {
      INFO("n = " << n);
      REQUIRE(b_set(n, backend::fast).members == b_set(n, backend::oracle).members);
    }
  }
}

TEST_CASE("backend_from_string round-trips", "[bsets]") {
  REQUIRE(backend_from_string("fast") == backend::fast);
  REQUIRE(backend_from_string("oracle") == backend::oracle);
  REQUIRE_THROWS_AS(backend_from_string("exact"), std::domain_error);
  REQUIRE(std::string(to_string(backend::oracle)) == "oracle");
}

TEST_CASE("classify_range partitions its interval", "[bsets]") {
  const auto c = classify_range(1, 2000);
  std::vector<char> seen(2001, 0);
  std::size_t total = 0;
  for (const auto& [b, members] : c.classes) {
    std::uint64_t prev = 0;
    for (const auto n : members) {
      REQUIRE(n > prev);
      REQUIRE(n >= 1);
      REQUIRE(n <= 2000);
      REQUIRE(seen[n] == 0);
      seen[n] = 1;
      prev = n;
      ++total;
    }
    (void)b;
  }
  REQUIRE(total == 2000);
}

TEST_CASE("classify_range matches the published class lists up to 101", "[bsets]") {
  const auto c = classify_range(1, 101);
  const auto corpus = load_corpus();
  for (const auto& [b, list] : corpus.class_lists) {
    std::vector<std::uint64_t> expected;
    for (const auto n : list) {
      if (n <= 101) expected.push_back(n);
    }
    const auto it = c.classes.find(b);
    const auto actual = it == c.classes.end() ? std::vector<std::uint64_t>{} : it->second;
    INFO("b = " << b);
    REQUIRE(actual == expected);
  }
}

TEST_CASE("classify_range validates its range", "[bsets]") {
  REQUIRE_THROWS_AS(classify_range(0, 10), std::domain_error);
  REQUIRE_THROWS_AS(classify_range(10, 5), std::out_of_range);
  REQUIRE(classify_range(7, 7).classes.at(0) == std::vector<std::uint64_t>{7});
}

TEST_CASE("classification is identical for any worker count", "[bsets]") {
  const auto base = classify_range(1, 300, backend::fast, 1);
  for (const unsigned workers : {2u, 3u, 8u}) {
    INFO("workers = " << workers);
    REQUIRE(classify_range(1, 300, backend::fast, workers) == base);
  }
  REQUIRE(classify_range(1, 300, backend::fast, 1) == base);  // and repeatable
}

TEST_CASE("b_values_range matches per-n calls", "[bsets]") {
  const auto values = b_values_range(50, 120, backend::fast, 4);
  REQUIRE(values.size() == 71);
  for (std::uint64_t n = 50; n <= 120; ++n) {
    INFO("n = " << n);
    REQUIRE(values[n - 50] == b_value(n));
  }
  REQUIRE_THROWS_AS(b_values_range(0, 5), std::domain_error);
  REQUIRE_THROWS_AS(b_values_range(9, 2), std::out_of_range);
}

TEST_CASE("contains_divisor matches hand-worked cases", "[bsets]") {
  REQUIRE(contains_divisor(18));        // 6 is in B_18 and divides 18
  REQUIRE_FALSE(contains_divisor(54));  // B_54 holds no divisor of 54
  REQUIRE_FALSE(contains_divisor(39));
  REQUIRE_FALSE(contains_divisor(91));
  REQUIRE_FALSE(contains_divisor(1));
  REQUIRE_FALSE(contains_divisor(97));
  REQUIRE_THROWS_AS(contains_divisor(0), std::domain_error);
}

TEST_CASE("contains_divisor equals intersecting B_n with the divisors of n", "[bsets]") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    bool expected = false;
    for (const auto i : b_set(n).members) {
      if (n % i == 0) expected = true;
    }
    if (contains_divisor(n) != expected) {
      INFO("n = " << n);
      REQUIRE(contains_divisor(n) == expected);
    }
  }
}

TEST_CASE("divisor_containment_sweep collects members in order", "[bsets]") {
  const auto sweep = divisor_containment_sweep(300, backend::fast, 3);
  REQUIRE(sweep.limit == 300);
  REQUIRE(sweep.count == sweep.members.size());
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    if (contains_divisor(n)) expected.push_back(n);
  }
  REQUIRE(sweep.members == expected);
  REQUIRE_THROWS_AS(divisor_containment_sweep(0), std::domain_error);
}

TEST_CASE("divisor containment members up to 100", "[bsets]") {
  const auto sweep = divisor_containment_sweep(100);
  REQUIRE(sweep.members ==
          std::vector<std::uint64_t>{18, 45, 48, 70, 72, 75, 84, 90, 100});
}
