#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "fibzeck/fibcore.hpp"
#include "testutil.hpp"

using namespace fibzeck;

TEST_CASE("fibonacci: pinned values") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(11) == 89);
  CHECK(fibonacci(26) == 121393);
  CHECK(fibonacci(100) == Nat("354224848179261915075"));
}

TEST_CASE("fibonacci recurrence and pair consistency across strategies") {
  // Indices straddling the memo/fast-doubling switch must agree.
  for (std::uint64_t n : {0ull, 1ull, 50ull, 4094ull, 4095ull, 4096ull,
                          4097ull, 5000ull, 9000ull}) {
    const auto [fn, fn1] = fibonacci_pair(n);
    CHECK(fn == fibonacci(n));
    CHECK(fn1 == fibonacci(n + 1));
    if (n >= 2) CHECK(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
  }
}

TEST_CASE("zeck_encode: pinned values") {
  CHECK(zeck_encode(4).indices() == std::vector<std::uint64_t>{4, 2});
  CHECK(zeck_encode(100).indices() == std::vector<std::uint64_t>{11, 6, 4});
  CHECK(zeck_encode(1).indices() == std::vector<std::uint64_t>{2});
  CHECK(zeck_encode(5).indices() == std::vector<std::uint64_t>{5});
  CHECK_THROWS_AS(zeck_encode(0), std::domain_error);
}

TEST_CASE("zeck_decode: pinned values and validation") {
  CHECK(zeck_decode(ZeckRepr({11, 6, 4})) == 100);
  CHECK(zeck_decode(ZeckRepr({2})) == 1);
  CHECK(zeck_decode(ZeckRepr({5})) == 5);
  CHECK(zeck_decode(ZeckRepr()) == 0);
  CHECK_THROWS_AS(ZeckRepr({3, 2}), std::invalid_argument);   // adjacent
  CHECK_THROWS_AS(ZeckRepr({1}), std::invalid_argument);      // index < 2
  CHECK_THROWS_AS(ZeckRepr({4, 4}), std::invalid_argument);   // repeated
  CHECK_THROWS_AS(ZeckRepr({2, 4}), std::invalid_argument);   // increasing
}

TEST_CASE("Zeckendorf shape invariants") {
  for (Nat n = 1; n <= 10000; ++n) {
    const ZeckRepr z = zeck_encode(n);
    const auto& idx = z.indices();
    REQUIRE(!idx.empty());
    CHECK(idx.back() >= 2);
    for (std::size_t i = 1; i < idx.size(); ++i)
      CHECK(idx[i - 1] >= idx[i] + 2);
  }
}

TEST_CASE("Zeckendorf round trip: exhaustive small, random huge") {
  for (Nat n = 1; n <= 100000; ++n) CHECK(zeck_decode(zeck_encode(n)) == n);
  std::mt19937_64 rng(140599);
  for (int i = 0; i < 1000; ++i) {
    const Nat n = testutil::random_up_to_bits(rng, 1000);
    CHECK(zeck_decode(zeck_encode(n)) == n);
  }
}

TEST_CASE("fib_map: pinned values") {
  CHECK(fib_map(4).value() == 5);    // 101
  CHECK(fib_map(5).value() == 8);    // 1000
  CHECK(fib_map(100).value() == 532);  // 1000010100
  CHECK_THROWS_AS(fib_map(0), std::domain_error);
}

TEST_CASE("fib_unmap: pinned values and input validation") {
  CHECK(fib_unmap(FibWord(532)) == 100);
  CHECK(fib_unmap(FibWord(21)) == 12);
  CHECK(fib_unmap(FibWord(1)) == 1);
  CHECK_THROWS_AS(fib_unmap(FibWord(0)), std::domain_error);
  CHECK_THROWS_AS(FibWord(3), std::domain_error);   // 11
  CHECK_THROWS_AS(FibWord(6), std::domain_error);   // 110
  CHECK_THROWS_AS(FibWord(Nat(-1)), std::domain_error);
}

TEST_CASE("fib_map is a strictly increasing bijection") {
  Nat prev = 0;
  for (Nat n = 1; n <= 100000; ++n) {
    const FibWord w = fib_map(n);
    CHECK(w.value() > prev);
    CHECK(fib_unmap(w) == n);
    prev = w.value();
  }
}

TEST_CASE("is_fibbinary") {
  CHECK(is_fibbinary(5));
  CHECK_FALSE(is_fibbinary(3));
  CHECK(is_fibbinary(0));
  CHECK(is_fibbinary(Nat(1) << 500));
  CHECK_FALSE(is_fibbinary((Nat(1) << 500) | (Nat(1) << 501)));
  CHECK_THROWS_AS(is_fibbinary(Nat(-1)), std::invalid_argument);
}

TEST_CASE("fib_map enumerates exactly the fibbinary numbers, in rank order") {
  // Brute-force oracle: filter every integer up to fib_map(N).
  const Nat n_max = 10000;
  const Nat top = fib_map(n_max).value();
  Nat rank = 0;
  for (Nat w = 1; w <= top; ++w) {
    if (!is_fibbinary(w)) continue;
    ++rank;
    CHECK(fib_map(rank).value() == w);
    CHECK(fib_unmap(FibWord(w)) == rank);
  }
  CHECK(rank == n_max);
}

TEST_CASE("fibbinary numbers with b bits number F_b") {
  // Highest set bit at position b-1, scanned by brute force.
  std::vector<std::uint64_t> counts(21, 0);
  for (std::uint64_t w = 1; w < (1ull << 20); ++w) {
    if ((w & (w >> 1)) != 0) continue;
    ++counts[std::bit_width(w)];
  }
  for (std::uint64_t b = 1; b <= 20; ++b) CHECK(counts[b] == fibonacci(b));
}

TEST_CASE("parity law: fib_map(n) odd iff index 2 appears in z(n)") {
  for (Nat n = 1; n <= 10000; ++n) {
    const bool has_f2 = zeck_encode(n).indices().back() == 2;
    CHECK(fib_map(n).is_odd() == has_f2);
  }
}

TEST_CASE("fibbinary stream: pinned prefixes") {
  FibbinaryStream s(1);
  CHECK(s.rank() == 1);
  CHECK(s.next().value() == 1);
  CHECK(s.next().value() == 2);
  CHECK(s.next().value() == 4);
  CHECK(s.next().value() == 5);
  CHECK(s.rank() == 5);
  CHECK(FibbinaryStream(5).next().value() == 8);
  CHECK(FibbinaryStream(12).next().value() == 21);
  CHECK_THROWS_AS(FibbinaryStream(0), std::domain_error);
}

TEST_CASE("fibbinary stream matches fib_map from arbitrary starts") {
  std::mt19937_64 rng(90125);
  for (int trial = 0; trial < 20; ++trial) {
    const Nat start = 1 + testutil::random_up_to_bits(rng, 14);
    FibbinaryStream s(start);
    Nat n = start;
    for (int i = 0; i < 500; ++i, ++n) {
      CHECK(s.rank() == n);
      CHECK(s.next().value() == fib_map(n).value());
    }
  }
}

TEST_CASE("fibbinary stream at huge ranks") {
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 5; ++trial) {
    const Nat start = testutil::random_exact_bits(rng, 256);
    FibbinaryStream s(start);
    Nat n = start;
    for (int i = 0; i < 50; ++i, ++n) CHECK(s.next() == fib_map(n));
  }
}
