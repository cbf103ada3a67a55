#pragma once
// fibcore.hpp - Fibonacci numbers, Zeckendorf representations, and the
// bijection between positive integers and fibbinary numbers (integers whose
// binary expansion contains no two adjacent set bits).

#include "fibzeck/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fibzeck {

// Zeckendorf representation: strictly decreasing Fibonacci indices with
// pairwise gaps >= 2 and minimum index 2 (the summand 1 is always F_2, never
// F_1). The empty list represents 0.
class ZeckRepr {
 public:
  ZeckRepr() = default;
  // Validates the invariants; throws std::invalid_argument on violation.
  explicit ZeckRepr(std::vector<std::uint64_t> indices);

  const std::vector<std::uint64_t>& indices() const noexcept {
    return indices_;
  }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t size() const noexcept { return indices_.size(); }
  // Largest index; requires a non-empty representation.
  std::uint64_t top() const { return indices_.front(); }

  friend bool operator==(const ZeckRepr& x, const ZeckRepr& y) {
    return x.indices_ == y.indices_;
  }

 private:
  std::vector<std::uint64_t> indices_;  // strictly decreasing
};

class FibbinaryStream;

// A fibbinary number: nonnegative with no two adjacent set bits. The public
// constructor validates; operations may then rely on the invariant. Bit p of
// the word corresponds to the Zeckendorf digit of F_{p+2}.
class FibWord {
 public:
  FibWord() = default;  // zero
  // Throws std::domain_error if w is negative or has adjacent set bits.
  explicit FibWord(Nat w);

  const Nat& value() const noexcept { return word_; }
  bool is_odd() const { return boost::multiprecision::bit_test(word_, 0); }

  friend bool operator==(const FibWord& x, const FibWord& y) {
    return x.word_ == y.word_;
  }
  friend bool operator<(const FibWord& x, const FibWord& y) {
    return x.word_ < y.word_;
  }

 private:
  struct Trusted {};  // tag for producers whose output is valid by design
  FibWord(Trusted, Nat w) : word_(std::move(w)) {}
  friend class FibbinaryStream;
  friend FibWord fib_map(const Nat& n);
  friend FibWord odfib(const Nat& n);

  Nat word_;
};

// F_n with F_0 = 0, F_1 = 1. Memoized for small n, fast doubling beyond.
Nat fibonacci(std::uint64_t n);

// (F_n, F_{n+1}) by the fast-doubling recurrences
// F(2k) = F(k) (2 F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2.
std::pair<Nat, Nat> fibonacci_pair(std::uint64_t n);

// Greedy Zeckendorf decomposition of n >= 1; the greedy choice of the
// largest Fibonacci number <= n is the unique valid one.
ZeckRepr zeck_encode(const Nat& n);

// Sum of F_i over the representation's indices.
Nat zeck_decode(const ZeckRepr& r);

// The bijection onto fibbinary numbers: set bit i-2 for each Zeckendorf
// index i of n >= 1. Yields the n-th fibbinary number in increasing order.
FibWord fib_map(const Nat& n);

// Inverse of fib_map for w >= 1: each set bit p contributes F_{p+2}.
Nat fib_unmap(const FibWord& w);

// True iff w >= 0 has no two adjacent set bits; throws std::invalid_argument
// for negative input.
bool is_fibbinary(const Nat& w);

// Enumerates fibbinary numbers in increasing order starting at a given rank.
// Advances by the Zeckendorf carry rule -- amortized O(1) bit operations per
// step -- instead of re-encoding every rank.
class FibbinaryStream {
 public:
  explicit FibbinaryStream(const Nat& start_rank);  // start_rank >= 1

  // Rank of the word the next call to next() will yield.
  const Nat& rank() const noexcept { return rank_; }
  // Yields the current word and advances the cursor.
  FibWord next();

 private:
  Nat rank_;
  Nat word_;
};

}  // namespace fibzeck
