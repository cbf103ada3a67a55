#include "fibzeck/fibcore.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace fibzeck {

namespace mp = boost::multiprecision;

namespace {

// Below this index a thread-local table answers lookups directly; the table
// grows on demand and never shrinks.
constexpr std::uint64_t kMemoLimit = 4096;

const Nat& fibonacci_memo(std::uint64_t n) {
  thread_local std::vector<Nat> table = {0, 1};
  while (table.size() <= n) {
    table.push_back(table[table.size() - 1] + table[table.size() - 2]);
  }
  return table[static_cast<std::size_t>(n)];
}

unsigned checked_bit_pos(std::uint64_t p) {
  if (p > std::numeric_limits<unsigned>::max())
    throw std::overflow_error("fibbinary word would exceed addressable bits");
  return static_cast<unsigned>(p);
}

}  // namespace

std::pair<Nat, Nat> fibonacci_pair(std::uint64_t n) {
  // Iterative fast doubling over the bits of n, most significant first.
  // Invariant entering each step: (a, b) = (F_k, F_{k+1}) for the prefix k.
  Nat a = 0, b = 1;  // (F_0, F_1)
  if (n == 0) return {a, b};
  const int top = 63 - std::countl_zero(n);
  for (int i = top; i >= 0; --i) {
    Nat c = a * (2 * b - a);  // F_{2k}
    Nat d = a * a + b * b;    // F_{2k+1}
    if ((n >> i) & 1) {
      a = std::move(d);
      b = c + a;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

Nat fibonacci(std::uint64_t n) {
  if (n < kMemoLimit) return fibonacci_memo(n);
  return fibonacci_pair(n).first;
}

ZeckRepr::ZeckRepr(std::vector<std::uint64_t> indices)
    : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 2)
      throw std::invalid_argument("ZeckRepr: indices must be >= 2");
    if (i > 0 && indices_[i - 1] < indices_[i] + 2)
      throw std::invalid_argument(
          "ZeckRepr: indices must decrease with gaps >= 2");
  }
}

FibWord::FibWord(Nat w) : word_(std::move(w)) {
  if (word_ < 0 || (word_ & (word_ >> 1)) != 0)
    throw std::domain_error("FibWord: negative or has adjacent set bits");
}

ZeckRepr zeck_encode(const Nat& n) {
  if (n < 1) throw std::domain_error("zeck_encode: n must be >= 1");
  // Climb a Fibonacci pair to the first F_{m+1} > n, then peel greedily
  // while stepping it back down. After subtracting F_m the remainder is
  // < F_{m-1}, so the gap-two invariant holds by construction.
  std::uint64_t m = 2;
  Nat fa = 1, fb = 2;  // (F_m, F_{m+1})
  while (fb <= n) {
    Nat t = fa + fb;
    fa.swap(fb);
    fb = std::move(t);
    ++m;
  }
  std::vector<std::uint64_t> idx;
  Nat rem = n;
  while (rem > 0) {
    while (fa > rem) {
      Nat t = fb - fa;
      fb.swap(fa);
      fa = std::move(t);
      --m;
    }
    idx.push_back(m);
    rem -= fa;
  }
  return ZeckRepr(std::move(idx));
}

Nat zeck_decode(const ZeckRepr& r) {
  Nat sum = 0;
  for (std::uint64_t i : r.indices()) sum += fibonacci(i);
  return sum;
}

FibWord fib_map(const Nat& n) {
  const ZeckRepr r = zeck_encode(n);  // rejects n < 1
  Nat w = 0;
  for (std::uint64_t i : r.indices()) mp::bit_set(w, checked_bit_pos(i - 2));
  return FibWord(FibWord::Trusted{}, std::move(w));
}

Nat fib_unmap(const FibWord& w) {
  if (w.value() < 1) throw std::domain_error("fib_unmap: word must be >= 1");
  Nat sum = 0;
  Nat fa = 1, fb = 2;  // F_{p+2}, F_{p+3} at bit position p
  const unsigned top = mp::msb(w.value());
  for (unsigned p = 0; p <= top; ++p) {
    if (mp::bit_test(w.value(), p)) sum += fa;
    Nat t = fa + fb;
    fa.swap(fb);
    fb = std::move(t);
  }
  return sum;
}

bool is_fibbinary(const Nat& w) {
  if (w < 0) throw std::invalid_argument("is_fibbinary: negative input");
  return (w & (w >> 1)) == 0;
}

FibbinaryStream::FibbinaryStream(const Nat& start_rank)
    : rank_(start_rank), word_(fib_map(start_rank).value()) {}

FibWord FibbinaryStream::next() {
  FibWord out(FibWord::Trusted{}, word_);
  // Add one in Zeckendorf-index space. Bit p holds the digit of F_{p+2}.
  // Adding F_2 either lands in an empty slot or starts a carry chain of
  // pair merges F_c + F_{c+1} = F_{c+2}; each merge clears a bit it never
  // revisits, so the cost is amortized O(1) per step.
  if (!mp::bit_test(word_, 0) && !mp::bit_test(word_, 1)) {
    mp::bit_set(word_, 0);
  } else {
    unsigned c;
    if (mp::bit_test(word_, 0)) {
      mp::bit_unset(word_, 0);  // F_2 + F_2 = F_3: carry into position 1
      c = 1;
    } else {
      mp::bit_unset(word_, 1);  // F_2 + F_3 = F_4: carry into position 2
      c = 2;
    }
    while (mp::bit_test(word_, c + 1)) {
      mp::bit_unset(word_, c + 1);  // F_{c+2} collides again, keep merging
      c += 2;
    }
    mp::bit_set(word_, c);
  }
  ++rank_;
  return out;
}

}  // namespace fibzeck
