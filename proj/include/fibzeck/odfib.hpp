#pragma once
// odfib.hpp - odd fibbinary numbers: enumeration by rank, the map Z sending
// the rank of an odd fibbinary number to its rank among all fibbinary
// numbers (recursive and closed form), and a brute-force verifier for the
// identity Z(n) = floor(n * phi^2) - 1.

#include "fibzeck/fibcore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fibzeck {

// The n-th odd fibbinary number, n >= 1. Built by peeling Fibonacci terms:
// odfib(1) = 1 and odfib(F_m + k) = 2^m + odfib(k) for 1 <= k <= F_{m-1}.
FibWord odfib(const Nat& n);

// One verified rank: the n-th odd fibbinary number w and its rank j among
// all fibbinary numbers, so fib_map(j) == w.
struct OdfibRecord {
  Nat n;
  FibWord w;
  Nat j;
};

// Record for rank n >= 1: w = odfib(n), j = fib_unmap(w).
OdfibRecord odfib_record(const Nat& n);

// The rank n with odfib(n) == w; w must be odd (throws std::domain_error
// otherwise). Each set bit p >= 2 contributes F_p, plus 1 for the low bit.
Nat odfib_inverse(const FibWord& w);

// Z(n) = fib_unmap(odfib(n)) computed by the peeling recurrence alone:
// Z(1) = 1 and Z(F_m + k) = F_{m+2} + Z(k) for 1 <= k <= F_{m-1}.
Nat z_recursive(const Nat& n);

// Z(n) by the closed form floor(n * phi^2) - 1, evaluated exactly in Z[tau].
Nat z_closed(const Nat& n);

// Details of the first disagreement found by verify_theorem.
struct VerifyMismatch {
  Nat rank;           // lowest rank at which something disagreed
  Nat scan_word;      // rank-th odd fibbinary number found by the raw scan
  Nat odfib_word;     // what odfib() claims it is
  Nat scan_fib_rank;  // fib_unmap of the scanned word
  Nat z_rec;          // z_recursive at that rank
  Nat z_cls;          // z_closed at that rank
};

struct VerifyReport {
  bool ok = true;
  // Number of ranks confirmed, counting up from 1 without gaps.
  Nat ranks_verified;
  std::optional<VerifyMismatch> mismatch;

  std::string describe() const;
};

// Brute-force check of ranks 1..n_max: scan the odd integers in order, keep
// the fibbinary ones, and at the n-th confirm that the scanned word equals
// odfib(n) and that fib_unmap, z_recursive and z_closed all agree on its
// rank. shards > 1 splits the rank range across that many worker threads;
// shard results merge by conjunction, reporting the lowest-rank mismatch.
// Returns rather than throws on mismatch. n_max >= 1.
VerifyReport verify_theorem(const Nat& n_max, unsigned shards = 1);

enum class SeqKind { zeck, fib, odfib, z };

// One emitted row. Every row has an associated fibbinary word: `binary` is
// that word's binary expansion (equivalently the Zeckendorf digit string of
// its rank, largest index first), `zeck_indices` lists the Fibonacci indices
// of the set digits in decreasing order, and `odfib_rank` is the word's rank
// among the odd fibbinary numbers when it is odd.
struct SequenceRecord {
  Nat rank;
  Nat value;
  std::string binary;
  std::vector<std::uint64_t> zeck_indices;
  std::optional<Nat> odfib_rank;
};

// `count` consecutive records starting at rank `from` >= 1. The word behind
// row n is fib_map(n) for kinds zeck/fib and odfib(n) for kinds odfib/z; the
// value column is n itself (zeck), the word (fib, odfib), or the word's rank
// among all fibbinary numbers (z).
std::vector<SequenceRecord> sequence_emit(SeqKind kind, const Nat& from,
                                          std::uint64_t count);

}  // namespace fibzeck
