#include "fibzeck/odfib.hpp"

#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fibzeck/quadgold.hpp"

namespace fibzeck {

namespace mp = boost::multiprecision;

namespace {

// Sliding window (m, F_m, F_{m+1}) over the Fibonacci sequence, m >= 2.
struct FibWindow {
  std::uint64_t m = 2;
  Nat fm = 1;   // F_2
  Nat fm1 = 2;  // F_3
};

// Positions the window so that F_m < n <= F_{m+1}; requires n >= 2.
FibWindow window_below(const Nat& n) {
  FibWindow w;
  while (w.fm1 < n) {
    Nat t = w.fm + w.fm1;
    w.fm.swap(w.fm1);
    w.fm1 = std::move(t);
    ++w.m;
  }
  return w;
}

void step_down(FibWindow& w) {
  Nat t = w.fm1 - w.fm;
  w.fm1.swap(w.fm);
  w.fm = std::move(t);
  --w.m;
}

unsigned checked_bit_pos(std::uint64_t p) {
  if (p > std::numeric_limits<unsigned>::max())
    throw std::overflow_error("fibbinary word would exceed addressable bits");
  return static_cast<unsigned>(p);
}

}  // namespace

FibWord odfib(const Nat& n) {
  if (n < 1) throw std::domain_error("odfib: rank must be >= 1");
  Nat word = 0;
  if (n > 1) {
    // Peel: n = F_m + k with F_m < n <= F_{m+1}, hence 1 <= k <= F_{m-1},
    // and odfib(F_m + k) = 2^m + odfib(k). Iterate until k = 1.
    FibWindow w = window_below(n);
    Nat rem = n;
    while (true) {
      mp::bit_set(word, checked_bit_pos(w.m));
      rem -= w.fm;
      if (rem == 1) break;
      while (w.fm >= rem) step_down(w);
    }
  }
  mp::bit_set(word, 0);  // odfib(1) = 1, the seed of every peel
  return FibWord(FibWord::Trusted{}, std::move(word));
}

OdfibRecord odfib_record(const Nat& n) {
  OdfibRecord rec;
  rec.n = n;
  rec.w = odfib(n);
  rec.j = fib_unmap(rec.w);
  return rec;
}

Nat odfib_inverse(const FibWord& w) {
  if (!w.is_odd()) throw std::domain_error("odfib_inverse: word must be odd");
  // Run the peeling backwards: the trailing 1 is odfib(1) and every higher
  // set bit 2^p contributes F_p. (Oddness plus the fibbinary invariant
  // leave bit 1 clear, so all contributing bits sit at p >= 2.)
  Nat n = 1;
  const Nat& v = w.value();
  const unsigned top = mp::msb(v);
  Nat fa = 1, fb = 2;  // F_p, F_{p+1} at p = 2
  for (unsigned p = 2; p <= top; ++p) {
    if (mp::bit_test(v, p)) n += fa;
    Nat t = fa + fb;
    fa.swap(fb);
    fb = std::move(t);
  }
  return n;
}

Nat z_recursive(const Nat& n) {
  if (n < 1) throw std::domain_error("z_recursive: rank must be >= 1");
  // Mirror odfib's peel, accumulating F_{m+2} = F_m + F_{m+1} per term.
  Nat acc = 1;  // Z(1) = 1
  if (n > 1) {
    FibWindow w = window_below(n);
    Nat rem = n;
    while (true) {
      acc += w.fm + w.fm1;
      rem -= w.fm;
      if (rem == 1) break;
      while (w.fm >= rem) step_down(w);
    }
  }
  return acc;
}

Nat z_closed(const Nat& n) {
  if (n < 1) throw std::domain_error("z_closed: rank must be >= 1");
  return floor_n_phi_sq(n) - 1;
}

namespace {

// Verifies ranks lo..hi-1 against the raw odd-integer scan; 1 <= lo < hi.
VerifyReport scan_ranks(const Nat& lo, const Nat& hi) {
  VerifyReport rep;
  rep.ranks_verified = 0;
  Nat n;  // rank of the word under the cursor
  Nat w;  // scan cursor, always odd
  if (lo == 1) {
    n = 0;
    w = -1;  // first candidate becomes 1
  } else {
    n = lo - 1;
    w = odfib(n).value();
  }
  const Nat last = hi - 1;
  while (n < last) {
    do {
      w += 2;
    } while ((w & (w >> 1)) != 0);  // skip words with adjacent set bits
    ++n;
    const Nat claimed = odfib(n).value();
    const Nat scanned_rank = fib_unmap(FibWord(w));
    const Nat zr = z_recursive(n);
    const Nat zc = z_closed(n);
    if (claimed != w || scanned_rank != zr || zr != zc) {
      rep.ok = false;
      rep.mismatch = VerifyMismatch{n, w, claimed, scanned_rank, zr, zc};
      return rep;
    }
    ++rep.ranks_verified;
  }
  return rep;
}

}  // namespace

VerifyReport verify_theorem(const Nat& n_max, unsigned shards) {
  if (n_max < 1) throw std::domain_error("verify_theorem: n_max must be >= 1");
  if (shards < 1) shards = 1;
  if (n_max < shards) shards = static_cast<unsigned>(n_max);
  if (shards == 1) return scan_ranks(1, n_max + 1);

  // Split [1, n_max] into near-equal rank ranges; each worker re-seeds its
  // own scan cursor from odfib(lo - 1).
  std::vector<std::future<VerifyReport>> futures;
  futures.reserve(shards);
  const Nat base = n_max / shards;
  const Nat extra = n_max % shards;
  Nat lo = 1;
  for (unsigned s = 0; s < shards; ++s) {
    Nat len = base + (Nat(s) < extra ? 1 : 0);
    Nat hi = lo + len;
    futures.push_back(std::async(
        std::launch::async,
        [lo, hi]() { return scan_ranks(lo, hi); }));
    lo = std::move(hi);
  }

  // Conjunction merge: count the gap-free verified prefix and surface the
  // lowest-rank mismatch (shards were launched in rank order).
  VerifyReport merged;
  merged.ranks_verified = 0;
  for (auto& f : futures) {
    VerifyReport part = f.get();
    if (merged.mismatch) continue;  // already failed at a lower rank
    merged.ranks_verified += part.ranks_verified;
    if (!part.ok) {
      merged.ok = false;
      merged.mismatch = std::move(part.mismatch);
    }
  }
  return merged;
}

std::string VerifyReport::describe() const {
  if (ok) return "verified " + ranks_verified.str() + " ranks";
  std::ostringstream os;
  const VerifyMismatch& m = *mismatch;
  os << "mismatch at rank " << m.rank.str() << ": scan found "
     << m.scan_word.str() << " but odfib says " << m.odfib_word.str()
     << "; fib rank of scanned word " << m.scan_fib_rank.str()
     << ", z_recursive " << m.z_rec.str() << ", z_closed " << m.z_cls.str();
  return os.str();
}

namespace {

SequenceRecord make_record(SeqKind kind, Nat rank, const FibWord& w) {
  SequenceRecord rec;
  switch (kind) {
    case SeqKind::zeck:
      rec.value = rank;
      break;
    case SeqKind::fib:
    case SeqKind::odfib:
      rec.value = w.value();
      break;
    case SeqKind::z:
      rec.value = fib_unmap(w);
      break;
  }
  rec.rank = std::move(rank);
  rec.binary = to_binary(w.value());
  if (w.value() > 0) {
    for (unsigned p = mp::msb(w.value()) + 1; p-- > 0;) {
      if (mp::bit_test(w.value(), p)) rec.zeck_indices.push_back(p + 2ull);
    }
  }
  if (w.is_odd()) rec.odfib_rank = odfib_inverse(w);
  return rec;
}

}  // namespace

std::vector<SequenceRecord> sequence_emit(SeqKind kind, const Nat& from,
                                          std::uint64_t count) {
  if (from < 1) throw std::domain_error("sequence_emit: from must be >= 1");
  std::vector<SequenceRecord> out;
  out.reserve(count);
  if (kind == SeqKind::zeck || kind == SeqKind::fib) {
    FibbinaryStream stream(from);
    for (std::uint64_t i = 0; i < count; ++i) {
      Nat rank = stream.rank();
      out.push_back(make_record(kind, std::move(rank), stream.next()));
    }
  } else {
    Nat rank = from;
    for (std::uint64_t i = 0; i < count; ++i, ++rank) {
      out.push_back(make_record(kind, rank, odfib(rank)));
    }
  }
  return out;
}

}  // namespace fibzeck
