#pragma once
// numeric.hpp - arbitrary-precision integer aliases and small helpers shared
// by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fibzeck {

// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

// Same storage as Int; kept nonnegative by the operations that produce it.
using Nat = Int;

// -1, 0 or +1.
inline int sign_of(const Int& x) noexcept { return x.sign(); }

// Floor division: the largest q with q*d <= n. d must be nonzero.
Int floor_div(const Int& n, const Int& d);

// Number of bits in the binary expansion of n >= 0 (0 for n == 0).
std::uint64_t bit_length(const Nat& n);

// Binary expansion of n >= 0, most significant bit first ("0" for n == 0).
std::string to_binary(const Nat& n);

}  // namespace fibzeck
