#include "fibzeck/numeric.hpp"

#include <stdexcept>

namespace fibzeck {

namespace mp = boost::multiprecision;

Int floor_div(const Int& n, const Int& d) {
  if (d == 0) throw std::domain_error("floor_div: division by zero");
  Int q, r;
  mp::divide_qr(n, d, q, r);
  // cpp_int division truncates toward zero; shift down when signs disagree.
  if (r != 0 && (r < 0) != (d < 0)) --q;
  return q;
}

std::uint64_t bit_length(const Nat& n) {
  if (n < 0) throw std::domain_error("bit_length: negative input");
  if (n == 0) return 0;
  return static_cast<std::uint64_t>(mp::msb(n)) + 1;
}

std::string to_binary(const Nat& n) {
  if (n < 0) throw std::domain_error("to_binary: negative input");
  if (n == 0) return "0";
  const std::uint64_t width = bit_length(n);
  std::string out(width, '0');
  for (std::uint64_t p = 0; p < width; ++p) {
    if (mp::bit_test(n, static_cast<unsigned>(p))) out[width - 1 - p] = '1';
  }
  return out;
}

}  // namespace fibzeck
