#include "fibzeck/quadgold.hpp"

#include <stdexcept>

#include "fibzeck/fibcore.hpp"

namespace fibzeck {

namespace mp = boost::multiprecision;

Nat isqrt(const Nat& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  if (n < 2) return n;
  // Start from a power of two strictly above sqrt(n); Newton steps then
  // decrease monotonically until they land next to the root.
  Nat x = Nat(1) << (mp::msb(n) / 2 + 1);
  while (true) {
    Nat y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  // Truncating division can leave x off by one in either direction; settle
  // on the exact floor. Each loop runs at most a step or two.
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

int sign(const GoldenNum& x) {
  // a + b*tau = (u + b*sqrt(5)) / 2 with u = 2a - b. When u and b agree in
  // sign the sum cannot cancel; otherwise compare u^2 against 5 b^2 to
  // decide which term dominates. Equality of the squares is impossible for
  // b != 0 because sqrt(5) is irrational.
  const Int u = 2 * x.a - x.b;
  const int su = sign_of(u);
  const int sb = sign_of(x.b);
  if (su == sb) return su;
  if (su == 0) return sb;
  if (sb == 0) return su;
  return u * u > 5 * x.b * x.b ? su : sb;
}

namespace {

// floor(b * tau) for b > 0. With s = isqrt(5 b^2) = floor(b sqrt(5)),
// floor(b (sqrt(5) - 1) / 2) = floor((s - b) / 2): the discarded fractional
// part of b sqrt(5) is < 1 and cannot carry the halved value past an
// integer boundary, since b sqrt(5) is irrational.
Int floor_tau_multiple_pos(const Int& b) {
  const Nat s = isqrt(5 * b * b);
  return floor_div(s - b, 2);
}

Int floor_tau_multiple(const Int& b) {
  if (b == 0) return 0;
  if (b > 0) return floor_tau_multiple_pos(b);
  // b*tau is irrational for b != 0, so floor(-y) = -floor(y) - 1 exactly.
  return -floor_tau_multiple_pos(-b) - 1;
}

}  // namespace

Int floor(const GoldenNum& x) { return x.a + floor_tau_multiple(x.b); }

GoldenNum frac(const GoldenNum& x) { return x - GoldenNum(floor(x), 0); }

GoldenNum tau_pow(std::uint64_t n) {
  if (n == 0) return {1, 0};
  // tau^n = (-1)^n (F_{n-1} - F_n tau); fibonacci_pair(n-1) = (F_{n-1}, F_n).
  auto [f_prev, f_n] = fibonacci_pair(n - 1);
  if (n % 2 == 0) return {std::move(f_prev), -f_n};
  return {-f_prev, std::move(f_n)};
}

Nat floor_n_phi(const Nat& n) {
  if (n < 0) throw std::domain_error("floor_n_phi: negative input");
  return n + floor_tau_multiple(n);  // phi = 1 + tau
}

Nat floor_n_phi_sq(const Nat& n) {
  if (n < 0) throw std::domain_error("floor_n_phi_sq: negative input");
  return floor_n_phi(n) + n;  // phi^2 = phi + 1
}

std::string to_string(const GoldenNum& x) {
  std::string out = x.a.str();
  if (x.b >= 0) {
    out += " + " + x.b.str() + "*tau";
  } else {
    out += " - " + Int(-x.b).str() + "*tau";
  }
  return out;
}

}  // namespace fibzeck
