#pragma once
// quadgold.hpp - exact arithmetic in Z[tau], where tau = (sqrt(5) - 1) / 2
// is the golden ratio conjugate. tau satisfies tau^2 = 1 - tau, and the
// golden ratio itself is phi = 1 + tau. Every quantity is an integer pair
// (a, b) denoting a + b*tau; there is no floating point anywhere.

#include "fibzeck/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace fibzeck {

// Element a + b*tau of Z[tau]. 1 and tau are linearly independent over the
// rationals, so the representation is unique and equality is coordinatewise.
struct GoldenNum {
  Int a;  // coefficient of 1
  Int b;  // coefficient of tau

  GoldenNum() = default;
  GoldenNum(Int unit, Int tau_coeff)
      : a(std::move(unit)), b(std::move(tau_coeff)) {}

  static GoldenNum tau() { return {0, 1}; }
  static GoldenNum phi() { return {1, 1}; }      // phi = 1 + tau
  static GoldenNum phi_sq() { return {2, 1}; }   // phi^2 = 2 + tau

  friend GoldenNum operator+(const GoldenNum& x, const GoldenNum& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend GoldenNum operator-(const GoldenNum& x, const GoldenNum& y) {
    return {x.a - y.a, x.b - y.b};
  }
  GoldenNum operator-() const { return {-a, -b}; }

  // (a1 + b1 t)(a2 + b2 t) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 - b1 b2) t,
  // by reducing t^2 to 1 - t.
  friend GoldenNum operator*(const GoldenNum& x, const GoldenNum& y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }

  friend bool operator==(const GoldenNum& x, const GoldenNum& y) {
    return x.a == y.a && x.b == y.b;
  }
};

// Integer square root: the largest s >= 0 with s*s <= n. Newton iteration
// plus a final correction step; exact for any size. Throws std::domain_error
// for n < 0.
Nat isqrt(const Nat& n);

// Exact sign (-1, 0, +1) of a + b*tau.
int sign(const GoldenNum& x);

// Exact floor of a + b*tau.
Int floor(const GoldenNum& x);

// Fractional part x - floor(x); lies in [0, 1).
GoldenNum frac(const GoldenNum& x);

// tau^n, exactly: tau^n = (-1)^n (F_{n-1} - F_n tau), with F_{-1} = 1.
GoldenNum tau_pow(std::uint64_t n);

// floor(n * phi) for n >= 0.
Nat floor_n_phi(const Nat& n);

// floor(n * phi^2) for n >= 0; equals floor(n * phi) + n since phi^2 = phi + 1.
Nat floor_n_phi_sq(const Nat& n);

// "a + b*tau" rendering for diagnostics.
std::string to_string(const GoldenNum& x);

}  // namespace fibzeck
