#pragma once

// Dense polynomials over F_p for odd primes p < 2^31. Used internally by the
// Zassenhaus factorizer and by the splitting-type witnesses in numfield.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "relheight/exactpoly.hpp"

namespace relheight::modp {

using Poly = std::vector<std::uint64_t>;

class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const mpz_class& z) const;
  // Reduce a rational; nullopt if the denominator vanishes mod p.
  std::optional<std::uint64_t> reduce(const mpq_class& q) const;

  void trim(Poly& a) const;
  Poly reduce(const IntPolynomial& f) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, std::uint64_t c) const;
  // Quotient and remainder; b must be nonzero.
  std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const;
  Poly rem(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
  Poly monic(const Poly& a) const;
  Poly gcd(Poly a, Poly b) const;
  // (g, s, t) with s*a + t*b = g monic.
  struct Xgcd { Poly g, s, t; };
  Xgcd xgcd(const Poly& a, const Poly& b) const;
  Poly derivative(const Poly& a) const;
  Poly powmod(Poly base, std::uint64_t e, const Poly& mod) const;
  bool is_squarefree(const Poly& a) const;

  // Monic irreducible factors of a squarefree polynomial of degree >= 1.
  std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = 1) const;
  // Degrees of the irreducible factors (distinct-degree only, no splitting).
  std::vector<int> factor_degrees(const Poly& f) const;
  // Roots in F_p of a squarefree polynomial.
  std::vector<std::uint64_t> roots(const Poly& f) const;

 private:
  std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) const;
  void equal_degree(const Poly& f, int d, std::uint64_t& state, std::vector<Poly>& out) const;

  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);
// Odd primes in increasing order, starting after `after`.
std::uint64_t next_prime(std::uint64_t after);

}  // namespace relheight::modp
