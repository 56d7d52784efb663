#pragma once

// Mahler measure and absolute logarithmic Weil height with certified
// interval output.

#include <optional>

#include "relheight/exactpoly.hpp"
#include "relheight/mpreal.hpp"
#include "relheight/rootcert.hpp"

namespace relheight {

struct AlgebraicNumber {
  IntPolynomial minpoly;  // primitive, irreducible, positive leading coefficient
  ComplexBox root;        // which conjugate

  int degree() const { return minpoly.degree(); }
};

// Conjugate number `index` (canonical root order) of the irreducible p.
// Throws not a field when p is reducible.
AlgebraicNumber make_algebraic(const IntPolynomial& p, size_t index = 0, long bits = kDefaultPrecision);
AlgebraicNumber make_rational(const mpq_class& q);
// All conjugates of the irreducible p in canonical order.
std::vector<AlgebraicNumber> conjugates(const IntPolynomial& p, long bits = kDefaultPrecision);

// M(p) = |lc(p)| prod max(1, |a|) over the roots with multiplicity.
// Cyclotomic and x^k factors contribute exactly 1. The relative width is at
// most 2^(-bits/2).
Interval mahler_measure(const IntPolynomial& p, long bits = kDefaultPrecision);

// Independent estimate of M(p) from Jensen's formula by offset midpoint
// quadrature with N nodes; the error is estimated from the N/2 rule. Throws
// inconclusive check when the estimate exceeds `tolerance` (relative).
Interval jensen_integral_check(const IntPolynomial& p, int N = 1 << 14, double tolerance = 1e-6);

// h(a) = log M(m) / deg m for the minimal polynomial m. Exactly [0, 0] when
// m passes kronecker_test, including m = x (the height of 0 is taken as 0).
Interval weil_height(const IntPolynomial& minpoly, long bits = kDefaultPrecision);
inline Interval weil_height(const AlgebraicNumber& a, long bits = kDefaultPrecision) {
  return weil_height(a.minpoly, bits);
}

// Order of a root of unity with the given minimal polynomial.
std::optional<unsigned> root_of_unity_order(const IntPolynomial& minpoly);
inline std::optional<unsigned> root_of_unity_order(const AlgebraicNumber& a) { return root_of_unity_order(a.minpoly); }

// Minimal polynomial of a^k: the squarefree part of Res_y(m(y), x - y^k),
// primitive with positive leading coefficient. Requires m irreducible.
IntPolynomial power_minpoly(const IntPolynomial& minpoly, unsigned k);

}  // namespace relheight
