#include <random>

#include "doctest.h"
#include "relheight/error.hpp"
#include "relheight/heights.hpp"
#include "relheight/rootcert.hpp"

using namespace relheight;

namespace {

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
const char* kLehmerM = "1.176280818259917506544070338474035050693415806564";

// |x - y| <= tol for some x in a
bool near(const Interval& a, const Real& y, double tol) {
  Real t(tol, 64);
  return a.lo() - t <= y && y <= a.hi() + t;
}

}  // namespace

TEST_CASE("Lehmer's polynomial") {
  Interval m = mahler_measure(kLehmer, 256);
  CHECK(near(m, Real::parse(kLehmerM, 300), 1e-45));
  CHECK(m.width() <= Real(1e-40, 64));
  // Eight roots on the contour slow the quadrature down to first order.
  Interval j = jensen_integral_check(kLehmer, 1 << 14, 5e-3);
  CHECK(near(j, m.mid(), 5e-3));
}

TEST_CASE("Mahler measure basics") {
  CHECK(mahler_measure(IntPolynomial{-2, 0, 1}).contains(Real(2L, 64)));
  CHECK(mahler_measure(IntPolynomial{-1, -1, 1}).contains((Real(1L, 200) + sqrt(Real(5L, 200))) / 2L));
  Interval c = mahler_measure(cyclotomic(30) * IntPolynomial::monomial(1, 3));
  CHECK(c.is_point());
  CHECK(c.lo() == Real(1L, 64));
  // Content and repeated factors are multiplicative.
  Interval m = mahler_measure(pow(IntPolynomial{-3, 0, 1}, 2) * mpz_class(-5));
  CHECK(m.contains(Real(45L, 64)));
  CHECK(mahler_measure(IntPolynomial{7}).contains(Real(7L, 64)));
  CHECK_THROWS_AS(mahler_measure(IntPolynomial()), Error);
}

TEST_CASE("Salem roots on the unit circle are handled") {
  // x^4 - x^3 - x^2 - x + 1 has two roots on |z| = 1 that are not roots of unity.
  IntPolynomial salem{1, -1, -1, -1, 1};
  Interval m = mahler_measure(salem, 128);
  Interval j = jensen_integral_check(salem, 1 << 14, 5e-3);
  CHECK(near(j, m.mid(), 5e-3));
  CHECK(m.lo() > Real(1.7, 64));
  CHECK(m.width() / m.lo() <= ldexp(Real(1L, 64), -64));
}

TEST_CASE("Mahler measure agrees with Jensen quadrature on random inputs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-6, 6);
  int conclusive = 0;
  for (int it = 0; it < 100; ++it) {
    std::vector<mpz_class> c(2 + it % 11);
    for (auto& x : c) x = dist(rng);
    if (c.back() == 0) c.back() = 1;
    IntPolynomial p(c);
    Interval m = mahler_measure(p, 128);
    CHECK(m.hi() >= Real(1L, 64));
    // The quadrature needs the cyclotomic part removed; it contributes 1 anyway.
    IntPolynomial rest = split_cyclotomic(p).rest;
    if (rest.degree() < 1) continue;
    try {
      Interval j = jensen_integral_check(rest, 1 << 14, 1e-3);
      Real tol = m.hi() * Real(1e-3, 64);
      CHECK(m.lo() - tol <= j.hi());
      CHECK(j.lo() <= m.hi() + tol);
      ++conclusive;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InconclusiveCheck);
    }
  }
  CHECK(conclusive >= 90);
}

TEST_CASE("Jensen check is inconclusive near the unit circle") {
  // Root at exactly 1 is a log singularity on the contour.
  CHECK_THROWS_AS(jensen_integral_check(IntPolynomial{-1, 1} * IntPolynomial{-3, 1}, 8, 1e-12), Error);
}

TEST_CASE("Weil height") {
  Interval h = weil_height(IntPolynomial{-2, 0, 1});
  CHECK(near(h, log(Real(2L, 200)) / 2L, 1e-35));
  CHECK(weil_height(cyclotomic(12)).is_point());
  CHECK(weil_height(IntPolynomial{0, 1}).hi().is_zero());
  CHECK(weil_height(IntPolynomial{1, 1}).hi().is_zero());
  Interval l = weil_height(kLehmer, 256);
  CHECK(near(l, log(Real::parse(kLehmerM, 300)) / 10L, 1e-45));
}

TEST_CASE("root_of_unity_order") {
  CHECK(root_of_unity_order(IntPolynomial{-1, 1}) == 1u);
  CHECK(root_of_unity_order(IntPolynomial{1, 1}) == 2u);
  CHECK(root_of_unity_order(IntPolynomial{1, 0, 1}) == 4u);
  CHECK(root_of_unity_order(cyclotomic(9)) == 9u);
  CHECK_FALSE(root_of_unity_order(kLehmer).has_value());
}

TEST_CASE("power_minpoly") {
  CHECK(power_minpoly(IntPolynomial{-2, 0, 1}, 2) == IntPolynomial{-2, 1});
  CHECK(power_minpoly(IntPolynomial{1, 0, 1}, 2) == IntPolynomial{1, 1});
  CHECK(power_minpoly(IntPolynomial{1, 0, 1}, 4) == IntPolynomial{-1, 1});
  CHECK(power_minpoly(IntPolynomial{-2, 0, 0, 1}, 3) == IntPolynomial{-2, 1});
  CHECK(power_minpoly(IntPolynomial{-1, -1, 1}, 2) == IntPolynomial{1, -3, 1});
  // h(a^k) = k h(a)
  Interval h1 = weil_height(kLehmer);
  Interval h3 = weil_height(power_minpoly(kLehmer, 3));
  CHECK(h3.overlaps(h1 * Interval::from_long(3, 160)));
}
