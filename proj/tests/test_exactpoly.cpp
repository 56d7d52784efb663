#include <random>
#include <set>

#include "doctest.h"
#include "relheight/error.hpp"
#include "relheight/exactpoly.hpp"

using namespace relheight;

namespace {

// Sylvester determinant by fraction-free Bareiss elimination.
mpz_class sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q) {
  const int m = p.degree(), n = q.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = p.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = q.coeff(n - j);
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < N && a[r][k] == 0) ++r;
      if (r == N) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[N - 1][N - 1];
}

// Graeffe iteration: for monic p with p(0) != 0 all roots are roots of unity
// iff the iterates revisit a polynomial (coefficients stay bounded).
bool graeffe_kronecker(IntPolynomial p) {
  p = p.shift_down(p.x_valuation());
  if (p.degree() == 0) return abs(p.coeff(0)) == 1;
  if (abs(p.leading()) != 1 || abs(p.coeff(0)) != 1) return false;
  if (p.leading() < 0) p = -p;
  const int d = p.degree();
  std::set<std::vector<mpz_class>> seen;
  for (int step = 0; step < 200; ++step) {
    for (int k = 0; k <= d; ++k) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), d, k);
      if (abs(p.coeff(k)) > b) return false;
    }
    if (!seen.insert(p.coeffs()).second) return true;
    std::vector<mpz_class> e, o;
    for (int k = 0; k <= d; ++k) (k % 2 == 0 ? e : o).push_back(p.coeff(k));
    IntPolynomial E(e), O(o);
    // p(x) = E(x^2) + x O(x^2); graeffe = E(y)^2 - y O(y)^2, sign-normalized
    IntPolynomial g = E * E - IntPolynomial::x() * O * O;
    if (g.leading() < 0) g = -g;
    p = g;
  }
  return false;
}

IntPolynomial random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<mpz_class> c(deg + 1);
  for (auto& x : c) x = dist(rng);
  if (c[deg] == 0) c[deg] = 1;
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("content and primitive part keep the sign on the primitive part") {
  auto [c, p] = content_and_primitive(IntPolynomial{6, 0, -6});
  CHECK(c == 6);
  CHECK(p == IntPolynomial{1, 0, -1});
  auto [c2, p2] = content_and_primitive(IntPolynomial{4, -2});
  CHECK(c2 == 2);
  CHECK(p2 == IntPolynomial{2, -1});
  CHECK_THROWS_AS(content_and_primitive(IntPolynomial()), Error);
}

TEST_CASE("resultant convention and small values") {
  CHECK(resultant(IntPolynomial{-2, 1}, IntPolynomial{-3, 1}) == -1);
  CHECK(resultant(IntPolynomial{-2, 0, 1}, IntPolynomial{-3, 0, 1}) == 1);
  IntPolynomial p{1, -3, 0, 2, 1};
  CHECK(resultant(p, p) == 0);
  CHECK(resultant(IntPolynomial{5}, IntPolynomial{1, 1, 1}) == 25);
  CHECK(resultant(IntPolynomial{1, 1, 1}, IntPolynomial{5}) == 25);
}

TEST_CASE("resultant matches a Sylvester determinant") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    IntPolynomial p = random_poly(rng, 1 + it % 6, 9);
    IntPolynomial q = random_poly(rng, 1 + (it / 6) % 5, 9);
    mpz_class r = resultant(p, q);
    CHECK(r == sylvester_resultant(p, q));
    int sgn = (p.degree() * q.degree()) % 2 ? -1 : 1;
    CHECK(resultant(q, p) == sgn * r);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(IntPolynomial{-2, 0, 1}) == 8);
  CHECK(discriminant(IntPolynomial{1, 0, 1}) == -4);
  CHECK(discriminant(IntPolynomial{-1, -1, 1}) == 5);
  CHECK(discriminant(IntPolynomial{-2, 0, 0, 1}) == -108);
}

TEST_CASE("gcd and squarefree decomposition") {
  IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{2, 1};
  IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{3, 0, 1};
  CHECK(gcd(a * mpz_class(4), b * mpz_class(6)) == IntPolynomial{-1, 1});
  IntPolynomial f = pow(IntPolynomial{-1, 1}, 3) * pow(IntPolynomial{1, 0, 1}, 2) * IntPolynomial{5, 1};
  auto sq = squarefree_decomposition(f * mpz_class(-3));
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].first == IntPolynomial{5, 1});
  CHECK(sq[0].second == 1);
  CHECK(sq[1].first == IntPolynomial{1, 0, 1});
  CHECK(sq[2].first == IntPolynomial{-1, 1});
  CHECK(squarefree_part(f) == IntPolynomial{-1, 1} * IntPolynomial{1, 0, 1} * IntPolynomial{5, 1});
}

TEST_CASE("factor_rationals small cases") {
  FactorList fl = factor_rationals(IntPolynomial{-6, 0, 6});
  CHECK(fl.content == 6);
  CHECK(fl.unit == 1);
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.factors[0].first == IntPolynomial{-1, 1});
  CHECK(fl.factors[1].first == IntPolynomial{1, 1});
  CHECK(fl.expand() == IntPolynomial{-6, 0, 6});

  FactorList x4 = factor_rationals(IntPolynomial{1, 0, 0, 0, 1});
  CHECK(x4.factors.size() == 1);
  FactorList x4m = factor_rationals(IntPolynomial{-1, 0, 0, 0, 1});
  CHECK(x4m.factors.size() == 3);

  FactorList neg = factor_rationals(IntPolynomial{0, 0, 2, -2});
  CHECK(neg.unit == -1);
  CHECK(neg.content == 2);
  CHECK(neg.expand() == IntPolynomial{0, 0, 2, -2});
  CHECK_THROWS_AS(factor_rationals(IntPolynomial::monomial(1, 65) + IntPolynomial{1}), Error);
}

TEST_CASE("factor_rationals reconstructs random products") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    IntPolynomial a = random_poly(rng, 1 + it % 5, 7);
    IntPolynomial b = random_poly(rng, 1 + (it / 5) % 4, 7);
    IntPolynomial c = random_poly(rng, 2, 3);
    IntPolynomial f = a * b * c * (it % 3 == 0 ? a : IntPolynomial{1});
    if (f.is_zero()) continue;
    FactorList fl = factor_rationals(f);
    CHECK(fl.expand() == f);
    for (const auto& [g, e] : fl.factors) {
      CHECK(g.leading() > 0);
      CHECK(content_and_primitive(g).first == 1);
    }
    for (size_t i = 1; i < fl.factors.size(); ++i) CHECK(canonical_less(fl.factors[i - 1].first, fl.factors[i].first));
  }
}

TEST_CASE("factor_rationals on products with many modular factors") {
  // Swinnerton-Dyer style x^4 - 10x^2 + 1 is irreducible but splits mod every p.
  CHECK(is_irreducible(IntPolynomial{1, 0, -10, 0, 1}));
  IntPolynomial f = cyclotomic(15) * cyclotomic(16) * IntPolynomial{1, 0, -10, 0, 1} * IntPolynomial{-2, 0, 0, 1};
  FactorList fl = factor_rationals(f);
  CHECK(fl.factors.size() == 4);
  CHECK(fl.expand() == f);
  IntPolynomial g = IntPolynomial::monomial(1, 48) - IntPolynomial{1};
  FactorList gl = factor_rationals(g);
  CHECK(gl.factors.size() == 10);  // number of divisors of 48
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  CHECK(cyclotomic(105).coeff(7) == -2);
  for (unsigned m = 1; m <= 200; ++m) {
    IntPolynomial phi = cyclotomic(m);
    CHECK(static_cast<std::uint64_t>(phi.degree()) == euler_phi(m));
    CHECK(divide_exact(IntPolynomial::monomial(1, m) - IntPolynomial{1}, phi).has_value());
  }
}

TEST_CASE("euler_phi agrees with a sieve up to 1e5") {
  const std::uint64_t N = 100000;
  std::vector<std::uint64_t> phi(N + 1);
  for (std::uint64_t i = 0; i <= N; ++i) phi[i] = i;
  for (std::uint64_t i = 2; i <= N; ++i)
    if (phi[i] == i)
      for (std::uint64_t j = i; j <= N; j += i) phi[j] -= phi[j] / i;
  bool all = true;
  for (std::uint64_t n = 1; n <= N; ++n) all = all && euler_phi(n) == phi[n];
  CHECK(all);
}

TEST_CASE("kronecker_test agrees with the Graeffe oracle") {
  CHECK(kronecker_test(IntPolynomial{1, 0, -1, 0, 1}));
  CHECK(kronecker_test(IntPolynomial{0, 0, -1, 1}));
  CHECK(kronecker_test(IntPolynomial{0, 0, -1}));
  CHECK_FALSE(kronecker_test(IntPolynomial{-2, 0, 1}));
  CHECK_FALSE(kronecker_test(IntPolynomial{-1, 1, 0, -1, 1, 0, -1, 1, 0, 1, 1}.reversed() * IntPolynomial{1}));
  IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  CHECK_FALSE(kronecker_test(lehmer));
  CHECK_FALSE(graeffe_kronecker(lehmer));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 150; ++it) {
    IntPolynomial p = random_poly(rng, 2 + it % 7, 1);
    if (p.coeff(0) == 0) p += IntPolynomial{1};
    p = IntPolynomial(p.coeffs());
    if (it % 2 == 0) p = cyclotomic(1 + it % 30) * cyclotomic(1 + (it / 3) % 24);
    CHECK(kronecker_test(p) == graeffe_kronecker(p));
  }
  CHECK(cyclotomic_index(cyclotomic(60)) == 60u);
  CHECK(cyclotomic_index(-cyclotomic(7)) == 7u);
  CHECK_FALSE(cyclotomic_index(IntPolynomial{-2, 0, 1}).has_value());
}

TEST_CASE("split_cyclotomic") {
  IntPolynomial f = IntPolynomial::monomial(3, 2) * pow(cyclotomic(6), 2) * cyclotomic(5) * IntPolynomial{-2, 0, 1};
  CyclotomicSplit s = split_cyclotomic(f);
  CHECK(s.x_power == 2);
  REQUIRE(s.cyclotomic.size() == 2);
  CHECK(s.cyclotomic[0] == std::pair<unsigned, int>{5, 1});
  CHECK(s.cyclotomic[1] == std::pair<unsigned, int>{6, 2});
  CHECK(s.rest == IntPolynomial{-6, 0, 3});
}

TEST_CASE("rational polynomials") {
  RatPolynomial a = RatPolynomial::from_coeffs({mpq_class(1, 2), mpq_class(3, 4)});
  CHECK(a.denominator() == 4);
  CHECK(a.numerator() == IntPolynomial{2, 3});
  RatPolynomial b(IntPolynomial{-1, 0, 1});
  auto [q, r] = divrem(b, a);
  CHECK((q * a + r) == b);
  CHECK(r.degree() < a.degree());
  CHECK(IntPolynomial{-2, 0, 1}.eval(mpq_class(3, 2)) == mpq_class(1, 4));
}
