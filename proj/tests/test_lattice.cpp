#include <random>

#include "doctest.h"
#include "relheight/lattice.hpp"

using namespace relheight;

namespace {

// Exact Gram-Schmidt squared norms via rational arithmetic.
std::vector<mpq_class> gso_norms(const ZMatrix& b, QMatrix& mu) {
  const size_t n = b.size();
  QMatrix bs(n);
  std::vector<mpq_class> B(n);
  mu.assign(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i) {
    bs[i].assign(b[i].begin(), b[i].end());
    for (size_t j = 0; j < i; ++j) {
      mpq_class s = 0;
      for (size_t c = 0; c < b[i].size(); ++c) s += mpq_class(b[i][c]) * bs[j][c];
      mu[i][j] = s / B[j];
      for (size_t c = 0; c < b[i].size(); ++c) bs[i][c] -= mu[i][j] * bs[j][c];
    }
    B[i] = 0;
    for (const auto& x : bs[i]) B[i] += x * x;
  }
  return B;
}

}  // namespace

TEST_CASE("LLL output satisfies size reduction and the Lovasz condition") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int trial = 0; trial < 20; ++trial) {
    const size_t n = 2 + trial % 6;
    ZMatrix b(n, std::vector<mpz_class>(n + 1));
    for (auto& row : b)
      for (auto& x : row) x = dist(rng);
    ZMatrix orig = b;
    lll_reduce(b);
    QMatrix mu;
    std::vector<mpq_class> B = gso_norms(b, mu);
    for (size_t i = 1; i < n; ++i) {
      for (size_t j = 0; j < i; ++j) CHECK(abs(mu[i][j]) <= mpq_class(1, 2));
      CHECK(B[i] >= (mpq_class(99, 100) - mu[i][i - 1] * mu[i][i - 1]) * B[i - 1]);
    }
    // Same lattice: identical Hermite normal forms.
    CHECK(hermite_normal_form(b) == hermite_normal_form(orig));
  }
}

TEST_CASE("LLL finds a small integer relation") {
  // log 2, log 3, log 6 scaled: relation (1, 1, -1).
  const mpz_class S("100000000000000000000");
  ZMatrix b = {{1, 0, 0, mpz_class("69314718055994530942")},
               {0, 1, 0, mpz_class("109861228866810969140")},
               {0, 0, 1, mpz_class("179175946922805500081")}};
  lll_reduce(b);
  std::vector<mpz_class> r(b[0].begin(), b[0].begin() + 3);
  if (r[0] < 0)
    for (auto& x : r) x = -x;
  CHECK(r == std::vector<mpz_class>{1, 1, -1});
  (void)S;
}

TEST_CASE("Hermite normal form") {
  ZMatrix a = {{2, -2}, {4, -4}, {0, 3}};
  ZMatrix h = hermite_normal_form(a);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == std::vector<mpz_class>{2, 1});
  CHECK(h[1] == std::vector<mpz_class>{0, 3});
  CHECK(hermite_normal_form({{0, 0}}).empty());
}

TEST_CASE("rational linear algebra") {
  QMatrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  QMatrix ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    mpq_class s = 0;
    for (size_t i = 0; i < 3; ++i) s += row[i] * ns[0][i];
    CHECK(s == 0);
  }
  std::vector<mpq_class> x;
  CHECK(solve(m, {6, 12, 2}, x));
  CHECK(x[0] + 2 * x[1] + 3 * x[2] == 6);
  CHECK_FALSE(solve(m, {1, 1, 1}, x));
}
