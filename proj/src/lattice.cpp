#include "relheight/lattice.hpp"

#include <algorithm>
#include <utility>

#include "relheight/error.hpp"

namespace relheight {

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

// round(a / b) for b > 0
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class twice = 2 * a + b, q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  return q;
}

}  // namespace

void lll_reduce(ZMatrix& b, long delta_num, long delta_den) {
  const size_t n = b.size();
  if (n <= 1) return;
  // 1-based bookkeeping: d[0] = 1, d[i] = Gram determinant of the first i rows,
  // lam[k][j] = d[j+1] * mu_{k,j} (0-based rows).
  std::vector<mpz_class> d(n + 1);
  ZMatrix lam(n, std::vector<mpz_class>(n));
  d[0] = 1;
  size_t k = 1, kmax = 0;
  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: dependent LLL basis");

  auto red = [&](size_t kk, size_t l) {
    // 0-based rows kk and l < kk; divisor d[l+1]
    const mpz_class& dl = d[l + 1];
    mpz_class twice = 2 * abs(lam[kk][l]);
    if (twice <= dl) return;
    mpz_class q = round_div(lam[kk][l], dl);
    for (size_t c = 0; c < b[kk].size(); ++c) mpz_submul(b[kk][c].get_mpz_t(), q.get_mpz_t(), b[l][c].get_mpz_t());
    lam[kk][l] -= q * dl;
    for (size_t i = 0; i < l; ++i) mpz_submul(lam[kk][i].get_mpz_t(), q.get_mpz_t(), lam[l][i].get_mpz_t());
  };

  auto swap = [&](size_t kk) {
    // swap rows kk and kk-1 (0-based)
    std::swap(b[kk], b[kk - 1]);
    for (size_t j = 0; j + 1 < kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    mpz_class l = lam[kk][kk - 1];
    mpz_class B = (d[kk - 1] * d[kk + 1] + l * l) / d[kk];
    for (size_t i = kk + 1; i <= kmax; ++i) {
      mpz_class t = lam[i][kk];
      lam[i][kk] = (d[kk + 1] * lam[i][kk - 1] - l * t) / d[kk];
      lam[i][kk - 1] = (B * t + l * lam[i][kk]) / d[kk + 1];
    }
    d[kk] = B;
  };

  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (size_t j = 0; j <= k; ++j) {
        mpz_class u = dot(b[k], b[j]);
        for (size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k + 1] = u;
          if (u == 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: dependent LLL basis");
        }
      }
    }
    red(k, k - 1);
    // delta d_{k-1}^2 > d_k d_{k-2} + lam^2 (1-based) means swap
    mpz_class lhs = delta_den * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
    mpz_class rhs = delta_num * (d[k] * d[k]);
    if (lhs < rhs) {
      swap(k);
      if (k > 1) --k;
    } else {
      for (size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
}

ZMatrix hermite_normal_form(ZMatrix a) {
  if (a.empty()) return a;
  const size_t cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    for (;;) {
      size_t piv = a.size();
      for (size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (piv == a.size() || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool done = true;
      for (size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (size_t j = c; j < cols; ++j) mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[r][j].get_mpz_t());
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (size_t j = c; j < cols; ++j) a[r][j] = -a[r][j];
    for (size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = c; j < cols; ++j) mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[r][j].get_mpz_t());
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<size_t> row_reduce(QMatrix& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    mpq_class inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(QMatrix m) { return row_reduce(m).size(); }

QMatrix nullspace(QMatrix m) {
  QMatrix out;
  if (m.empty()) return out;
  const size_t cols = m[0].size();
  std::vector<size_t> piv = row_reduce(m);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<mpq_class> v(cols);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

bool solve(const QMatrix& m, const std::vector<mpq_class>& b, std::vector<mpq_class>& x) {
  if (m.empty()) return false;
  const size_t cols = m[0].size();
  QMatrix aug = m;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<size_t> piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == cols) return false;
  x.assign(cols, 0);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return true;
}

}  // namespace relheight
