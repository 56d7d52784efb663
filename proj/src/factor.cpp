// Zassenhaus factorization over Z: squarefree split, choice of a good prime
// among several, Cantor-Zassenhaus mod p, quadratic Hensel lifting along a
// balanced factor tree, and subset recombination with constant-term and
// degree-pattern pruning.

#include <algorithm>
#include <bitset>
#include <numeric>

#include "relheight/error.hpp"
#include "relheight/exactpoly.hpp"
#include "relheight/modp.hpp"

namespace relheight {

namespace {

using ZVec = std::vector<mpz_class>;
using DegreeSet = std::bitset<kFactorDegreeLimit + 1>;

void trim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void reduce(ZVec& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
}

ZVec from_modp(const modp::Poly& a) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

ZVec add(const ZVec& a, const ZVec& b, const mpz_class& m) {
  ZVec r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  reduce(r, m);
  return r;
}

ZVec sub(const ZVec& a, const ZVec& b, const mpz_class& m) {
  ZVec r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  reduce(r, m);
  return r;
}

ZVec mul(const ZVec& a, const ZVec& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  reduce(r, m);
  return r;
}

// Division by a monic h modulo m.
std::pair<ZVec, ZVec> divrem_monic(const ZVec& a, const ZVec& h, const mpz_class& m) {
  if (a.size() < h.size()) return {{}, a};
  ZVec r = a;
  const size_t dh = h.size() - 1;
  ZVec q(a.size() - dh);
  for (size_t i = a.size(); i-- > dh;) {
    mpz_class t = r[i];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    q[i - dh] = t;
    if (t == 0) continue;
    for (size_t j = 0; j <= dh; ++j) mpz_submul(r[i - dh + j].get_mpz_t(), t.get_mpz_t(), h[j].get_mpz_t());
  }
  r.resize(dh);
  reduce(r, m);
  reduce(q, m);
  return {q, r};
}

// One quadratic Hensel step from m to m2 (m2 divides m^2):
// f = g h, s g + t h = 1, h monic, deg s < deg h, deg t < deg g.
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const mpz_class& m2) {
  ZVec e = sub(f, mul(g, h, m2), m2);
  auto [q, r] = divrem_monic(mul(s, e, m2), h, m2);
  ZVec g2 = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
  ZVec h2 = add(h, r, m2);
  ZVec b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), ZVec{1}, m2);
  auto [c, d] = divrem_monic(mul(s, b, m2), h2, m2);
  s = sub(s, d, m2);
  t = sub(sub(t, mul(t, b, m2), m2), mul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod u_i (mod p) to the same shape mod M = p^K.
// f's leading coefficient must be a unit mod p. Output factors are monic.
void tree_lift(const ZVec& f, const std::vector<modp::Poly>& us, const modp::Field& F, const mpz_class& M,
               std::vector<ZVec>& out) {
  if (us.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    ZVec u = f;
    for (auto& c : u) c *= inv;
    reduce(u, M);
    out.push_back(std::move(u));
    return;
  }
  const size_t half = us.size() / 2;
  std::vector<modp::Poly> A(us.begin(), us.begin() + half), B(us.begin() + half, us.end());
  modp::Poly g0{F.reduce(f.back())}, h0{1};
  for (const auto& u : A) g0 = F.mul(g0, u);
  for (const auto& u : B) h0 = F.mul(h0, u);
  auto xg = F.xgcd(g0, h0);
  ZVec g = from_modp(g0), h = from_modp(h0), s = from_modp(xg.s), t = from_modp(xg.t);
  const mpz_class p = static_cast<unsigned long>(F.p());
  mpz_class m = p;
  while (m < M) {
    mpz_class m2 = m * m;
    if (m2 > M) m2 = M;
    hensel_step(f, g, h, s, t, m2);
    m = m2;
  }
  tree_lift(g, A, F, M, out);
  tree_lift(h, B, F, M, out);
}

ZVec symmetric(const ZVec& a, const mpz_class& M) {
  ZVec r = a;
  mpz_class half = M / 2;
  for (auto& c : r) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  trim(r);
  return r;
}

DegreeSet subset_sums(const std::vector<int>& degs) {
  DegreeSet s;
  s[0] = true;
  for (int d : degs) s |= (s << d);
  return s;
}

// f primitive, squarefree, positive leading coefficient, f(0) != 0.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};

  // Try several primes; keep the one with the fewest modular factors and the
  // intersection of the possible factor degrees.
  DegreeSet allowed;
  allowed.set();
  std::uint64_t best_p = 0;
  std::vector<modp::Poly> best;
  int good = 0;
  for (std::uint64_t p = 3; good < 7; p = modp::next_prime(p)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    modp::Field F(p);
    modp::Poly fp = F.reduce(f);
    if (!F.is_squarefree(fp)) continue;
    ++good;
    std::vector<int> degs = F.factor_degrees(fp);
    allowed &= subset_sums(degs);
    if (degs.size() == 1) return {f};
    if (best_p == 0 || degs.size() < best.size()) {
      best_p = p;
      best = F.factor_squarefree(fp, static_cast<std::uint64_t>(n));
    }
  }
  bool only_trivial = true;
  for (int d = 1; d < n; ++d)
    if (allowed[d]) only_trivial = false;
  if (only_trivial) return {f};

  modp::Field F(best_p);
  const mpz_class L = f.leading();
  // Coefficient bound for any factor: 2^n * ||f||_2, scaled by |L|.
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= n;
  bound *= abs(L);
  mpz_class M = static_cast<unsigned long>(best_p);
  while (M <= 2 * bound) M *= static_cast<unsigned long>(best_p);

  std::vector<ZVec> lifted;
  tree_lift(f.coeffs(), best, F, M, lifted);

  std::vector<IntPolynomial> found;
  std::vector<size_t> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  IntPolynomial rest = f;
  size_t s = 1;
  while (2 * s <= alive.size()) {
    const mpz_class Lr = rest.leading();
    const mpz_class target0 = Lr * rest.coeff(0);
    bool hit = false;
    std::vector<size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      int deg = 0;
      for (size_t i : idx) deg += static_cast<int>(lifted[alive[i]].size()) - 1;
      bool try_it = allowed[deg];
      if (try_it) {
        mpz_class c0 = Lr;
        for (size_t i : idx) {
          c0 *= lifted[alive[i]][0];
          mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), M.get_mpz_t());
        }
        if (c0 > M / 2) c0 -= M;
        try_it = c0 != 0 && mpz_divisible_p(target0.get_mpz_t(), c0.get_mpz_t());
      }
      if (try_it) {
        ZVec g{Lr};
        for (size_t i : idx) g = mul(g, lifted[alive[i]], M);
        IntPolynomial cand = primitive_part(IntPolynomial(symmetric(g, M)));
        if (auto q = divide_exact(rest, cand)) {
          found.push_back(normalize(cand));
          rest = *q;
          std::vector<size_t> keep;
          for (size_t j = 0; j < alive.size(); ++j)
            if (std::find(idx.begin(), idx.end(), j) == idx.end()) keep.push_back(alive[j]);
          alive = std::move(keep);
          hit = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      size_t k = s;
      while (k > 0 && idx[k - 1] == alive.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(normalize(rest));
  return found;
}

}  // namespace

FactorList factor_rationals(const IntPolynomial& p, int degree_limit) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  if (p.degree() > degree_limit || p.degree() > kFactorDegreeLimit) throw Error(ErrorKind::DegreeLimit, "degree limit");
  FactorList out;
  auto [c, q] = content_and_primitive(p);
  out.content = c;
  if (q.leading() < 0) {
    out.unit = -1;
    q = -q;
  }
  if (q.degree() <= 0) return out;
  const int k = q.x_valuation();
  if (k > 0) {
    out.factors.emplace_back(IntPolynomial::x(), k);
    q = q.shift_down(k);
  }
  for (const auto& [s, m] : squarefree_decomposition(q))
    for (auto& g : factor_squarefree(s)) out.factors.emplace_back(std::move(g), m);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() < 1) return false;
  FactorList fl = factor_rationals(p);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

}  // namespace relheight
