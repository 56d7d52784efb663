#include "relheight/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace relheight::modp {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Field::inv(std::uint64_t a) const {
  // Fermat; p is prime.
  std::uint64_t r = 1, b = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::reduce(const mpz_class& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p_); }

std::optional<std::uint64_t> Field::reduce(const mpq_class& q) const {
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (d == 0) return std::nullopt;
  return mul(mpz_fdiv_ui(q.get_num_mpz_t(), p_), inv(d));
}

void Field::trim(Poly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly Field::reduce(const IntPolynomial& f) const {
  Poly r(f.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = reduce(f.coeffs()[i]);
  trim(r);
  return r;
}

Poly Field::add(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  trim(r);
  return r;
}

Poly Field::sub(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly Field::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
  }
  trim(r);
  return r;
}

Poly Field::scale(const Poly& a, std::uint64_t c) const {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
  trim(r);
  return r;
}

std::pair<Poly, Poly> Field::divrem(const Poly& a, const Poly& b) const {
  if (b.empty()) throw std::invalid_argument("modp division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a;
  const size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  const std::uint64_t il = inv(b.back());
  for (size_t i = a.size(); i-- > db;) {
    std::uint64_t t = mul(r[i], il);
    q[i - db] = t;
    if (t == 0) continue;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(t, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

Poly Field::monic(const Poly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

Poly Field::gcd(Poly a, Poly b) const {
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Field::Xgcd Field::xgcd(const Poly& a, const Poly& b) const {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint64_t il = inv(r0.back());
  return {scale(r0, il), scale(s0, il), scale(t0, il)};
}

Poly Field::derivative(const Poly& a) const {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
  trim(r);
  return r;
}

Poly Field::powmod(Poly base, std::uint64_t e, const Poly& mod) const {
  Poly r{1};
  r = rem(r, mod);
  base = rem(base, mod);
  while (e) {
    if (e & 1) r = rem(mul(r, base), mod);
    e >>= 1;
    if (e) base = rem(mul(base, base), mod);
  }
  return r;
}

bool Field::is_squarefree(const Poly& a) const {
  Poly d = derivative(a);
  if (d.empty()) return a.size() <= 1;
  return gcd(a, d).size() == 1;
}

std::vector<std::pair<Poly, int>> Field::distinct_degree(const Poly& f0) const {
  std::vector<std::pair<Poly, int>> out;
  Poly f = monic(f0);
  const Poly x{0, 1};
  Poly h = rem(x, f);
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = powmod(h, p_, f);
    Poly g = gcd(f, sub(h, x));
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divrem(f, g).first;
      h = rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

void Field::equal_degree(const Poly& f, int d, std::uint64_t& state, std::vector<Poly>& out) const {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = splitmix(state) % p_;
    trim(a);
    if (a.size() <= 1) continue;
    // b = a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
    Poly t = a, acc = a;
    for (int i = 1; i < d; ++i) {
      t = powmod(t, p_, f);
      acc = rem(mul(acc, t), f);
    }
    Poly b = powmod(acc, (p_ - 1) / 2, f);
    Poly g = gcd(f, sub(b, Poly{1}));
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      equal_degree(g, d, state, out);
      equal_degree(divrem(f, g).first, d, state, out);
      return;
    }
  }
}

std::vector<Poly> Field::factor_squarefree(const Poly& f, std::uint64_t seed) const {
  std::vector<Poly> out;
  std::uint64_t state = seed ^ (p_ * 0x2545F4914F6CDD1DULL);
  for (auto& [g, d] : distinct_degree(f)) equal_degree(g, d, state, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> Field::factor_degrees(const Poly& f) const {
  std::vector<int> out;
  for (auto& [g, d] : distinct_degree(f))
    for (int i = 0; i < (static_cast<int>(g.size()) - 1) / d; ++i) out.push_back(d);
  return out;
}

std::vector<std::uint64_t> Field::roots(const Poly& f) const {
  std::vector<std::uint64_t> out;
  if (f.size() <= 1) return out;
  Poly fm = monic(f);
  const Poly x{0, 1};
  Poly g = gcd(fm, sub(powmod(x, p_, fm), x));
  if (g.size() <= 1) return out;
  std::vector<Poly> lin;
  std::uint64_t state = 0x1234 ^ p_;
  equal_degree(g, 1, state, lin);
  for (const auto& l : lin) out.push_back(sub(0, l[0]));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 11; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t after) {
  std::uint64_t n = after < 2 ? 3 : after + 1;
  if (n % 2 == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

}  // namespace relheight::modp
