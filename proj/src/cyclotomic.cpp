#include <map>
#include <mutex>

#include "relheight/error.hpp"
#include "relheight/exactpoly.hpp"

namespace relheight {

namespace {

std::mutex g_cyclo_mutex;
std::map<unsigned, IntPolynomial> g_cyclo_memo;

IntPolynomial cyclotomic_locked(unsigned m) {
  auto it = g_cyclo_memo.find(m);
  if (it != g_cyclo_memo.end()) return it->second;
  IntPolynomial P = IntPolynomial::monomial(1, static_cast<int>(m)) - IntPolynomial{1};
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) P = *divide_exact(P, cyclotomic_locked(d));
  g_cyclo_memo.emplace(m, P);
  return P;
}

// All m with phi(m) <= D, ascending. phi(m) >= sqrt(m/2) bounds the search.
std::vector<unsigned> indices_with_phi_at_most(int D) {
  std::vector<unsigned> out;
  const unsigned top = 2u * static_cast<unsigned>(D) * static_cast<unsigned>(D) + 2u;
  for (unsigned m = 1; m <= top; ++m)
    if (euler_phi(m) <= static_cast<std::uint64_t>(D)) out.push_back(m);
  return out;
}

}  // namespace

IntPolynomial cyclotomic(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "invalid argument: cyclotomic index 0");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cyclotomic_locked(m);
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

CyclotomicSplit split_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  CyclotomicSplit out;
  out.x_power = p.x_valuation();
  IntPolynomial rest = p.shift_down(out.x_power);
  if (rest.degree() >= 1) {
    for (unsigned m : indices_with_phi_at_most(rest.degree())) {
      if (static_cast<std::uint64_t>(rest.degree()) < euler_phi(m)) continue;
      IntPolynomial phi = cyclotomic(m);
      int e = 0;
      while (rest.degree() >= phi.degree()) {
        auto q = divide_exact(rest, phi);
        if (!q) break;
        rest = std::move(*q);
        ++e;
      }
      if (e > 0) out.cyclotomic.emplace_back(m, e);
      if (rest.degree() < 1) break;
    }
  }
  out.rest = std::move(rest);
  return out;
}

bool kronecker_test(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  IntPolynomial q = p.shift_down(p.x_valuation());
  if (abs(q.leading()) != 1 || abs(q.coeff(0)) != 1) return false;
  if (content_and_primitive(q).first != 1) return false;
  CyclotomicSplit s = split_cyclotomic(q);
  return s.rest.degree() == 0 && abs(s.rest.coeff(0)) == 1;
}

std::optional<unsigned> cyclotomic_index(const IntPolynomial& p) {
  if (p.degree() < 1) return std::nullopt;
  const int d = p.degree();
  for (unsigned m : indices_with_phi_at_most(d)) {
    if (euler_phi(m) != static_cast<std::uint64_t>(d)) continue;
    IntPolynomial phi = cyclotomic(m);
    if (p == phi || p == -phi) return m;
  }
  return std::nullopt;
}

}  // namespace relheight
