#include "relheight/heights.hpp"

#include <cmath>
#include <complex>

#include "relheight/error.hpp"
#include "relheight/rootcert.hpp"

namespace relheight {

namespace {

// M of a squarefree polynomial without cyclotomic factors, from certified roots.
Interval mahler_squarefree(const IntPolynomial& s, long bits) {
  const mpfr_prec_t prec = bits + 32;
  RootSet rs = isolate_roots(s, bits);
  Interval m = abs(Interval::from_mpz(s.leading(), prec));
  const Interval one = Interval::from_long(1, prec);
  for (const auto& b : rs.boxes) m = m * max(one, b.modulus());
  return m;
}

}  // namespace

AlgebraicNumber make_algebraic(const IntPolynomial& p, size_t index, long bits) {
  std::vector<AlgebraicNumber> all = conjugates(p, bits);
  if (index >= all.size()) throw Error(ErrorKind::InvalidArgument, "invalid argument: root index out of range");
  return all[index];
}

AlgebraicNumber make_rational(const mpq_class& q) {
  IntPolynomial m(std::vector<mpz_class>{-mpz_class(q.get_num()), q.get_den()});
  Complex c(Real(q, kDefaultPrecision), Real(kDefaultPrecision));
  Real r(kDefaultPrecision);
  if (c.re.to_mpq() != q) {
    mpq_class diff = abs(c.re.to_mpq() - q);
    mpfr_set_q(r.get(), diff.get_mpq_t(), MPFR_RNDU);
  }
  return AlgebraicNumber{m, ComplexBox{c, r}};
}

std::vector<AlgebraicNumber> conjugates(const IntPolynomial& p, long bits) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: constant polynomial");
  if (!is_irreducible(p)) throw Error(ErrorKind::NotAField, "not a field: reducible minimal polynomial");
  IntPolynomial m = normalize(p);
  RootSet rs = isolate_roots(m, bits);
  std::vector<AlgebraicNumber> out;
  for (auto& b : rs.boxes) out.push_back(AlgebraicNumber{m, std::move(b)});
  return out;
}

Interval mahler_measure(const IntPolynomial& p, long bits) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  const mpfr_prec_t prec = bits + 32;
  auto [content, prim] = content_and_primitive(p);
  CyclotomicSplit split = split_cyclotomic(prim);
  for (long b = bits;; b *= 2) {
    Interval m = Interval::from_mpz(content, prec);
    if (split.rest.degree() <= 0) {
      m = m * abs(Interval::from_mpz(split.rest.coeff(0), prec));
    } else {
      auto [rc, rest] = content_and_primitive(split.rest);
      m = m * Interval::from_mpz(rc, prec);
      for (const auto& [s, e] : squarefree_decomposition(rest))
        m = m * pow_ui(mahler_squarefree(s, b), static_cast<unsigned long>(e));
    }
    Real rel = m.width() / m.lo();
    if (rel <= ldexp(Real(1L, prec), -(bits / 2)) || b >= kMaxRootPrecision) return m;
  }
}

Interval jensen_integral_check(const IntPolynomial& p, int N, double tolerance) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  if (N < 4 || N % 2) throw Error(ErrorKind::InvalidArgument, "invalid argument: N must be even and >= 4");
  const auto& c = p.coeffs();
  std::vector<long double> cd(c.size());
  long scale = 0;
  for (const auto& a : c) {
    long e = 0;
    if (a != 0) mpz_get_d_2exp(&e, a.get_mpz_t());
    scale = std::max(scale, e);
  }
  for (size_t i = 0; i < c.size(); ++i) {
    long e = 0;
    double m = c[i] == 0 ? 0.0 : mpz_get_d_2exp(&e, c[i].get_mpz_t());
    cd[i] = std::ldexp(static_cast<long double>(m), static_cast<int>(e - scale));
  }
  const long double two_pi = 2.0L * std::acos(-1.0L);
  // An irrational offset keeps nodes away from roots of unity.
  const long double offset = 0.5L + 0.1234567891L / N;
  auto rule = [&](int n, int stride) {
    long double acc = 0;
    for (int k = 0; k < n; ++k) {
      long double t = (static_cast<long double>(k) * stride + offset * stride) / (static_cast<long double>(n) * stride);
      std::complex<long double> z = std::polar(1.0L, two_pi * t), v = 0;
      for (size_t i = cd.size(); i-- > 0;) v = v * z + cd[i];
      acc += std::log(std::abs(v));
    }
    return acc / n;
  };
  long double full = rule(N, 1), half = rule(N / 2, 2);
  long double err = std::fabs(full - half);
  if (!(err <= tolerance)) throw Error(ErrorKind::InconclusiveCheck, "inconclusive check");
  long double logm = full + scale * std::log(2.0L);
  const mpfr_prec_t prec = 64;
  Real lo(static_cast<double>(std::exp(logm - err - 1e-15L)), prec);
  Real hi(static_cast<double>(std::exp(logm + err + 1e-15L)), prec);
  return Interval(lo, hi);
}

Interval weil_height(const IntPolynomial& minpoly, long bits) {
  if (minpoly.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  const mpfr_prec_t prec = bits + 32;
  if (minpoly.degree() < 1) throw Error(ErrorKind::InvalidArgument, "invalid argument: constant minimal polynomial");
  if (kronecker_test(minpoly)) return Interval::from_long(0, prec);
  Interval m = mahler_measure(minpoly, bits);
  Interval h = log(m) / Interval::from_long(minpoly.degree(), prec);
  // log M >= 0 always; clamp the lower end.
  if (h.lo().sign() < 0) h = Interval(Real(prec), h.hi());
  return h;
}

std::optional<unsigned> root_of_unity_order(const IntPolynomial& minpoly) { return cyclotomic_index(minpoly); }

IntPolynomial power_minpoly(const IntPolynomial& minpoly, unsigned k) {
  if (minpoly.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  if (k == 0) return IntPolynomial{-1, 1};
  if (k == 1) return normalize(minpoly);
  // B(x, y) = x - y^k
  BiPolynomial B{-IntPolynomial::monomial(1, static_cast<int>(k)), IntPolynomial{1}};
  IntPolynomial r = resultant_y(constant_in_x(minpoly), B);
  return squarefree_part(r);
}

}  // namespace relheight
