// Trager factorization over number fields, composita by primitive elements,
// and exact recognition of algebraic numbers inside a field.

#include <algorithm>
#include <mutex>

#include "numfield_internal.hpp"
#include "relheight/error.hpp"
#include "relheight/lattice.hpp"
#include "relheight/modp.hpp"

namespace relheight {

namespace detail {

IntPolynomial shifted_norm(const IntPolynomial& P, const IntPolynomial& s, unsigned k) {
  // s(x - k y) as a polynomial in x with coefficients in Z[y].
  const int n = s.degree();
  std::vector<std::vector<mpz_class>> cols(n + 1);
  for (int j = 0; j <= n; ++j) cols[j].assign(n - j + 1, 0);
  for (int i = 0; i <= n; ++i) {
    const mpz_class& c = s.coeffs()[i];
    if (c == 0) continue;
    mpz_class binom = 1, mk = 1;  // C(i, i - t) and (-k)^t
    for (int t = 0; t <= i; ++t) {
      // term x^(i-t) (-k y)^t with coefficient C(i, t)
      cols[i - t][t] += c * binom * mk;
      binom = binom * (i - t) / (t + 1);
      mk *= -static_cast<long>(k);
    }
  }
  BiPolynomial B;
  for (auto& col : cols) B.emplace_back(std::move(col));
  return resultant_y(constant_in_x(P), B);
}

unsigned squarefree_shift(const IntPolynomial& P, const IntPolynomial& s, IntPolynomial& norm) {
  for (unsigned k = 0; k < 1000; ++k) {
    norm = shifted_norm(P, s, k);
    if (gcd(norm, norm.derivative()).degree() == 0) return k;
  }
  throw Error(ErrorKind::CertificationFailure, "certification failure: no squarefree norm");
}

ComplexInterval evaluate_over(const NumberField& K, const FieldPolynomial& g, const ComplexBox& theta_box,
                              const ComplexInterval& z) {
  ComplexInterval acc(z.re.prec());
  for (size_t i = g.size(); i-- > 0;) acc = acc * z + K.embed_at(g[i], theta_box);
  return acc;
}

NormSelection select_norm_factor(const NumberField& K, const AlgebraicNumber& a) {
  const IntPolynomial& m = a.minpoly;
  if (static_cast<long>(m.degree()) * K.tau > kFactorDegreeLimit) throw Error(ErrorKind::DegreeLimit, "degree limit");
  NormSelection sel;
  IntPolynomial norm;
  sel.k = squarefree_shift(K.defpoly, m, norm);
  for (auto& [f, e] : factor_rationals(norm).factors) sel.factors.push_back(f);
  if (sel.factors.size() == 1) return sel;
  for (long bits = kDefaultPrecision; bits <= kMaxRootPrecision; bits *= 2) {
    ComplexBox ab = a.root.radius.is_zero() ? a.root : refine(a.root, m, bits);
    ComplexBox tb = K.embedding_at(bits);
    ComplexInterval gamma = ab.enclosure() + tb.enclosure() * Interval::from_long(sel.k, bits + 64);
    size_t hits = 0;
    for (size_t i = 0; i < sel.factors.size(); ++i) {
      if (evaluate(sel.factors[i], gamma).contains_zero()) {
        ++hits;
        sel.selected = i;
      }
    }
    if (hits == 1) return sel;
  }
  throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");
}

const std::vector<std::uint64_t>& witness_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t p = 3; v.size() < 400; p = modp::next_prime(p)) v.push_back(p);
    return v;
  }();
  return primes;
}

}  // namespace detail

using detail::NormSelection;

std::vector<std::pair<FieldPolynomial, int>> factor_over_field(const NumberField& K, const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  if (static_cast<long>(p.degree()) * K.tau > kFactorDegreeLimit) throw Error(ErrorKind::DegreeLimit, "degree limit");
  std::vector<std::pair<FieldPolynomial, int>> out;
  if (p.degree() < 1) return out;
  const FieldElement theta = K.gen();
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    FieldPolynomial sK = fpoly::from_int(K, s);
    if (s.degree() == 1) {
      out.emplace_back(fpoly::monic(K, sK), mult);
      continue;
    }
    IntPolynomial norm;
    const unsigned k = detail::squarefree_shift(K.defpoly, s, norm);
    const FieldElement shift = K.scale(theta, k);
    for (const auto& [Ni, e] : factor_rationals(norm).factors) {
      FieldPolynomial g = fpoly::compose_linear(K, fpoly::from_int(K, Ni), shift, K.one());
      FieldPolynomial G = fpoly::gcd(K, sK, g);
      if (fpoly::degree(G) >= 1) out.emplace_back(std::move(G), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (fpoly::less(a.first, b.first)) return true;
    if (fpoly::less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

int relative_degree(const NumberField& K, const AlgebraicNumber& a) {
  NormSelection sel = detail::select_norm_factor(K, a);
  return sel.factors[sel.selected].degree() / K.tau;
}

Compositum compositum(const NumberField& K, const AlgebraicNumber& a, bool compute_torsion) {
  NormSelection sel = detail::select_norm_factor(K, a);
  const IntPolynomial& N = sel.factors[sel.selected];
  const int n = N.degree();
  const int delta = n / K.tau;
  if (n > kFieldDegreeLimit) throw Error(ErrorKind::DegreeLimit, "degree limit");

  Compositum out;
  out.shift = sel.k;
  out.relative_degree = delta;
  const FieldElement theta = K.gen();
  FieldPolynomial mK = fpoly::from_int(K, a.minpoly);
  out.relative_minpoly =
      fpoly::gcd(K, mK, fpoly::compose_linear(K, fpoly::from_int(K, N), K.scale(theta, sel.k), K.one()));

  if (delta == 1) {
    out.field = K;
    if (compute_torsion && out.field.torsion_order_f == 0) out.field.torsion_order_f = field_torsion_order(K);
    out.theta_image = theta;
    out.a_image = K.neg(out.relative_minpoly[0]);
    return out;
  }

  // Monic model Q(x) = c^(n-1) N(x / c) with root t = c * gamma.
  const mpz_class c = N.leading();
  std::vector<mpz_class> q(n + 1);
  mpz_class cp = 1;  // c^(n-1-j)
  for (int j = n - 1; j >= 0; --j) {
    q[j] = N.coeffs()[j] * cp;
    cp *= c;
  }
  q[n] = 1;
  IntPolynomial Q(std::move(q));

  RootSet rs = isolate_roots(Q);
  size_t index = rs.boxes.size();
  for (long bits = kDefaultPrecision; bits <= kMaxRootPrecision && index == rs.boxes.size(); bits *= 2) {
    ComplexBox ab = a.root.radius.is_zero() ? a.root : refine(a.root, a.minpoly, bits);
    ComplexBox tb = K.embedding_at(bits);
    const mpfr_prec_t prec = bits + 64;
    ComplexInterval gamma = ab.enclosure() + tb.enclosure() * Interval::from_long(sel.k, prec);
    ComplexInterval t = gamma * Interval::from_mpz(c, prec);
    size_t hits = 0, last = 0;
    for (size_t i = 0; i < rs.boxes.size(); ++i) {
      ComplexInterval e = rs.boxes[i].enclosure();
      if (e.re.overlaps(t.re) && e.im.overlaps(t.im)) {
        ++hits;
        last = i;
      }
    }
    if (hits == 1) index = last;
  }
  if (index == rs.boxes.size()) throw Error(ErrorKind::PrecisionExhausted, "precision exhausted");

  FieldOptions opts;
  opts.embedding_index = index;
  opts.compute_torsion = compute_torsion;
  out.field = make_field(Q, opts);
  const NumberField& L = out.field;

  // theta is the common root of P_K(y) and m(t/c - k y) in L.
  const FieldElement gamma_L = L.scale(L.gen(), mpq_class(1, c));
  FieldPolynomial lin{gamma_L, L.from_rational(-static_cast<long>(sel.k))};
  FieldPolynomial mu = fpoly::compose_linear(L, fpoly::from_int(L, a.minpoly), lin[0], lin[1]);
  FieldPolynomial g = fpoly::gcd(L, fpoly::from_int(L, K.defpoly), mu);
  if (fpoly::degree(g) != 1) throw Error(ErrorKind::CertificationFailure, "certification failure: compositum");
  out.theta_image = L.neg(g[0]);
  out.a_image = L.sub(gamma_L, L.scale(out.theta_image, sel.k));
  return out;
}

std::optional<FieldElement> recognize_root(const NumberField& F, const IntPolynomial& m, const ComplexBox& target,
                                           long max_bits) {
  auto inside = [&](const FieldElement& x, long bits) {
    if (target.radius.is_zero()) {
      return F.is_rational(x) && target.center.im.is_zero() && target.center.re.to_mpq() == x.coords[0];
    }
    ComplexInterval v = F.embed(x, bits);
    ComplexInterval d = v - ComplexInterval::point(target.center);
    return d.abs().hi() < target.radius;
  };
  if (F.tau == 1) {
    for (const auto& [f, e] : factor_rationals(m).factors) {
      if (f.degree() != 1) continue;
      FieldElement x = F.from_rational(mpq_class(-f.coeff(0), f.coeff(1)));
      if (inside(x, kDefaultPrecision)) return x;
    }
    return std::nullopt;
  }
  const ComplexBox theta0 = F.embedding_at(kDefaultPrecision);
  if (theta0.is_real() && !target.is_real()) return std::nullopt;
  const bool use_im = !(theta0.is_real() && target.is_real());
  const int tau = F.tau;
  for (long bits = std::max<long>(kDefaultPrecision, 32L * (tau + 1)); bits <= max_bits; bits *= 2) {
    const mpfr_prec_t prec = bits + 64;
    ComplexBox tb = F.embedding_at(prec);
    ComplexBox zb = target.radius.is_zero() ? target : refine(target, m, prec);
    const Complex& th = tb.center;
    const Complex& z = zb.center;
    const size_t cols = tau + 1 + (use_im ? 2 : 1);
    ZMatrix basis(tau + 1, std::vector<mpz_class>(cols));
    auto put = [&](std::vector<mpz_class>& row, size_t col, const Real& v) {
      Real s = ldexp(v, bits);
      mpfr_get_z(row[col].get_mpz_t(), s.get(), MPFR_RNDN);
    };
    Complex power(Real(1L, prec), Real(prec));
    for (int i = 0; i <= tau; ++i) {
      auto& row = basis[i];
      row[i] = 1;
      Complex v = i < tau ? power : Complex(-z.re, -z.im);
      put(row, tau + 1, v.re);
      if (use_im) put(row, tau + 2, v.im);
      if (i < tau) power = power * th;
    }
    lll_reduce(basis);
    for (const auto& row : basis) {
      const mpz_class& d = row[tau];
      if (d == 0) continue;
      FieldElement x = F.zero();
      for (int i = 0; i < tau; ++i) x.coords[i] = mpq_class(row[i], d);
      for (auto& cq : x.coords) cq.canonicalize();
      if (!F.is_zero(F.eval(m, x))) continue;
      if (inside(x, bits)) return x;
    }
  }
  return std::nullopt;
}

}  // namespace relheight
