#include "relheight/rootcert.hpp"

#include <algorithm>
#include <cmath>

#include "relheight/error.hpp"

namespace relheight {

namespace {

std::vector<Real> real_coeffs(const IntPolynomial& p, mpfr_prec_t prec) {
  std::vector<Real> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(a, prec);
  return c;
}

// p(z) and p'(z) by Horner.
void horner(const std::vector<Real>& c, const Complex& z, Complex& p, Complex& dp) {
  const mpfr_prec_t prec = z.prec();
  p = Complex(Real(prec), Real(prec));
  dp = Complex(Real(prec), Real(prec));
  for (size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += c[i];
  }
}

Complex convert(const Complex& z, mpfr_prec_t prec) {
  Complex r(prec);
  mpfr_set(r.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real scale_of(const Complex& z) { return max(Real(1L, z.prec()), z.abs()); }

// Aberth-Ehrlich iteration until every correction is below 2^-stop relative.
void aberth(const std::vector<Real>& c, std::vector<Complex>& z, long stop, int max_iter) {
  const size_t n = z.size();
  const mpfr_prec_t prec = z.empty() ? kDefaultPrecision : z[0].prec();
  std::vector<bool> done(n, false);
  Complex p(prec), dp(prec);
  const Real one(1L, prec);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      horner(c, z[i], p, dp);
      if (p.re.is_zero() && p.im.is_zero()) {
        done[i] = true;
        continue;
      }
      Complex S(prec);
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex d = z[i] - z[j];
        if (d.re.is_zero() && d.im.is_zero()) continue;
        S = S + Complex(one, Real(prec)) / d;
      }
      Complex w(prec);
      if (dp.re.is_zero() && dp.im.is_zero()) {
        // Stationary point: nudge off it.
        w = Complex(ldexp(scale_of(z[i]), -20), ldexp(scale_of(z[i]), -21));
      } else {
        Complex N = p / dp;
        Complex den = Complex(one, Real(prec)) - N * S;
        w = (den.re.is_zero() && den.im.is_zero()) ? N : N / den;
      }
      z[i] = z[i] - w;
      if (!(w.abs() <= ldexp(scale_of(z[i]), -stop))) all = false;
      else done[i] = true;
    }
    if (all) return;
  }
}

std::vector<Complex> initial_points(const IntPolynomial& q, mpfr_prec_t prec) {
  const int n = q.degree();
  long e0, en;
  double m0 = mpz_get_d_2exp(&e0, q.coeff(0).get_mpz_t());
  double mn = mpz_get_d_2exp(&en, q.leading().get_mpz_t());
  double logR = (std::log(std::fabs(m0)) + e0 * std::log(2.0) - std::log(std::fabs(mn)) - en * std::log(2.0)) / n;
  Real R = exp(Real(logR, prec));
  Real two_pi = const_pi(prec) * 2L;
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    Real theta = two_pi * Real(static_cast<double>(k) + 0.4, prec) / static_cast<long>(n) + Real(0.25, prec);
    Real c(prec), s(prec);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    // Slightly different radii break the symmetry of palindromic inputs.
    Real Rk = R * Real(1.0 + 0.01 * ((k * 7) % 5), prec);
    z.emplace_back(c * Rk, s * Rk);
  }
  return z;
}

Interval upper_abs(const ComplexInterval& z) { return z.abs(); }

// Newton residual radius n |q(z)| / |q'(z)|, rounded up; nullopt if q' may vanish.
std::optional<Real> newton_radius(const IntPolynomial& q, const IntPolynomial& dq, const Complex& z) {
  ComplexInterval zi = ComplexInterval::point(z);
  Interval pv = upper_abs(evaluate(q, zi));
  Interval dv = upper_abs(evaluate(dq, zi));
  if (!dv.positive()) return std::nullopt;
  Interval r = Interval::point(pv.hi()) / Interval::point(dv.lo()) *
               Interval::from_long(q.degree(), z.prec());
  return r.hi();
}

// Rational reconstruction of a real root: convergents of x close to x with
// denominator at most |lc|.
std::optional<mpq_class> rational_root(const IntPolynomial& q, const Real& x) {
  mpq_class v = x.to_mpq();
  mpq_class tol = abs(v) + 1;
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(x.prec() / 2));
  const mpz_class lc = abs(q.leading());
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  mpq_class rest = v;
  for (int step = 0; step < 200; ++step) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > lc) break;
    mpq_class cand(h2, k2);
    cand.canonicalize();
    if (abs(cand - v) <= tol && q.eval(cand) == 0) return cand;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    rest -= a;
    if (rest == 0) break;
    rest = 1 / rest;
  }
  return std::nullopt;
}

bool is_power_of_two(const mpz_class& z) { return z > 0 && mpz_popcount(z.get_mpz_t()) == 1; }

// Keys whose certified ranges overlap count as equal, so roots of equal
// modulus are ordered by real part regardless of rounding in |c|.
bool canonical_box_less(const ComplexBox& a, const ComplexBox& b) {
  Interval ma = a.modulus(), mb = b.modulus();
  if (!ma.overlaps(mb)) return ma.lo() > mb.hi();
  Interval ra = Interval::ball(a.center.re, a.radius), rb = Interval::ball(b.center.re, b.radius);
  if (!ra.overlaps(rb)) return ra.lo() > rb.hi();
  return a.center.im > b.center.im;
}

struct Attempt {
  bool ok = false;
  std::vector<ComplexBox> boxes;
};

Attempt certify(const IntPolynomial& q, std::vector<Complex>& z, long bits, mpfr_prec_t prec) {
  Attempt out;
  const int n = q.degree();
  const IntPolynomial dq = q.derivative();
  // Split into real candidates and upper-half representatives.
  std::vector<Complex> reals, upper;
  int lower = 0;
  for (const auto& w : z) {
    Real tol = ldexp(scale_of(w), -(static_cast<long>(prec) / 2));
    if (abs(w.im) <= tol) {
      reals.emplace_back(w.re, Real(prec));
    } else if (w.im.sign() > 0) {
      upper.push_back(w);
    } else {
      ++lower;
    }
  }
  if (lower != static_cast<int>(upper.size())) return out;
  std::vector<ComplexBox> boxes;
  for (auto& r : reals) {
    ComplexBox b{r, Real(prec)};
    if (auto rr = rational_root(q, r.re)) {
      if (is_power_of_two(rr->get_den())) {
        b.center = Complex(Real(*rr, prec), Real(prec));
        if (b.center.re.to_mpq() == *rr) {
          b.radius = Real(prec);
          boxes.push_back(std::move(b));
          continue;
        }
      }
      Real d(prec);
      mpq_class diff = abs(b.center.re.to_mpq() - *rr);
      mpfr_set_q(d.get(), diff.get_mpq_t(), MPFR_RNDU);
      b.radius = d;
      boxes.push_back(std::move(b));
      continue;
    }
    auto rad = newton_radius(q, dq, r);
    if (!rad) return out;
    b.radius = *rad;
    boxes.push_back(std::move(b));
  }
  for (auto& u : upper) {
    auto rad = newton_radius(q, dq, u);
    if (!rad) return out;
    boxes.push_back(ComplexBox{u, *rad});
    boxes.push_back(ComplexBox{u.conj(), *rad});
  }
  if (static_cast<int>(boxes.size()) != n) return out;
  for (size_t i = 0; i < boxes.size(); ++i) {
    // Each disk is within the target radius and well separated from the rest.
    Real target = ldexp(scale_of(boxes[i].center), -bits);
    if (boxes[i].radius > target) return out;
    for (size_t j = 0; j < boxes.size(); ++j) {
      if (i == j) continue;
      ComplexInterval d = ComplexInterval::point(boxes[i].center) - ComplexInterval::point(boxes[j].center);
      Interval sep = d.abs();
      Interval three_r = Interval::point(boxes[i].radius) * Interval::from_long(3, prec);
      if (!(three_r.hi() < sep.lo())) return out;
    }
  }
  // Disks in the upper half plane must not reach the real axis.
  for (const auto& b : boxes)
    if (!b.center.im.is_zero() && !(b.radius < abs(b.center.im))) return out;
  std::sort(boxes.begin(), boxes.end(), canonical_box_less);
  out.ok = true;
  out.boxes = std::move(boxes);
  return out;
}

}  // namespace

Interval ComplexBox::modulus() const {
  Interval m = ComplexInterval::point(center).abs();
  Interval r = Interval::point(radius);
  Interval lo = m - r, hi = m + r;
  Real l = lo.lo().sign() < 0 ? Real(lo.prec()) : lo.lo();
  return Interval(l, hi.hi());
}

bool ComplexBox::contains(const ComplexBox& inner) const {
  ComplexInterval d = ComplexInterval::point(inner.center) - ComplexInterval::point(center);
  Interval reach = d.abs() + Interval::point(inner.radius);
  return reach.hi() <= radius;
}

ComplexInterval evaluate(const IntPolynomial& p, const ComplexInterval& z) {
  const mpfr_prec_t prec = z.re.prec();
  ComplexInterval acc{Interval::from_long(0, prec), Interval::from_long(0, prec)};
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * z;
    acc.re = acc.re + Interval::from_mpz(p.coeffs()[i], prec);
  }
  return acc;
}

RootSet isolate_roots(const IntPolynomial& p, long bits) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero input");
  RootSet out;
  out.precision_bits = bits;
  if (p.degree() <= 0) return out;
  IntPolynomial q = squarefree_part(p);
  out.squarefree = q;
  std::vector<ComplexBox> zero_root;
  if (q.coeff(0) == 0) {
    zero_root.push_back(ComplexBox{Complex(Real(bits), Real(bits)), Real(bits)});
    q = q.shift_down(1);
  }
  std::vector<ComplexBox> boxes;
  if (q.degree() >= 1) {
    const int n = q.degree();
    // Low-precision phase gets the approximations into the convergence basin.
    mpfr_prec_t prec = 64;
    std::vector<Complex> z = initial_points(q, prec);
    aberth(real_coeffs(q, prec), z, 40, 200 + 20 * n);
    prec = std::max<long>(bits, 64) + 64;
    for (;;) {
      for (auto& w : z) w = convert(w, prec);
      aberth(real_coeffs(q, prec), z, static_cast<long>(prec) - 8, 100 + 10 * n);
      Attempt a = certify(q, z, bits, prec);
      if (a.ok) {
        boxes = std::move(a.boxes);
        break;
      }
      if (prec >= kMaxRootPrecision) throw Error(ErrorKind::CertificationFailure, "certification failure");
      prec = std::min<long>(2 * prec, kMaxRootPrecision);
    }
    out.precision_bits = std::max<long>(bits, prec);
  }
  for (auto& b : zero_root) boxes.push_back(std::move(b));
  std::sort(boxes.begin(), boxes.end(), canonical_box_less);
  out.boxes = std::move(boxes);
  return out;
}

ComplexBox refine(const ComplexBox& box, const IntPolynomial& p, long target_bits) {
  if (box.radius.is_zero()) return box;
  IntPolynomial q = squarefree_part(p);
  const IntPolynomial dq = q.derivative();
  const bool real = box.center.im.is_zero();
  mpfr_prec_t prec = std::max<long>(box.center.prec(), target_bits + 64);
  for (;;) {
    Complex z = convert(box.center, prec);
    std::vector<Real> c = real_coeffs(q, prec);
    Complex pv(prec), dv(prec);
    for (int it = 0; it < 400; ++it) {
      horner(c, z, pv, dv);
      if (pv.re.is_zero() && pv.im.is_zero()) break;
      if (dv.re.is_zero() && dv.im.is_zero()) throw Error(ErrorKind::IllConditioned, "ill-conditioned");
      Complex step = pv / dv;
      z = z - step;
      if (real) z.im = Real(prec);
      if (step.abs() <= ldexp(scale_of(z), -(static_cast<long>(prec) - 8))) break;
    }
    ComplexBox nb{z, Real(prec)};
    if (real) {
      mpq_class zq = z.re.to_mpq();
      if (q.eval(zq) == 0) {
        if (box.contains(nb)) return nb;
        throw Error(ErrorKind::IllConditioned, "ill-conditioned");
      }
    }
    auto rad = newton_radius(q, dq, z);
    if (!rad) throw Error(ErrorKind::IllConditioned, "ill-conditioned");
    nb.radius = *rad;
    if (!box.contains(nb)) {
      if (prec >= kMaxRootPrecision) throw Error(ErrorKind::IllConditioned, "ill-conditioned");
    } else if (nb.radius <= ldexp(scale_of(z), -target_bits)) {
      return nb;
    }
    if (prec >= kMaxRootPrecision) throw Error(ErrorKind::CertificationFailure, "certification failure");
    prec = std::min<long>(2 * prec, kMaxRootPrecision);
  }
}

}  // namespace relheight
