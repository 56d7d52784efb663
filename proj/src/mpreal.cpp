#include "relheight/mpreal.hpp"

#include <algorithm>
#include <memory>

#include "relheight/error.hpp"

namespace relheight {

namespace {

mpfr_prec_t prec2(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

template <typename Fn>
Real unary(const Real& a, Fn fn) {
  Real r(a.prec());
  fn(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real Real::parse(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  if (mpfr_set_str(r.get(), s.c_str(), 10, rnd) != 0 && !r.is_finite()) {
    throw Error(ErrorKind::ParseError, "not a number: " + s);
  }
  return r;
}

mpq_class Real::to_mpq() const {
  if (!is_finite()) throw Error(ErrorKind::DomainError, "non-finite value");
  if (is_zero()) return 0;
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  q.canonicalize();
  return q;
}

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const {
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::unique_ptr<char[]> buf(new char[static_cast<size_t>(digits) + 64]);
  mpfr_snprintf(buf.get(), static_cast<size_t>(digits) + 64, "%.*R*g", digits - 1, rnd, v_);
  return buf.get();
}

Real& Real::operator+=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(prec2(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(prec2(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(prec2(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(prec2(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) { return unary(a, mpfr_neg); }
Real operator*(const Real& a, long k) {
  Real r(a.prec());
  mpfr_mul_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long k) {
  Real r(a.prec());
  mpfr_div_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Real abs(const Real& a) { return unary(a, mpfr_abs); }
Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
Real log(const Real& a) { return unary(a, mpfr_log); }
Real exp(const Real& a) { return unary(a, mpfr_exp); }
Real pow(const Real& a, const Real& b) {
  Real r(prec2(a, b));
  mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real ldexp(const Real& a, long e) {
  Real r(a.prec());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}
Real const_pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

long exponent2(const Real& a) {
  if (a.is_zero() || !a.is_finite()) return 0;
  return static_cast<long>(mpfr_get_exp(a.get()));
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real n = b.norm2();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }

// ---------------------------------------------------------------------------
// Intervals

namespace {

template <typename Fn>
Real directed(mpfr_prec_t prec, mpfr_rnd_t rnd, Fn fn) {
  Real r(prec);
  fn(r.get(), rnd);
  return r;
}

}  // namespace

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
}

Interval Interval::point(const Real& x) { return Interval(x, x); }

Interval Interval::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
  return Interval(Real(z, prec, MPFR_RNDD), Real(z, prec, MPFR_RNDU));
}

Interval Interval::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
  return Interval(Real(q, prec, MPFR_RNDD), Real(q, prec, MPFR_RNDU));
}

Interval Interval::parse(const std::string& s, mpfr_prec_t prec) {
  return Interval(Real::parse(s, prec, MPFR_RNDD), Real::parse(s, prec, MPFR_RNDU));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

Interval Interval::ball(const Real& c, const Real& r) {
  mpfr_prec_t p = std::max(c.prec(), r.prec());
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), c.get(), r.get(), MPFR_RNDD);
  mpfr_add(hi.get(), c.get(), r.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Real Interval::mid() const {
  Real m(prec());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Real Interval::width() const {
  Real w(prec());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Real Interval::mag() const { return max(abs(lo_), abs(hi_)); }

Real Interval::mig() const {
  if (contains_zero()) return Real(prec());
  return min(abs(lo_), abs(hi_));
}

Interval operator+(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  Real lo(p), hi(p);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  const Real* xs[2] = {&a.lo(), &a.hi()};
  const Real* ys[2] = {&b.lo(), &b.hi()};
  Real lo(p), hi(p), t(p);
  bool first = true;
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorKind::IllConditioned, "interval division by a range containing zero");
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  Real lo(p), hi(p);
  mpfr_ui_div(lo.get(), 1, b.hi().get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, b.lo().get(), MPFR_RNDU);
  return a * Interval(std::move(lo), std::move(hi));
}

Interval sqr(const Interval& a) {
  Real lo(a.prec()), hi(a.prec());
  Real m = a.mig(), M = a.mag();
  mpfr_sqr(lo.get(), m.get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), M.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& a) {
  if (a.hi().sign() < 0) throw Error(ErrorKind::DomainError, "sqrt of negative interval");
  Real lo(a.prec()), hi(a.prec());
  if (a.lo().sign() > 0) mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& a) {
  if (!a.positive()) throw Error(ErrorKind::DomainError, "log of non-positive interval");
  Real lo(a.prec()), hi(a.prec());
  mpfr_log(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& a) {
  Real lo(a.prec()), hi(a.prec());
  mpfr_exp(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& a, const Interval& b) { return exp(b * log(a)); }

Interval pow_ui(const Interval& a, unsigned long k) {
  Interval r = Interval::from_long(1, a.prec());
  Interval base = a;
  while (k) {
    if (k & 1UL) r = r * base;
    k >>= 1;
    if (k) base = (base.lo().sign() >= 0 || base.hi().sign() <= 0) ? base * base : sqr(base);
  }
  return r;
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  return Interval(Real(a.prec()), a.mag());
}

Interval max(const Interval& a, const Interval& b) { return Interval(max(a.lo(), b.lo()), max(a.hi(), b.hi())); }
Interval min(const Interval& a, const Interval& b) { return Interval(min(a.lo(), b.lo()), min(a.hi(), b.hi())); }

Interval interval_pi(mpfr_prec_t prec) {
  return Interval(directed(prec, MPFR_RNDD, [](mpfr_ptr r, mpfr_rnd_t d) { mpfr_const_pi(r, d); }),
                  directed(prec, MPFR_RNDU, [](mpfr_ptr r, mpfr_rnd_t d) { mpfr_const_pi(r, d); }));
}

Interval interval_e(mpfr_prec_t prec) { return exp(Interval::from_long(1, prec)); }

Interval interval_euler_gamma(mpfr_prec_t prec) {
  return Interval(directed(prec, MPFR_RNDD, [](mpfr_ptr r, mpfr_rnd_t d) { mpfr_const_euler(r, d); }),
                  directed(prec, MPFR_RNDU, [](mpfr_ptr r, mpfr_rnd_t d) { mpfr_const_euler(r, d); }));
}

ComplexInterval ComplexInterval::disk_hull(const Complex& c, const Real& r) {
  return {Interval::ball(c.re, r), Interval::ball(c.im, r)};
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re - b.re, a.im - b.im}; }
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexInterval operator*(const ComplexInterval& a, const Interval& s) { return {a.re * s, a.im * s}; }

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInput: return "zero input";
    case ErrorKind::DegreeLimit: return "degree limit";
    case ErrorKind::CertificationFailure: return "certification failure";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::InconclusiveCheck: return "inconclusive check";
    case ErrorKind::NotAField: return "not a field";
    case ErrorKind::PrecisionExhausted: return "precision exhausted";
    case ErrorKind::TheoremInapplicable: return "theorem inapplicable";
    case ErrorKind::HypothesisViolated: return "hypothesis violated";
    case ErrorKind::DomainError: return "domain error";
    case ErrorKind::DegreeTooSmall: return "degree too small for Voutier";
    case ErrorKind::NoUnconditionalBound: return "no unconditional bound";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::ParseError: return "parse error";
  }
  return "unknown";
}

}  // namespace relheight
