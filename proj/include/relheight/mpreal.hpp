#pragma once

// Thin RAII layer over MPFR: a point type (Real, round-to-nearest), a
// complex point type for iterative solvers, and outward-rounded real and
// complex intervals for everything that gets published.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace relheight {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrecision) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x, mpfr_prec_t prec) : Real(static_cast<long>(x), prec) {}
  Real(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), rnd);
  }
  Real(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
  }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real parse(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Exact dyadic value as a rational.
  mpq_class to_mpq() const;
  // Decimal with `digits` significant digits, rounded in direction `rnd`.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, long k);
Real operator/(const Real& a, long k);

bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real pow(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real ldexp(const Real& a, long e);
Real const_pi(mpfr_prec_t prec);

// Base-2 exponent of |a| (0 for zero).
long exponent2(const Real& a);

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return re.prec(); }
  Complex conj() const { return Complex(re, -im); }
  Real norm2() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm2()); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);

// Closed real interval [lo, hi]; all operations round outward.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision) : lo_(prec), hi_(prec) {}
  Interval(Real lo, Real hi);

  static Interval point(const Real& x);
  static Interval from_mpz(const mpz_class& z, mpfr_prec_t prec);
  static Interval from_mpq(const mpq_class& q, mpfr_prec_t prec);
  static Interval from_long(long v, mpfr_prec_t prec) { return from_mpz(mpz_class(v), prec); }
  // Decimal string enclosed outward.
  static Interval parse(const std::string& s, mpfr_prec_t prec);
  static Interval hull(const Interval& a, const Interval& b);
  // [c - r, c + r]
  static Interval ball(const Real& c, const Real& r);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t prec() const { return lo_.prec(); }

  Real mid() const;
  Real width() const;   // upper bound on hi - lo
  Real mag() const;     // upper bound on max |x|
  Real mig() const;     // lower bound on min |x|

  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool is_point() const { return lo_ == hi_; }

 private:
  Real lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // throws if b contains 0

Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval log(const Interval& a);  // requires a > 0
Interval exp(const Interval& a);
Interval pow(const Interval& a, const Interval& b);  // a > 0
Interval pow_ui(const Interval& a, unsigned long k);
Interval abs(const Interval& a);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

Interval interval_pi(mpfr_prec_t prec);
Interval interval_e(mpfr_prec_t prec);
Interval interval_euler_gamma(mpfr_prec_t prec);

struct ComplexInterval {
  Interval re, im;

  explicit ComplexInterval(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval point(const Complex& z) { return {Interval::point(z.re), Interval::point(z.im)}; }
  // Axis-aligned square around the disk |z - c| <= r.
  static ComplexInterval disk_hull(const Complex& c, const Real& r);

  Interval norm2() const { return sqr(re) + sqr(im); }
  Interval abs() const { return sqrt(norm2()); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const Interval& s);

}  // namespace relheight
