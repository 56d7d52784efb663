#pragma once

// Signed real stored as sign and natural log of the magnitude, so products
// like exp(64 r^2 r! ...) stay representable.

#include <string>

#include "relheight/mpreal.hpp"

namespace relheight {

class LogScalar {
 public:
  explicit LogScalar(mpfr_prec_t prec = kDefaultPrecision) : sign_(0), logmag_(prec) {}
  LogScalar(int sign, Real logmag);

  static LogScalar zero(mpfr_prec_t prec = kDefaultPrecision) { return LogScalar(prec); }
  static LogScalar one(mpfr_prec_t prec = kDefaultPrecision) { return LogScalar(1, Real(prec)); }
  static LogScalar from_real(const Real& x);
  static LogScalar from_mpz(const mpz_class& z, mpfr_prec_t prec);
  static LogScalar from_mpq(const mpq_class& q, mpfr_prec_t prec);
  static LogScalar from_log(const Real& logmag) { return LogScalar(1, logmag); }

  int sign() const { return sign_; }
  // Meaningless when sign() == 0.
  const Real& logmag() const { return logmag_; }
  mpfr_prec_t prec() const { return logmag_.prec(); }

  // exp(logmag) with sign; overflows to +-inf beyond the MPFR exponent range.
  Real to_real() const;
  double to_double() const { return to_real().to_double(); }
  // Scientific notation when |logmag| <= 700, else "exp(L)" / "-exp(L)".
  std::string to_decimal(int digits = 20) const;

  LogScalar inverse() const;
  LogScalar abs() const { return sign_ == 0 ? *this : LogScalar(1, logmag_); }

 private:
  int sign_;
  Real logmag_;
};

LogScalar operator*(const LogScalar& a, const LogScalar& b);
LogScalar operator/(const LogScalar& a, const LogScalar& b);
LogScalar operator+(const LogScalar& a, const LogScalar& b);
LogScalar operator-(const LogScalar& a);
LogScalar operator-(const LogScalar& a, const LogScalar& b);
// a^e for a > 0.
LogScalar pow(const LogScalar& a, const Real& e);

bool operator<(const LogScalar& a, const LogScalar& b);
inline bool operator>(const LogScalar& a, const LogScalar& b) { return b < a; }
inline bool operator<=(const LogScalar& a, const LogScalar& b) { return !(b < a); }
inline bool operator>=(const LogScalar& a, const LogScalar& b) { return !(a < b); }

}  // namespace relheight
