#include "relheight/logscalar.hpp"

#include <cstdio>
#include <utility>

#include "relheight/error.hpp"

namespace relheight {

LogScalar::LogScalar(int sign, Real logmag) : sign_(sign > 0 ? 1 : (sign < 0 ? -1 : 0)), logmag_(std::move(logmag)) {}

LogScalar LogScalar::from_real(const Real& x) {
  if (x.is_zero()) return LogScalar(x.prec());
  return LogScalar(x.sign(), log(relheight::abs(x)));
}

LogScalar LogScalar::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
  if (z == 0) return LogScalar(prec);
  Real r(mpz_class(::abs(z)), prec);
  return LogScalar(sgn(z), log(r));
}

LogScalar LogScalar::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
  if (q == 0) return LogScalar(prec);
  Real num(mpz_class(::abs(q.get_num())), prec), den(q.get_den(), prec);
  return LogScalar(sgn(q), log(num) - log(den));
}

Real LogScalar::to_real() const {
  if (sign_ == 0) return Real(prec());
  Real v = exp(logmag_);
  return sign_ < 0 ? -v : v;
}

std::string LogScalar::to_decimal(int digits) const {
  if (sign_ == 0) return "0";
  Real bound(700L, prec());
  if (relheight::abs(logmag_) <= bound) {
    Real v = to_real();
    std::string s(static_cast<size_t>(digits) + 64, '\0');
    int n = mpfr_snprintf(s.data(), s.size(), "%.*Re", digits - 1, v.get());
    s.resize(static_cast<size_t>(n));
    return s;
  }
  std::string s(static_cast<size_t>(digits) + 64, '\0');
  int n = mpfr_snprintf(s.data(), s.size(), "%.*Rg", digits, logmag_.get());
  s.resize(static_cast<size_t>(n));
  return (sign_ < 0 ? "-exp(" : "exp(") + s + ")";
}

LogScalar LogScalar::inverse() const {
  if (sign_ == 0) throw Error(ErrorKind::DomainError, "domain error: inverse of zero");
  return LogScalar(sign_, -logmag_);
}

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
  if (a.sign() == 0 || b.sign() == 0) return LogScalar(std::max(a.prec(), b.prec()));
  return LogScalar(a.sign() * b.sign(), a.logmag() + b.logmag());
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) { return a * b.inverse(); }

LogScalar operator-(const LogScalar& a) { return a.sign() == 0 ? a : LogScalar(-a.sign(), a.logmag()); }

LogScalar operator+(const LogScalar& a, const LogScalar& b) {
  if (a.sign() == 0) return b;
  if (b.sign() == 0) return a;
  const bool a_big = a.logmag() >= b.logmag();
  const LogScalar& hi = a_big ? a : b;
  const LogScalar& lo = a_big ? b : a;
  const mpfr_prec_t prec = std::max(a.prec(), b.prec());
  Real t = exp(lo.logmag() - hi.logmag());  // in (0, 1]
  Real s(prec);
  if (a.sign() == b.sign()) {
    mpfr_log1p(s.get(), t.get(), MPFR_RNDN);
    return LogScalar(hi.sign(), hi.logmag() + s);
  }
  Real neg = -t;
  if (t == Real(1L, prec)) return LogScalar(prec);
  mpfr_log1p(s.get(), neg.get(), MPFR_RNDN);
  return LogScalar(hi.sign(), hi.logmag() + s);
}

LogScalar operator-(const LogScalar& a, const LogScalar& b) { return a + (-b); }

LogScalar pow(const LogScalar& a, const Real& e) {
  if (a.sign() <= 0) throw Error(ErrorKind::DomainError, "domain error: power of a non-positive value");
  return LogScalar(1, a.logmag() * e);
}

bool operator<(const LogScalar& a, const LogScalar& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign();
  if (a.sign() == 0) return false;
  return a.sign() > 0 ? a.logmag() < b.logmag() : a.logmag() > b.logmag();
}

}  // namespace relheight
