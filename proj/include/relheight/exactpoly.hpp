#pragma once

// Exact univariate polynomials over Z and Q.
//
// Coefficients are stored in ascending order: coeffs()[i] multiplies x^i, so
// coeffs()[0] is the constant term. The zero polynomial has no coefficients
// and degree -1.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relheight {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, int k);
  static IntPolynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero outside the stored range.
  mpz_class coeff(int i) const;
  const mpz_class& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  IntPolynomial derivative() const;
  // p(x) -> p(x + a)
  IntPolynomial taylor_shift(const mpz_class& a) const;
  // p(x) -> x^deg p(1/x)
  IntPolynomial reversed() const;
  // Number of leading zero coefficients (the power of x dividing p).
  int x_valuation() const;
  IntPolynomial shift_down(int k) const;
  // Compact human form, e.g. "x^2 - 2".
  std::string to_string() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const mpz_class& c);
IntPolynomial pow(const IntPolynomial& a, unsigned k);

// Canonical ordering used for factor lists: degree first, then coefficients
// lexicographically from the constant term up.
bool canonical_less(const IntPolynomial& a, const IntPolynomial& b);

// Rational polynomial as numerator / positive denominator with
// gcd(content(numerator), denominator) = 1.
class RatPolynomial {
 public:
  RatPolynomial() : den_(1) {}
  RatPolynomial(IntPolynomial num, mpz_class den);
  explicit RatPolynomial(const IntPolynomial& p) : RatPolynomial(p, 1) {}
  static RatPolynomial from_coeffs(const std::vector<mpq_class>& c);

  const IntPolynomial& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  int degree() const { return num_.degree(); }
  bool is_zero() const { return num_.is_zero(); }
  std::vector<mpq_class> coeffs() const;
  mpq_class eval(const mpq_class& x) const;

  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  IntPolynomial num_;
  mpz_class den_;
};

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
// Euclidean division over Q; throws on division by zero.
std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& a, const RatPolynomial& b);

struct FactorList {
  int unit = 1;           // +1 or -1
  mpz_class content = 1;  // positive
  std::vector<std::pair<IntPolynomial, int>> factors;

  // unit * content * prod factor^multiplicity
  IntPolynomial expand() const;
  int factor_count() const;
};

inline constexpr int kFactorDegreeLimit = 64;

// Returns (positive content, primitive part); the sign stays on the primitive part.
std::pair<mpz_class, IntPolynomial> content_and_primitive(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
// Primitive part scaled so the leading coefficient is positive.
IntPolynomial normalize(const IntPolynomial& p);

// a = q*b exactly over Z, if such q exists.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);
// Remainder of lc(b)^(deg a - deg b + 1) * a by b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
// Greatest common divisor, primitive with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);
// Yun's decomposition of the primitive part: p = c * prod s_i^i, each s_i
// primitive squarefree with positive leading coefficient. Entries with
// constant s_i are omitted.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Resultant with the convention res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a),
// computed by the subresultant PRS. res(p, q) = (-1)^(deg p deg q) res(q, p).
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q);
// disc(p) = (-1)^(d(d-1)/2) res(p, p') / lc(p)
mpz_class discriminant(const IntPolynomial& p);

// Polynomial in two variables: entry i multiplies x^i and is a polynomial in y.
using BiPolynomial = std::vector<IntPolynomial>;

// Res_y(A, B) as a polynomial in x, by evaluation at integer points and
// interpolation.
IntPolynomial resultant_y(const BiPolynomial& A, const BiPolynomial& B);
// A polynomial in y alone, as a BiPolynomial.
BiPolynomial constant_in_x(const IntPolynomial& p);

// Complete factorization over Q (Zassenhaus: squarefree, mod-p, Hensel lift,
// recombination). Factors sorted by canonical_less.
FactorList factor_rationals(const IntPolynomial& p, int degree_limit = kFactorDegreeLimit);
bool is_irreducible(const IntPolynomial& p);

IntPolynomial cyclotomic(unsigned m);
std::uint64_t euler_phi(std::uint64_t n);

// True iff p = +-x^k * (product of cyclotomic polynomials).
bool kronecker_test(const IntPolynomial& p);
// m such that p == Phi_m (up to sign), if any.
std::optional<unsigned> cyclotomic_index(const IntPolynomial& p);

struct CyclotomicSplit {
  int x_power = 0;
  std::vector<std::pair<unsigned, int>> cyclotomic;  // (m, multiplicity)
  IntPolynomial rest;  // p / (x^k prod Phi_m^e), no cyclotomic factors left
};
CyclotomicSplit split_cyclotomic(const IntPolynomial& p);

}  // namespace relheight
