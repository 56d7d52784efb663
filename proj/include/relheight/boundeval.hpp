#pragma once

// Explicit height lower bounds and the constants they are assembled from.
// Every value is a LogScalar; the Delsinne constant alone has a logarithm
// beyond 10^4 at n = 1.

#include <map>
#include <string>
#include <vector>

#include "relheight/logscalar.hpp"

namespace relheight {

struct ConstantsConfig {
  mpq_class eps{1, 2};  // > 0
  mpq_class c_ad{1};    // absolute constant of the abelian bound; placeholder
  long precision_bits = kDefaultPrecision;
  bool use_feit = false;  // n(rho) from the finite subgroup table
};

struct BoundReport {
  std::string bound_id;
  LogScalar value;  // lower bound for h(alpha)
  std::string case_label;
  bool conditional = false;  // depends on c_ad
  std::map<std::string, std::string> params;
};

// Euler's constant from a stored digit string.
Real euler_gamma(mpfr_prec_t prec);

// 2 / (x (log 3x)^3), x >= 1.
LogScalar voutier_f1(const Real& x);
// (1 / 4x) (log log x / log x)^3; domain error below e.
LogScalar voutier_g1(const Real& x);
// Larger of the two Voutier forms valid at degree d >= 2.
LogScalar voutier_height_floor(long d, mpfr_prec_t prec = kDefaultPrecision);
// (1/d) log(1 + (log log d / log d)^3 / 1200), d >= 3.
LogScalar dobrowolski_floor(long d, mpfr_prec_t prec = kDefaultPrecision);
// log 5 / 12.
LogScalar abelian_reference(mpfr_prec_t prec = kDefaultPrecision);

// Lower bound for phi(n)/n, n >= 3.
Real rosser_totient_floor(const mpz_class& n, mpfr_prec_t prec = kDefaultPrecision);
// C(eps) with phi(n)^(1+eps) / n >= C(eps) for n >= 3.
Real phi_constant_C(const mpq_class& eps, mpfr_prec_t prec = kDefaultPrecision);
// theta > 0 with 2 theta^2 = eps / (1 + eps).
Real phi_constant_theta(const mpq_class& eps, mpfr_prec_t prec = kDefaultPrecision);

// Bound on finite subgroups of GL_rho(Z): 3^(rho^2), or the exact maximum
// over GL_rho(Q) when use_feit is set.
LogScalar n_rho(long rho, bool use_feit, mpfr_prec_t prec = kDefaultPrecision);
mpz_class feit_order(long rho);
// |GL_rho(Z/3Z)|, rho <= 16.
mpz_class gl3_order(long rho);

// Floor for h(a_1)...h(a_n) over independent numbers in a degree D field.
LogScalar amoroso_viada_floor(long n, const mpz_class& D, mpfr_prec_t prec = kDefaultPrecision);
// Conditional floor for h(a) with [A(a):A] = D over an abelian A / B.
BoundReport amoroso_delsinne_floor(const LogScalar& D, const mpz_class& disc_abs, const LogScalar& g,
                                   const ConstantsConfig& cfg);

struct DelsinneConstants {
  mpz_class kappa;
  mpq_class eta;
  mpz_class mu;  // with the undefined factorial argument read as n
  LogScalar c;
};
DelsinneConstants delsinne_constants(long n, mpfr_prec_t prec = kDefaultPrecision);
// 1 / (c(n) D (log 3D)^kappa(n)).
LogScalar delsinne_product_floor(long n, const mpz_class& D_ab, mpfr_prec_t prec = kDefaultPrecision);

// Smallest integer greater than 1/eps.
long r_of_eps(const mpq_class& eps);

struct Theorem1Input {
  long delta = 1;
  long tau = 1;
  long d = 2;  // [Q(alpha):Q]
  long rho = 1;
  long e = 2;  // roots of unity in K(alpha)
  long f = 2;  // roots of unity in K
  mpz_class disc_abs{1};
  LogScalar g = LogScalar::one();
};

// One report per quantity the case analysis produces, then "thm1", the
// minimum. Throws theorem inapplicable when rho = 0.
std::vector<BoundReport> theorem1_bound(const Theorem1Input& in, const ConstantsConfig& cfg);

struct Theorem2Input {
  mpz_class eta{1};
  long tau = 1;
  long r = 1;
  long rho = 1;
  long e = 0;          // roots of unity in F; 0 when unknown
  long d_alpha_e = 0;  // [Q(alpha^e):Q]; 0 when unknown
};

// Case 1 or case 2 report; case 2 adds the power form h(alpha^e) / e when
// e and d_alpha_e are known. Throws hypothesis violated when rho < r.
std::vector<BoundReport> theorem2_bound(const Theorem2Input& in, const ConstantsConfig& cfg);
// Theorem 2 at r = 1, relabeled.
std::vector<BoundReport> corollary_bound(const Theorem2Input& in, const ConstantsConfig& cfg);

BoundReport voutier_bound(long d, mpfr_prec_t prec = kDefaultPrecision);

// Largest unconditional value; the largest conditional one when no
// unconditional report exists and strict is false.
BoundReport best_bound(const std::vector<BoundReport>& reports, bool strict);

}  // namespace relheight
