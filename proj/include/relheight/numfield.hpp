#pragma once

// Absolute number fields K = Q[x]/(P) with P monic irreducible, their
// elements in the power basis, polynomials over K, Trager factorization,
// composita K(a), torsion orders and relative Galois data.
//
// Every field carries one distinguished complex embedding: the root of P in
// the isolating box `embedding`. Root index 0 in canonical order unless the
// field was built as a compositum, where the embedding extends those of K
// and of the adjoined number.

#include <optional>
#include <utility>
#include <vector>

#include "relheight/exactpoly.hpp"
#include "relheight/heights.hpp"
#include "relheight/logscalar.hpp"
#include "relheight/rootcert.hpp"

namespace relheight {

inline constexpr int kFieldDegreeLimit = 24;

struct FieldElement {
  std::vector<mpq_class> coords;  // length tau, coefficient of theta^i

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords == b.coords; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

// Polynomial with coefficients in a field, ascending, no trailing zeros.
using FieldPolynomial = std::vector<FieldElement>;

struct FieldOptions {
  std::optional<mpz_class> disc_override;
  std::optional<bool> galois_tower;
  bool compute_torsion = true;
  size_t embedding_index = 0;
};

struct NumberField {
  IntPolynomial defpoly;
  int tau = 1;
  mpz_class disc_abs = 1;
  bool disc_maximal = true;          // false: |disc(defpoly)|, possibly a multiple of the true value
  unsigned torsion_order_f = 2;      // 0 when not computed
  std::optional<bool> galois_tower_flag;
  ComplexBox embedding;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_rational(const mpq_class& q) const;
  bool is_zero(const FieldElement& a) const;
  bool is_rational(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, const mpq_class& q) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }
  // Negative exponents invert.
  FieldElement pow(const FieldElement& a, long k) const;

  // Evaluates an integer polynomial at a field element.
  FieldElement eval(const IntPolynomial& p, const FieldElement& a) const;
  // Minimal polynomial over Q, primitive with positive leading coefficient.
  IntPolynomial minpoly(const FieldElement& a) const;
  bool is_root_of_unity(const FieldElement& a) const;

  ComplexBox embedding_at(long bits) const;
  // Image under the distinguished embedding.
  ComplexInterval embed(const FieldElement& a, long bits) const;
  // Image under the embedding sending theta into `root`.
  ComplexInterval embed_at(const FieldElement& a, const ComplexBox& root) const;
};

// Throws not a field when p is not irreducible, degree limit above degree 24,
// invalid argument when p is not monic.
NumberField make_field(const IntPolynomial& p, const FieldOptions& opts = {});
NumberField rational_field();

// Arithmetic on polynomials over K.
namespace fpoly {
FieldPolynomial from_int(const NumberField& K, const IntPolynomial& p);
void trim(const NumberField& K, FieldPolynomial& a);
int degree(const FieldPolynomial& a);
FieldPolynomial add(const NumberField& K, const FieldPolynomial& a, const FieldPolynomial& b);
FieldPolynomial sub(const NumberField& K, const FieldPolynomial& a, const FieldPolynomial& b);
FieldPolynomial mul(const NumberField& K, const FieldPolynomial& a, const FieldPolynomial& b);
std::pair<FieldPolynomial, FieldPolynomial> divrem(const NumberField& K, const FieldPolynomial& a,
                                                   const FieldPolynomial& b);
FieldPolynomial monic(const NumberField& K, const FieldPolynomial& a);
FieldPolynomial gcd(const NumberField& K, FieldPolynomial a, FieldPolynomial b);
FieldElement eval(const NumberField& K, const FieldPolynomial& a, const FieldElement& x);
// p(c0 + c1 x)
FieldPolynomial compose_linear(const NumberField& K, const FieldPolynomial& p, const FieldElement& c0,
                               const FieldElement& c1);
bool less(const FieldPolynomial& a, const FieldPolynomial& b);
}  // namespace fpoly

// Monic irreducible factors over K with multiplicities, sorted by degree and
// then coordinates. Requires deg(p) * tau <= 64.
std::vector<std::pair<FieldPolynomial, int>> factor_over_field(const NumberField& K, const IntPolynomial& p);

// [K(a):K].
int relative_degree(const NumberField& K, const AlgebraicNumber& a);

struct Compositum {
  NumberField field;                   // L = K(a), primitive element c(a + k theta)
  FieldElement theta_image;            // generator of K inside L
  FieldElement a_image;                // a inside L
  unsigned shift = 0;                  // k
  int relative_degree = 1;             // [L:K]
  FieldPolynomial relative_minpoly;    // monic minimal polynomial of a over K
};

// Throws degree limit when [L:Q] > 24.
Compositum compositum(const NumberField& K, const AlgebraicNumber& a, bool compute_torsion = true);

// Largest m with a primitive m-th root of unity in K.
unsigned field_torsion_order(const NumberField& K);

// Some x in F with m(x) = 0 whose image lies in the disk `target`, found by
// integer relation search and verified exactly. nullopt when none is found
// up to `max_bits`; this is not a proof of absence.
std::optional<FieldElement> recognize_root(const NumberField& F, const IntPolynomial& m, const ComplexBox& target,
                                           long max_bits = 2048);

struct RelativeData {
  int delta = 1;
  unsigned e = 2;
  bool is_galois = true;
  std::vector<AlgebraicNumber> conjugates_over_K;  // conjugates_over_K[0] is a
  Compositum extension;
  // Images of conjugates_over_K in extension.field; filled when is_galois.
  std::vector<FieldElement> conjugate_images;
};

RelativeData relative_data(const NumberField& K, const AlgebraicNumber& a);

// [K(b_1, ..., b_delta):K] with b_i = a_i^e. Requires rel.is_galois.
int power_subfield_degree(const NumberField& K, const RelativeData& rel);

// True when K/Q is normal.
bool is_galois_over_q(const NumberField& K);

// 1 when a Galois tower is declared, tau <= 2, or K/Q is Galois; tau! otherwise.
LogScalar g_flag(const NumberField& K);

}  // namespace relheight
