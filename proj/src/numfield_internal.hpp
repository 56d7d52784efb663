#pragma once

#include <vector>

#include "relheight/numfield.hpp"

namespace relheight::detail {

// Squarefree norm Res_y(P(y), m(x - k y)) for the least k, its factors over
// Q, and the factor vanishing at a + k theta under the embeddings.
struct NormSelection {
  unsigned k = 0;
  std::vector<IntPolynomial> factors;
  size_t selected = 0;
};

// Res_y(P(y), s(x - k y)).
IntPolynomial shifted_norm(const IntPolynomial& P, const IntPolynomial& s, unsigned k);
// Least k making the norm of s squarefree.
unsigned squarefree_shift(const IntPolynomial& P, const IntPolynomial& s, IntPolynomial& norm);

NormSelection select_norm_factor(const NumberField& K, const AlgebraicNumber& a);

// Interval value of a polynomial over K at z, with K embedded by theta_box.
ComplexInterval evaluate_over(const NumberField& K, const FieldPolynomial& g, const ComplexBox& theta_box,
                              const ComplexInterval& z);

// Odd primes in increasing order, for modular witnesses.
const std::vector<std::uint64_t>& witness_primes();

}  // namespace relheight::detail
