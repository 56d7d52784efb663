#pragma once

// Certified complex root isolation for integer polynomials.
//
// Each root is reported as a disk (center, radius) that provably contains
// exactly one root of the squarefree part. Disks of distinct roots are
// disjoint with radius below a third of the center separation.

#include <vector>

#include "relheight/exactpoly.hpp"
#include "relheight/mpreal.hpp"

namespace relheight {

inline constexpr long kMaxRootPrecision = 8192;

struct ComplexBox {
  Complex center;
  Real radius;

  ComplexInterval enclosure() const { return ComplexInterval::disk_hull(center, radius); }
  // [max(0, |c| - r), |c| + r]
  Interval modulus() const;
  bool is_real() const { return center.im.is_zero(); }
  bool contains(const ComplexBox& inner) const;
};

struct RootSet {
  IntPolynomial squarefree;  // the polynomial the boxes certify
  std::vector<ComplexBox> boxes;
  long precision_bits = kDefaultPrecision;
};

// Boxes sorted by descending |center|, then descending real part, then
// descending imaginary part. Every radius is at most 2^-bits * max(1, |c|).
// Throws certification failure when 8192 bits do not suffice.
RootSet isolate_roots(const IntPolynomial& p, long bits = kDefaultPrecision);

// Shrinks a disk around a simple root of p until the radius is at most
// 2^-target_bits * max(1, |c|). The result lies inside the input disk.
ComplexBox refine(const ComplexBox& box, const IntPolynomial& p, long target_bits);

// Interval evaluation of p over a complex interval.
ComplexInterval evaluate(const IntPolynomial& p, const ComplexInterval& z);

}  // namespace relheight
