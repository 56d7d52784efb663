#pragma once

// Exact linear algebra: integral LLL reduction, Hermite normal form, and
// Gaussian elimination over Q.

#include <gmpxx.h>

#include <vector>

namespace relheight {

using ZMatrix = std::vector<std::vector<mpz_class>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

// LLL-reduces the rows of `basis` in place with Lovasz constant delta_num /
// delta_den (default 99/100). Rows must be linearly independent. All
// arithmetic is exact (integral Gram-Schmidt).
void lll_reduce(ZMatrix& basis, long delta_num = 99, long delta_den = 100);

// Row Hermite normal form of the row lattice: upper echelon, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
ZMatrix hermite_normal_form(ZMatrix rows);

// Reduced row echelon form over Q; returns the pivot columns.
std::vector<size_t> row_reduce(QMatrix& m);
size_t rank(QMatrix m);
// Basis of {x : m x = 0}.
QMatrix nullspace(QMatrix m);
// Some x with m x = b, if the system is consistent.
bool solve(const QMatrix& m, const std::vector<mpq_class>& b, std::vector<mpq_class>& x);

}  // namespace relheight
