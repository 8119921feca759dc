#ifndef CKS_LINALG_HPP
#define CKS_LINALG_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

// Exact integer/rational linear algebra used throughout: Hermite normal
// forms of row lattices, fraction-free determinants, characteristic
// polynomials. Everything is dense; dimensions stay in the single digits.

namespace cks {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;   // row-major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

IntMat identity_matrix(std::size_t n);
IntMat zero_matrix(std::size_t rows, std::size_t cols);

IntVec mat_vec_mul(const IntMat& m, const IntVec& v);
// Row vector times matrix: used for coordinate vectors acting on basis maps.
IntVec vec_mat_mul(const IntVec& v, const IntMat& m);
IntMat mat_mul(const IntMat& a, const IntMat& b);
bool mat_eq(const IntMat& a, const IntMat& b);

// Determinant by fraction-free Gaussian elimination (Bareiss).
Int det(IntMat m);
Int trace(const IntMat& m);

// Row Hermite normal form of a (possibly non-square, possibly rank-deficient)
// integer matrix whose rows generate a lattice. The result keeps only the
// nonzero rows. Pivots are positive; entries above each pivot are reduced
// into [0, pivot). This form is canonical: rerunning is the identity.
IntMat hnf(IntMat m);

// Solves x * H = target over the integers for upper-triangular full-rank
// square H (rows of H are a lattice basis). Returns false if target is not
// in the lattice.
bool lattice_solve(const IntMat& h, const IntVec& target, IntVec* coeffs = nullptr);

// Reduces v modulo the lattice spanned by the rows of the full-rank HNF h,
// yielding the canonical representative with 0 <= v[i] < h[i][i].
IntVec lattice_reduce(const IntMat& h, IntVec v);

// Characteristic polynomial of an integer matrix, monic, coefficients in
// ascending degree order. Computed by interpolating det(xI - M) at integer
// nodes, so it stays exact.
IntVec char_poly(const IntMat& m);

// Kronecker (tensor) product, eigenvalues multiply pairwise.
IntMat kronecker_product(const IntMat& a, const IntMat& b);

// Exact inverse of a square rational matrix. Throws if singular.
RatMat rat_inverse(RatMat m);
RatVec rat_vec_mat_mul(const RatVec& v, const RatMat& m);

}  // namespace cks

#endif
