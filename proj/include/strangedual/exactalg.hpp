#pragma once

#include <optional>
#include <vector>

#include "strangedual/intmat.hpp"
#include "strangedual/intpoly.hpp"

namespace strangedual::exactalg {

// Inertia counts of a symmetric integer form.
struct Signature {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;
    bool operator==(const Signature&) const = default;
};

// Fraction-free determinant (Bareiss elimination).
Int det_bareiss(const IntMat& m);

// Invariant factors d1 | d2 | ... of the Smith normal form, nonnegative,
// with trailing zeros for rank deficiency.  Length is min(rows, cols).
std::vector<Int> smith_invariant_factors(IntMat m);

// Inertia of a symmetric matrix by congruence diagonalization over the
// rationals; a 2x2 off-diagonal pivot is used when every remaining diagonal
// entry vanishes.
Signature signature_of(const IntMat& m);

// Monic characteristic polynomial det(tI - m), exact.
IntPoly char_poly(const IntMat& m);

// d-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned d);

// Orders d (sorted, with multiplicity) such that p equals the product of the
// corresponding cyclotomic polynomials, searching d <= d_max; absent when no
// such factorization exists.  p must be monic and nonconstant.
std::optional<std::vector<unsigned>> cyclotomic_factorization(IntPoly p, unsigned d_max);

// Permutation pi with a(i,j) = b(pi(i), pi(j)) for all i, j — equivalently
// P a P^T = b for the matrix P of pi — or absent.  Both matrices must be
// symmetric and of equal size.  Backtracking pruned by diagonal values and
// sorted row multisets; intended for matrices up to about 24x24.
std::optional<std::vector<std::size_t>> perm_congruent(const IntMat& a, const IntMat& b);

}  // namespace strangedual::exactalg
