#pragma once

#include "csl_lab/matrix.hpp"

namespace csl_lab {

/// H is the canonical column form, U the unimodular column record with
/// M * U = [0 | H].
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};

/// Canonical basis of the column span of a full-row-rank d x k matrix
/// (k >= d): H is d x d upper triangular, h(i,i) > 0 and
/// 0 <= h(i,j) < h(i,i) for j > i.  Throws on rank-deficient input.
HnfResult hnf(const IntMatrix& m);

/// hnf() without the operation record.
IntMatrix hnf_basis(const IntMatrix& m);

/// Basis of {x : m x = 0} over the integers, one column per kernel
/// generator, in reduced echelon form with primitive columns.  The result
/// has m.cols() rows and (m.cols() - rank) columns.
IntMatrix integer_kernel(const IntMatrix& m);

/// Fraction-free determinant (Bareiss).
Int det(const IntMatrix& m);

Rational det(const RatMatrix& m);

/// Exact inverse; throws on singular input.
RatMatrix inverse(const RatMatrix& m);

inline bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

/// Solve a x = b exactly for square nonsingular a.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

}  // namespace csl_lab
