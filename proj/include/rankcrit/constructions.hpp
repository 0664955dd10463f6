#pragma once

#include "rankcrit/matrix_space.hpp"
#include "rankcrit/subspace.hpp"

namespace rankcrit {

/// Witness that a pencil is a compression space: every element of the pencil
/// maps U into W, with dim W < dim U.
struct CompressionWitness {
    Subspace U;
    Subspace W;
};

/// {A in End(Q^n) : A U <= W}. Requires dim W < dim U (the singular regime).
MatrixSpace compression_space(int n, const Subspace& u, const Subspace& w);

/// Convenience: U = span(e_1..e_k), W = span(e_1..e_{k-1}).
MatrixSpace standard_compression_space(int n, int k);

/// All skew-symmetric n x n matrices, basis E_ij - E_ji for i < j.
MatrixSpace skew_space(int n);

/// The space { phi(x) : x in Q^n } where phi(x) has columns A_1 x, ..., A_n x.
/// All A_i must be skew-symmetric (then x^t phi(x) = 0 identically).
MatrixSpace pare_space(const std::vector<Matrix>& skews);

/// The standard choice A_i = E_{i,i+1} - E_{i+1,i} (i < n), A_n = E_{n,1} - E_{1,n}.
MatrixSpace pare_standard(int n);

/// Decomposes a singular two-dimensional pencil span{A, B} as a compression
/// space: extracts a polynomial kernel vector u(s) of sA + B, re-homogenizes,
/// and returns U = span of its coefficient vectors, W = A U. The returned
/// witness is re-verified: A U <= W, B U <= W, dim W < dim U.
/// Throws NotSingular if det(sA + tB) is not identically zero and
/// NotTwoDimensional if A, B do not span a 2-dimensional space.
CompressionWitness pencil_compression_witness(const Matrix& a, const Matrix& b);

}  // namespace rankcrit
