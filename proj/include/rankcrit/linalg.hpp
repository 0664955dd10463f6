#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankcrit/matrix.hpp"
#include "rankcrit/rng.hpp"
#include "rankcrit/subspace.hpp"

namespace rankcrit {

struct RrefResult {
    Matrix rref;              // same shape as the input, zero rows at the bottom
    int rank = 0;
    std::vector<int> pivots;  // pivot column of row i, for i < rank
};

/// Reduced row-echelon form over the rationals. Fraction-free elimination on
/// content-stripped integer rows (each working row is the primitive part of
/// the corresponding Bareiss minor row), OpenMP across rows; pivot rows are
/// normalized at the end. The result is the unique RREF of the input.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Right kernel {v : Mv = 0} as a canonical subspace of Q^cols.
Subspace kernel_basis(const Matrix& m);

/// Column span as a canonical subspace of Q^rows.
Subspace image_basis(const Matrix& m);

/// Functionals vanishing on the column span: the left kernel {f : fM = 0}.
Subspace left_kernel_basis(const Matrix& m);

/// Some x with Mx = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Rat>> solve(const Matrix& m, const std::vector<Rat>& b);

/// det(M), via fraction-free elimination.
Rat determinant(const Matrix& m);

/// Inverse of a square nonsingular matrix; throws Error when singular.
Matrix inverse_matrix(const Matrix& m);

/// Scales a rational vector to a primitive integer vector (cleared
/// denominators, content 1). The zero vector is returned unchanged.
std::vector<Rat> primitive_scale(std::vector<Rat> v);

/// Exact coordinates with respect to a fixed set of independent basis rows,
/// precomputed through the Gram matrix: coords(v) is the unique c with
/// basis^T c = v when v lies in the row span.
class CoordinateMap {
public:
    explicit CoordinateMap(Matrix basis_rows);
    /// Throws InternalInconsistency if verify is set and v is outside the span.
    std::vector<Rat> coords(const std::vector<Rat>& v, bool verify = true) const;
    const Matrix& basis() const { return basis_; }

private:
    Matrix basis_;
    Matrix solver_;  // (B B^T)^{-1} B
};

namespace serial {
// Plain rational Gauss-Jordan, no OpenMP, no integer tricks. The reference
// implementation the parallel kernel is tested against.
RrefResult rref(const Matrix& m);
}  // namespace serial

// ---- modular screening -----------------------------------------------------

/// Rank of M over Z/p. Throws Error if an entry denominator vanishes mod p.
/// Always a lower bound for the exact rank; equal for all but finitely many p.
int rank_mod_p(const Matrix& m, uint64_t p);

// ---- random instances -------------------------------------------------------

/// Matrix with integer entries uniform in [-height, height].
Matrix random_rational_matrix(int rows, int cols, int64_t height, uint64_t seed);
Matrix random_integer_matrix(int rows, int cols, int64_t height, Rng& rng);

/// Random invertible integer matrix (resamples until nonsingular).
Matrix random_invertible_matrix(int n, int64_t height, Rng& rng);

}  // namespace rankcrit
