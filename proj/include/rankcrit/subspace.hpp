#pragma once

#include <vector>

#include "rankcrit/matrix.hpp"

namespace rankcrit {

/// A linear subspace of Q^d held by its unique reduced row-echelon basis:
/// rows are nonzero, pivots strictly increasing, pivot entries 1 and alone in
/// their column. Two Subspace values are equal iff their basis matrices are
/// identical, so equality of spaces is equality of representations.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    /// Canonicalizes the row span of `rows` (rows need not be independent).
    static Subspace span_of_rows(const Matrix& rows);
    static Subspace span_of(const std::vector<std::vector<Rat>>& vectors, int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }

    /// dim() x ambient_dim() matrix in RREF; no zero rows.
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    std::vector<Rat> basis_row(int i) const { return basis_.row(i); }

    /// Residual of v after eliminating against the basis; zero iff v lies in
    /// the subspace.
    std::vector<Rat> reduce(std::vector<Rat> v) const;

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int ambient_;
    Matrix basis_;
    std::vector<int> pivots_;
};

/// Throw DimensionMismatch unless ambient dimensions agree.
void require_same_ambient(const Subspace& u, const Subspace& w);

Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);

/// {v in s : C v = 0}; the constraint rows C live in the ambient space.
/// This is the workhorse for intersecting a space with many linear conditions
/// without leaving the coordinates of s.
Subspace restrict_by_constraints(const Subspace& s, const Matrix& constraint_rows);

/// Incremental RREF accumulator: inserts vectors one at a time, keeping a
/// canonical basis throughout. Used for submodule closures and for collecting
/// spans without re-eliminating from scratch.
class SubspaceBuilder {
public:
    explicit SubspaceBuilder(int ambient_dim) : ambient_(ambient_dim) {}

    /// Returns true if v was independent of the rows so far.
    bool insert(std::vector<Rat> v);

    int dim() const { return (int)rows_.size(); }
    int ambient_dim() const { return ambient_; }

    Subspace to_subspace() const;

private:
    int ambient_;
    std::vector<std::vector<Rat>> rows_;  // RREF rows
    std::vector<int> pivots_;             // strictly increasing order
};

}  // namespace rankcrit
