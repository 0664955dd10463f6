#include "rankcrit/subspace.hpp"

#include <algorithm>

#include "rankcrit/linalg.hpp"

namespace rankcrit {

Subspace Subspace::zero(int ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(0, ambient_dim);
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix::identity(ambient_dim);
    s.pivots_.resize(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
    RrefResult rr = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.pivots_ = rr.pivots;
    s.basis_ = Matrix(rr.rank, rows.cols());
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < rows.cols(); ++j) s.basis_(i, j) = rr.rref(i, j);
    return s;
}

Subspace Subspace::span_of(const std::vector<std::vector<Rat>>& vectors, int ambient_dim) {
    Matrix m((int)vectors.size(), ambient_dim);
    for (int i = 0; i < (int)vectors.size(); ++i) {
        if ((int)vectors[i].size() != ambient_dim)
            throw DimensionMismatch("Subspace::span_of: vector length mismatch");
        for (int j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    return span_of_rows(m);
}

std::vector<Rat> Subspace::reduce(std::vector<Rat> v) const {
    if ((int)v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: length mismatch");
    for (int i = 0; i < dim(); ++i) {
        const Rat& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Rat t = c;  // pivot entries are 1
        for (int j = pivots_[i]; j < ambient_; ++j) {
            if (!basis_(i, j).is_zero()) v[j] -= t * basis_(i, j);
        }
    }
    return v;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    std::vector<Rat> r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
    if (other.dim() > dim()) return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

void require_same_ambient(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw DimensionMismatch("subspace operation: ambient dimensions differ");
}

Subspace sum(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    Matrix st(u.dim() + w.dim(), u.ambient_dim());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < u.ambient_dim(); ++j) st(i, j) = u.basis()(i, j);
    for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < u.ambient_dim(); ++j) st(u.dim() + i, j) = w.basis()(i, j);
    return Subspace::span_of_rows(st);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    // Zassenhaus: rref of [U U; W 0]; rows with zero left half carry the
    // intersection in their right half.
    const int d = u.ambient_dim();
    Matrix z(u.dim() + w.dim(), 2 * d);
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < d; ++j) {
            z(i, j) = u.basis()(i, j);
            z(i, d + j) = u.basis()(i, j);
        }
    for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < d; ++j) z(u.dim() + i, j) = w.basis()(i, j);
    RrefResult rr = rref(z);
    std::vector<std::vector<Rat>> inter;
    for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] < d) continue;
        std::vector<Rat> v((size_t)d);
        for (int j = 0; j < d; ++j) v[j] = rr.rref(i, d + j);
        inter.push_back(std::move(v));
    }
    return Subspace::span_of(inter, d);
}

Subspace restrict_by_constraints(const Subspace& s, const Matrix& constraint_rows) {
    if (constraint_rows.cols() != s.ambient_dim())
        throw DimensionMismatch("restrict_by_constraints: ambient mismatch");
    if (s.dim() == 0 || constraint_rows.rows() == 0) return s;
    // C restricted to coordinates on s: (k x dim) = C * basis^T
    Matrix cb = constraint_rows * s.basis().transpose();
    Subspace coeff_kernel = kernel_basis(cb);
    Matrix rows = coeff_kernel.basis() * s.basis();
    return Subspace::span_of_rows(rows);
}

bool SubspaceBuilder::insert(std::vector<Rat> v) {
    if ((int)v.size() != ambient_) throw DimensionMismatch("SubspaceBuilder: length mismatch");
    // reduce against current rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Rat t = c;
        const std::vector<Rat>& row = rows_[i];
        for (int j = pivots_[i]; j < ambient_; ++j)
            if (!row[j].is_zero()) v[j] -= t * row[j];
    }
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) { lead = j; break; }
    if (lead < 0) return false;
    Rat inv = inverse(v[lead]);
    for (int j = lead; j < ambient_; ++j)
        if (!v[j].is_zero()) v[j] = inv * v[j];
    // back-eliminate the new pivot column from existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rat t = rows_[i][lead];
        if (t.is_zero()) continue;
        for (int j = lead; j < ambient_; ++j)
            if (!v[j].is_zero()) rows_[i][j] -= t * v[j];
    }
    // keep rows sorted by pivot
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

Subspace SubspaceBuilder::to_subspace() const {
    Matrix m((int)rows_.size(), ambient_);
    for (int i = 0; i < (int)rows_.size(); ++i)
        for (int j = 0; j < ambient_; ++j) m(i, j) = rows_[i][j];
    return Subspace::span_of_rows(m);
}

}  // namespace rankcrit
