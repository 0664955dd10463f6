#include "rankcrit/matrix.hpp"

#include <utility>

namespace rankcrit {

Matrix::Matrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != (size_t)rows * cols)
        throw DimensionMismatch("Matrix: entry count does not match shape");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const Rat& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::unflatten(int rows, int cols, const std::vector<Rat>& v) {
    return Matrix(rows, cols, v);
}

std::vector<Rat> Matrix::row(int i) const {
    return std::vector<Rat>(e_.begin() + (size_t)i * cols_, e_.begin() + (size_t)(i + 1) * cols_);
}

std::vector<Rat> Matrix::col(int j) const {
    std::vector<Rat> c((size_t)rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& v) const {
    if ((int)v.size() != cols_) throw DimensionMismatch("Matrix::apply: size mismatch");
    std::vector<Rat> out((size_t)rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat acc;
        for (int j = 0; j < cols_; ++j) {
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) acc += (*this)(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("Matrix: + shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("Matrix: - shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix: * shape mismatch");
    Matrix r(a.rows_, b.cols_);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

Matrix operator*(const Rat& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = c * m.e_[i];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rat Matrix::trace() const {
    Rat t;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

namespace serial {
Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("serial::mul: shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
    return r;
}
}  // namespace serial

}  // namespace rankcrit
