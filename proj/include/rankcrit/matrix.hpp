#pragma once

#include <cstddef>
#include <vector>

#include "rankcrit/errors.hpp"
#include "rankcrit/rat.hpp"

namespace rankcrit {

/// Dense rational matrix, row-major. Immutable by convention once built:
/// library code never mutates an argument it received by const reference.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_((size_t)rows * cols) {}
    Matrix(int rows, int cols, std::vector<Rat> entries);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& operator()(int i, int j) const { return e_[(size_t)i * cols_ + j]; }
    Rat& operator()(int i, int j) { return e_[(size_t)i * cols_ + j]; }

    const std::vector<Rat>& entries() const { return e_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;

    // Row-major flattening, the coordinates used for subspaces of End(V).
    std::vector<Rat> flatten() const { return e_; }
    static Matrix unflatten(int rows, int cols, const std::vector<Rat>& v);

    std::vector<Rat> row(int i) const;
    std::vector<Rat> col(int j) const;

    // M * v
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);  // OpenMP over rows
    friend Matrix operator*(const Rat& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // a*b - b*a
    static Matrix commutator(const Matrix& a, const Matrix& b);

    Rat trace() const;

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

namespace serial {
// Reference product without OpenMP, kept for tests and the benchmark.
Matrix mul(const Matrix& a, const Matrix& b);
}  // namespace serial

}  // namespace rankcrit
