#ifndef SYMCHAR2_MATRIX_HPP
#define SYMCHAR2_MATRIX_HPP

#include <span>
#include <vector>

#include "symchar2/field.hpp"

namespace symchar2 {

/// Dense row-major matrix of Scalars over one field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Rows must all have the same length; an empty row list gives a 0x0 matrix.
    Matrix(Field field, const std::vector<std::vector<Scalar>>& rows);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix block_diagonal(const Field& field, const std::vector<Matrix>& blocks);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Matrix transpose() const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    std::vector<Scalar> operator*(std::span<const Scalar> v) const;

    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Throws NotInvertible for singular or non-square input.
Matrix inverse(const Matrix& m);

}  // namespace symchar2

#endif
