#include "symchar2/matrix.hpp"

#include <utility>

namespace symchar2 {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix::Matrix(Field field, const std::vector<std::vector<Scalar>>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (const auto& x : r) {
            if (!(x.field() == field_))
                throw Error(ErrorCode::DescriptorMismatch, "matrix entry in " + x.field().name());
            data_.push_back(x);
        }
    }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::block_diagonal(const Field& field, const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(field, r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in +");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in *");
    Matrix r(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

std::vector<Scalar> Matrix::operator*(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (!(a.data_[i] == b.data_[i])) return false;
    return true;
}

namespace {

// Row-echelon form in place; returns the rank and accumulates the determinant factor.
std::size_t eliminate(Matrix& m, Scalar* det) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
        const Scalar p = m(rank, col);
        if (det) *det *= p;
        const Scalar pinv = p.inv();
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const Scalar factor = m(i, col) * pinv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return eliminate(copy, nullptr);
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    Matrix copy = m;
    Scalar det = m.field().one();
    // row swaps do not change the sign in characteristic two
    if (eliminate(copy, &det) < m.rows()) return m.field().zero();
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotInvertible, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(m.field(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorCode::NotInvertible, "singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Scalar pinv = a(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= pinv;
            inv(col, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            const Scalar factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace symchar2
