#pragma once

#include "sbar/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sbar {

/// Small dense exact matrix. Column j holds the image of basis vector j.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool is_zero() const;

    /// Rows as "[a, b; c, d]".
    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

} // namespace sbar
