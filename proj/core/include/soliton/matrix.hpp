#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "soliton/scalar.hpp"

namespace soliton {

/// Small dense row-major complex matrix. Sizes here are g x g with g around
/// ten at most, so everything is plain O(n^3) code.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols, Scalar fill = {});
    ComplexMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Scalar> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Scalar>& data() const noexcept { return data_; }

    ComplexMatrix transpose() const;
    Real max_abs() const noexcept;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Scalar s, const ComplexMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Scalar> matvec(const ComplexMatrix& a, std::span<const Scalar> x);

/// Solves A X = B by Gaussian elimination with partial pivoting after scaling
/// every row of A to unit norm. Throws SingularMatrix when a pivot of the
/// equilibrated matrix falls below 1e-16.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix invert(const ComplexMatrix& a);

/// max |a_ij - b_ij|
Real max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace soliton
