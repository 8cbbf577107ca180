#include "soliton/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "soliton/error.hpp"

namespace soliton {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Scalar> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Real ComplexMatrix::max_abs() const noexcept {
    Real m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols_ == b.rows_, "matmul: inner dimensions differ");
    ComplexMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar aik = a(i, k);
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "subtract: shapes differ");
    ComplexMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

ComplexMatrix operator*(Scalar s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (auto& v : c.data_) v *= s;
    return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

std::vector<Scalar> matvec(const ComplexMatrix& a, std::span<const Scalar> x) {
    require(a.cols() == x.size(), "matvec: dimension mismatch");
    std::vector<Scalar> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == a.cols(), "solve: matrix not square");
    require(a.rows() == b.rows(), "solve: right-hand side has wrong row count");
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    ComplexMatrix x = b;

    // Row equilibration: rows of the period matrices differ in scale by many
    // orders of magnitude, so the singularity test is made per unit row.
    for (std::size_t i = 0; i < n; ++i) {
        Real s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::norm(lu(i, j));
        s = std::sqrt(s);
        if (s == 0.0L) throw Error(ErrorCode::SingularMatrix, "singular matrix: zero row");
        for (std::size_t j = 0; j < n; ++j) lu(i, j) /= s;
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) /= s;
    }
    const Real threshold = 1e-16L;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
        if (!(std::abs(lu(pivot, col)) >= threshold)) {
            std::ostringstream os;
            os << "singular matrix: pivot " << std::abs(lu(pivot, col)) << " in column " << col;
            throw Error(ErrorCode::SingularMatrix, os.str());
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(col, j), x(pivot, j));
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const Scalar factor = lu(r, col) / lu(col, col);
            if (factor == Scalar{}) continue;
            for (std::size_t j = col; j < n; ++j) lu(r, j) -= factor * lu(col, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(r, j) -= factor * x(col, j);
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            Scalar s = x(ii, j);
            for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * x(k, j);
            x(ii, j) = s / lu(ii, ii);
        }
    }
    return x;
}

ComplexMatrix invert(const ComplexMatrix& a) {
    require(a.rows() == a.cols(), "invert: matrix not square");
    return solve(a, ComplexMatrix::identity(a.rows()));
}

Real max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace soliton
