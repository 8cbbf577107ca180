#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "soliton/scalar.hpp"

namespace soliton {

/// Dense univariate polynomial with complex coefficients, stored ascending
/// (coeffs()[j] multiplies x^j). Trailing zeros are trimmed exactly, so the
/// zero polynomial has no coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs);

    /// Monic polynomial prod (x - r) over the given roots; empty gives 1.
    static Polynomial from_roots(std::span<const Scalar> roots);
    static Polynomial monomial(std::size_t power, Scalar coeff = 1.0);

    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^j, zero beyond the stored degree.
    Scalar coeff(std::size_t j) const noexcept;
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Scalar operator()(Scalar z) const noexcept;

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() noexcept;

    std::vector<Scalar> coeffs_;
};

Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial derivative(const Polynomial& p);
Scalar eval(const Polynomial& p, Scalar z) noexcept;

/// (f(x) / x^m)_+ : drop the coefficients of f below degree m and shift the
/// rest down by m.
Polynomial polynomial_part_over_power(const Polynomial& f, std::size_t m);

/// Quotient of p by (x - root) via synthetic division; the remainder is
/// discarded.
Polynomial divide_by_linear(const Polynomial& p, Scalar root);

}  // namespace soliton
