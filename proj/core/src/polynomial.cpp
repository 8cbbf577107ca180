#include "soliton/polynomial.hpp"

#include <algorithm>

namespace soliton {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == Scalar{0.0, 0.0}) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::from_roots(std::span<const Scalar> roots) {
    std::vector<Scalar> c{1.0};
    c.reserve(roots.size() + 1);
    for (const Scalar r : roots) {
        // multiply by (x - r) in place
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j > 0; --j) {
            c[j] = c[j - 1] - r * c[j];
        }
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(std::size_t power, Scalar coeff) {
    std::vector<Scalar> c(power + 1, 0.0);
    c[power] = coeff;
    return Polynomial(std::move(c));
}

Scalar Polynomial::coeff(std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : Scalar{};
}

Scalar Polynomial::operator()(Scalar z) const noexcept {
    Scalar acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Scalar> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            c[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Scalar> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = p.coeff(j) + q.coeff(j);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Scalar> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = p.coeff(j) - q.coeff(j);
    return Polynomial(std::move(c));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial derivative(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Scalar> d(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j) {
        d[j - 1] = static_cast<Real>(j) * c[j];
    }
    return Polynomial(std::move(d));
}

Scalar eval(const Polynomial& p, Scalar z) noexcept { return p(z); }

Polynomial polynomial_part_over_power(const Polynomial& f, std::size_t m) {
    const auto& c = f.coeffs();
    if (c.size() <= m) return {};
    return Polynomial(std::vector<Scalar>(c.begin() + static_cast<std::ptrdiff_t>(m), c.end()));
}

Polynomial divide_by_linear(const Polynomial& p, Scalar root) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Scalar> q(c.size() - 1);
    Scalar carry{};
    for (std::size_t j = c.size() - 1; j > 0; --j) {
        carry = c[j] + root * carry;
        q[j - 1] = carry;
    }
    return Polynomial(std::move(q));
}

}  // namespace soliton
