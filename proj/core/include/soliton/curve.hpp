#pragma once

#include <span>
#include <vector>

#include "soliton/polynomial.hpp"

namespace soliton {

/// The degenerate hyperelliptic curve y^2 = x P(x)^2 with P monic and roots
/// a_i = k_i^2. Wavenumbers are real, positive, pairwise distinct and stored
/// strictly descending; every derived coefficient is filled at construction.
class SolitonCurve {
public:
    /// Validates and sorts `k`. Throws Error with EmptyWavenumbers,
    /// NonPositiveWavenumber or DuplicateWavenumber.
    explicit SolitonCurve(std::span<const double> k);
    SolitonCurve(std::initializer_list<double> k)
        : SolitonCurve(std::span<const double>(k.begin(), k.size())) {}

    int genus() const noexcept { return static_cast<int>(k_.size()); }

    const std::vector<double>& k() const noexcept { return k_; }
    /// Branch points a_i = k_i^2.
    const std::vector<Real>& a() const noexcept { return a_; }
    const Polynomial& P() const noexcept { return P_; }
    /// x P(x)^2, degree 2g+1.
    const Polynomial& f() const noexcept { return f_; }

    /// mu_j, j = 0..g; mu_g = 1 since P is monic.
    Scalar mu(int j) const noexcept { return P_.coeff(static_cast<std::size_t>(j)); }
    /// lambda_j, j = 0..2g+1.
    Scalar lambda(int j) const noexcept { return f_.coeff(static_cast<std::size_t>(j)); }

    const std::vector<Scalar>& Pprime_at_a() const noexcept { return Pprime_at_a_; }

private:
    std::vector<double> k_;
    std::vector<Real> a_;
    Polynomial P_;
    Polynomial f_;
    std::vector<Scalar> Pprime_at_a_;
};

/// chi[i][k]: coefficients of pi_i(x) = P(x)/(x - a_i), ascending in k.
struct ChiTable {
    std::vector<std::vector<Scalar>> chi;

    const std::vector<Scalar>& row(int i) const { return chi.at(static_cast<std::size_t>(i)); }
};

SolitonCurve new_curve(std::span<const double> k);

/// Descending recursion chi_{i,k} = mu_{k+1} + a_i chi_{i,k+1} from
/// chi_{i,g-1} = 1. Each row is checked against synthetic division of P.
ChiTable chi_table(const SolitonCurve& c);

}  // namespace soliton
