#include "soliton/curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "soliton/error.hpp"

namespace soliton {

SolitonCurve::SolitonCurve(std::span<const double> k) : k_(k.begin(), k.end()) {
    if (k_.empty()) throw Error(ErrorCode::EmptyWavenumbers, "empty wavenumbers");
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (!(k_[i] > 0.0) || !std::isfinite(k_[i])) {
            std::ostringstream os;
            os << "non-positive wavenumber k[" << i << "] = " << k_[i];
            throw Error(ErrorCode::NonPositiveWavenumber, os.str());
        }
    }
    const double kmax = *std::max_element(k_.begin(), k_.end());
    for (std::size_t i = 0; i < k_.size(); ++i) {
        for (std::size_t j = i + 1; j < k_.size(); ++j) {
            if (std::abs(k_[i] - k_[j]) <= 1e-12 * kmax) {
                std::ostringstream os;
                os << "duplicate wavenumber k[" << i << "] = k[" << j << "] = " << k_[i];
                throw Error(ErrorCode::DuplicateWavenumber, os.str());
            }
        }
    }
    std::sort(k_.begin(), k_.end(), std::greater<>());

    a_.reserve(k_.size());
    std::vector<Scalar> roots;
    roots.reserve(k_.size());
    for (const double ki : k_) {
        const Real ai = static_cast<Real>(ki) * ki;
        a_.push_back(ai);
        roots.emplace_back(ai, 0.0);
    }
    P_ = Polynomial::from_roots(roots);
    f_ = Polynomial::monomial(1) * P_ * P_;

    // Product form avoids the cancellation of evaluating P' from coefficients.
    Pprime_at_a_.reserve(a_.size());
    for (std::size_t j = 0; j < a_.size(); ++j) {
        Real d = 1.0L;
        for (std::size_t l = 0; l < a_.size(); ++l)
            if (l != j) d *= a_[j] - a_[l];
        Pprime_at_a_.emplace_back(d, 0.0L);
    }
}

SolitonCurve new_curve(std::span<const double> k) { return SolitonCurve(k); }

ChiTable chi_table(const SolitonCurve& c) {
    const int g = c.genus();
    ChiTable table;
    table.chi.assign(static_cast<std::size_t>(g), std::vector<Scalar>(static_cast<std::size_t>(g)));
    for (int i = 0; i < g; ++i) {
        auto& row = table.chi[static_cast<std::size_t>(i)];
        const Real ai = c.a()[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(g - 1)] = 1.0;
        for (int k = g - 2; k >= 0; --k) {
            row[static_cast<std::size_t>(k)] = c.mu(k + 1) + ai * row[static_cast<std::size_t>(k + 1)];
        }

        const Polynomial quotient = divide_by_linear(c.P(), ai);
        Real scale = 0.0;
        for (const auto& v : row) scale = std::max(scale, std::abs(v));
        for (int k = 0; k < g; ++k) {
            if (std::abs(quotient.coeff(static_cast<std::size_t>(k)) - row[static_cast<std::size_t>(k)]) >
                1e-10L * scale) {
                throw Error(ErrorCode::InvalidArgument, "chi recursion disagrees with synthetic division");
            }
        }
    }
    return table;
}

}  // namespace soliton
