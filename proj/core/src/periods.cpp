#include "soliton/periods.hpp"

#include <cmath>
#include <numbers>

#include "soliton/structmat.hpp"

namespace soliton {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr Scalar kPiI{0.0L, kPi};

Real log_ratio(Real ki, Real kj) {
    return std::log(std::abs((ki - kj) / (ki + kj)));
}

}  // namespace

CycleIntegrals alpha_integrals(const SolitonCurve& c) {
    const int g = c.genus();
    const auto n = static_cast<std::size_t>(g);
    CycleIntegrals out{ComplexMatrix(n, n), ComplexMatrix(n, n), false};
    for (std::size_t i = 0; i < n; ++i) {
        const Real ki = c.k()[i];
        out.first(i, i) = kPiI / ki;
        out.second(i, i) = kPiI * ipow(ki, 2 * g - 1);
    }
    return out;
}

CycleIntegrals beta_integrals(const SolitonCurve& c) {
    const int g = c.genus();
    const auto n = static_cast<std::size_t>(g);
    CycleIntegrals out{ComplexMatrix(n, n), ComplexMatrix(n, n), true};
    for (std::size_t i = 0; i < n; ++i) {
        const Real ki = c.k()[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Real kj = c.k()[j];
            const Real lr = log_ratio(ki, kj);
            out.first(i, j) = lr / ki;
            Real finite = 0.0L;
            for (int r = 0; r < g; ++r) {
                finite += ipow(ki, 2 * r) * ipow(kj, 2 * g - 2 * r - 1) / (static_cast<Real>(g - r) - 0.5L);
            }
            out.second(i, j) = finite + ipow(ki, 2 * g - 1) * lr;
        }
    }
    return out;
}

ComplexMatrix omega_prime(const SolitonCurve& c) {
    return w_inverse(c) * alpha_integrals(c).first;
}

ComplexMatrix omega_second_off(const SolitonCurve& c) {
    return w_inverse(c) * beta_integrals(c).first;
}

ComplexMatrix tau_off(const SolitonCurve& c) {
    const auto n = static_cast<std::size_t>(c.genus());
    ComplexMatrix tau(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Real ki = c.k()[i];
            const Real kj = c.k()[j];
            tau(i, j) = Scalar{0.0L, std::log(std::abs((ki + kj) / (ki - kj))) / kPi};
        }
    return tau;
}

Scalar eta_component(const SolitonCurve& c, int i, double k) {
    const Real kk = k;
    const Polynomial truncated = polynomial_part_over_power(c.f(), static_cast<std::size_t>(2 * i));
    const Scalar slope = derivative(truncated)(kk * kk);
    // P'(x) from the roots: the expanded form loses digits near a root.
    const Real x = kk * kk;
    Real dP = 0.0L;
    for (std::size_t l = 0; l < c.a().size(); ++l) {
        Real prod = 1.0L;
        for (std::size_t m = 0; m < c.a().size(); ++m)
            if (m != l) prod *= x - c.a()[m];
        dP += prod;
    }
    return kPiI * std::pow(kk, 2 * i - 3) / dP * slope;
}

ComplexMatrix eta_prime(const SolitonCurve& c) {
    const auto n = static_cast<std::size_t>(c.genus());
    ComplexMatrix eta(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            eta(i, j) = eta_component(c, static_cast<int>(i) + 1, c.k()[j]);
    return eta;
}

ComplexMatrix c_matrix(const SolitonCurve& c) {
    ComplexMatrix scaled = eta_prime(c);
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= static_cast<Real>(c.k()[j]) / kPiI;
    return scaled * build_W(c);
}

ComplexMatrix c_matrix_from_periods(const SolitonCurve& c) {
    return eta_prime(c) * invert(omega_prime(c));
}

PeriodData compute_periods(const SolitonCurve& c) {
    PeriodData p;
    p.omega1 = omega_prime(c);
    p.omega2_off = omega_second_off(c);
    p.tau_off = tau_off(c);
    p.eta1 = eta_prime(c);
    p.C = c_matrix(c);
    p.diag_divergent = true;
    return p;
}

}  // namespace soliton
