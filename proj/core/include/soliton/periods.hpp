#pragma once

#include "soliton/curve.hpp"
#include "soliton/matrix.hpp"

namespace soliton {

/// Integrals of the first-kind (dv) and second-kind (dv~) differentials over
/// one family of cycles.
struct CycleIntegrals {
    ComplexMatrix first;
    ComplexMatrix second;
    /// The diagonal diverges in the degenerate limit; it is stored as zero.
    bool diag_divergent = false;
};

/// Period data of the degenerate curve. The divergent diagonals of omega''
/// and tau are never materialised as infinities.
struct PeriodData {
    ComplexMatrix omega1;      ///< omega'
    ComplexMatrix omega2_off;  ///< omega'' with the divergent log diagonal zeroed
    ComplexMatrix tau_off;     ///< off-diagonal part of tau, zero diagonal
    ComplexMatrix eta1;        ///< eta' = (eta_i(k_j))
    ComplexMatrix C;           ///< C = eta' omega'^{-1}
    bool diag_divergent = true;
};

/// int_{alpha_j} dv_i = pi i delta_ij / k_i, int_{alpha_j} dv~_i = pi i k_i^{2g-1} delta_ij.
CycleIntegrals alpha_integrals(const SolitonCurve& c);

/// Off-diagonal beta-cycle integrals; diagonal stored as zero and flagged.
CycleIntegrals beta_integrals(const SolitonCurve& c);

/// omega' = W^{-1} diag(pi i / k_i), using the closed-form W^{-1}.
ComplexMatrix omega_prime(const SolitonCurve& c);

/// omega'' restricted to the finite off-diagonal beta data.
ComplexMatrix omega_second_off(const SolitonCurve& c);

/// tau_ij = (i/pi) log|(k_i + k_j)/(k_i - k_j)| for i != j, zero diagonal.
ComplexMatrix tau_off(const SolitonCurve& c);

/// eta_i(k) = pi i k^{2i-3} / P'(k^2) * [d/dx (f(x)/x^{2i})_+]_{x=k^2}
/// for i = 1..g (pass the 1-based index).
Scalar eta_component(const SolitonCurve& c, int i, double k);

/// eta'[i][j] = eta_{i+1}(k_j).
ComplexMatrix eta_prime(const SolitonCurve& c);

/// C = ((k_j / pi i) eta_i(k_j)) W. C[g-1][g-1] == 1.
ComplexMatrix c_matrix(const SolitonCurve& c);

/// Second route: C = eta' omega'^{-1} with omega' inverted by elimination.
ComplexMatrix c_matrix_from_periods(const SolitonCurve& c);

PeriodData compute_periods(const SolitonCurve& c);

}  // namespace soliton
