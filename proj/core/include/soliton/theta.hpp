#pragma once

#include <vector>

#include "soliton/chain_rule.hpp"
#include "soliton/curve.hpp"
#include "soliton/expsum.hpp"

namespace soliton {

struct ThetaOptions {
    /// Multiply term eps by exp(pi i sum_r eps_r delta'_r), delta' = (g/2, ..., 1/2).
    /// Off by default: the odd half-period entries flip the sign of the
    /// corresponding single-soliton terms and the field becomes singular on
    /// the real slice.
    bool characteristic_phase = false;
};

/// Regularised theta function of the degenerate curve as the 2^g-term sum
///   sum_eps exp( (pi i / 4) eps^T tau_off eps ) exp( sum_i eps_i xi_i(t) ),
/// xi = K(1) t, so term eps has wavevector component m equal to
/// sum_i eps_i k_i^{2m-1}. The amplitude equals prod_{i<j} rho_ij^{eps_i eps_j / 2}
/// with rho_ij = (k_i - k_j)/(k_i + k_j).
ExponentialSum build_theta(const SolitonCurve& c, ThetaOptions options = {});

/// Result of normalising a soliton theta sum to Hirota form.
struct HirotaGauge {
    /// 1 + sum_i e^{2 xi'_i} + ... with unit single-soliton amplitudes, as a
    /// function of the shifted phases xi'_i = xi_i + phases[i].
    ExponentialSum tau;
    /// phases[i] = (1/2) log(b_i), b_i the single-flip amplitude after
    /// dividing out the reference term. Real for the default theta.
    std::vector<Complex> phases;
    /// Generator wavevectors 2 (k_i, k_i^3, ...), one per soliton.
    std::vector<std::vector<double>> generators;

    /// tau with the phases folded back into the amplitudes: a pure gauge of
    /// the input sum (same second log-derivatives everywhere).
    ExponentialSum gauge_equivalent() const;
};

/// Divides by the reference term (the one whose wavevector is the negative
/// of the all-plus term) and absorbs the single-flip amplitudes into origin
/// phases. Throws GaugeAmbiguous if the structure is not found or the
/// reference amplitude vanishes.
HirotaGauge to_hirota_gauge(const ExponentialSum& s);

/// wp~_{mn}(u) = -d^2/du_m du_n log theta~ via the chain rule (0-based m, n).
Complex wp_tilde(const SolitonCurve& c, int m, int n, const PhasePoint& p);

/// Offset s in wp_gg = -d^2_{t1} log theta~ + s for which U satisfies
/// 4 U_{u_{g-1}} + 6 U U_{u_g} - U_{u_g u_g u_g} = 0, namely -lambda_{2g}/4.
double kdv_consistent_offset(const SolitonCurve& c);

/// Relative magnitude |theta| / sum |terms| below which SolitonField treats a
/// point as lying on the theta divisor.
inline constexpr double kDivisorRelativeMagnitude = 1e-13;

/// U = 2 wp_gg + lambda_{2g}/6 sampled from a prebuilt theta sum; cheap to
/// share across threads (all members immutable).
class SolitonField {
public:
    explicit SolitonField(const SolitonCurve& c, ThetaOptions options = {});
    SolitonField(const SolitonCurve& c, double offset, ThetaOptions options = {});

    const SolitonCurve& curve() const noexcept { return curve_; }
    const ExponentialSum& theta() const noexcept { return theta_; }
    double offset() const noexcept { return offset_; }
    /// Limit of U far from all solitons: 2 s + lambda_{2g}/6.
    double baseline() const noexcept;

    /// Throws NonRealField (imaginary part above 1e-9 (1 + |U|)) or ThetaZero,
    /// the latter also when theta cancels below kDivisorRelativeMagnitude of
    /// the sum of its term magnitudes.
    double operator()(const PhasePoint& p) const;

private:
    SolitonCurve curve_;
    ExponentialSum theta_;
    double offset_;
};

double u_field(const SolitonCurve& c, const PhasePoint& p);
double u_field(const SolitonCurve& c, const PhasePoint& p, double offset);

}  // namespace soliton
