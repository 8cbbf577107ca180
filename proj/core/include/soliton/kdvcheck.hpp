#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soliton/curve.hpp"
#include "soliton/expsum.hpp"
#include "soliton/theta.hpp"

namespace soliton {

/// Standard N-soliton tau function
///   sum_{mu in {0,1}^N} exp( sum_i mu_i 2 xi'_i + sum_{i<j} mu_i mu_j A_ij ),
/// xi'_i = sum_m k_i^{2m-1} t_m + phases[i], e^{A_ij} = ((k_i-k_j)/(k_i+k_j))^2.
/// Phases follow the order of `k` as given. Validates k like SolitonCurve.
ExponentialSum hirota_tau(std::span<const double> k, std::span<const double> phases);

enum class KdvForm {
    /// 4 U_{u_{g-1}} + 6 U U_{u_g} + U_{u_g u_g u_g}, as usually displayed.
    Displayed,
    /// 4 U_{u_{g-1}} + 6 U U_{u_g} - U_{u_g u_g u_g}; the identity satisfied
    /// by U = 2 wp_gg + lambda_{2g}/6 with wp = -d^2 log theta.
    Consistent,
};

const char* to_string(KdvForm form) noexcept;

/// Terms of the KdV residual at one point, with all derivatives exact.
struct KdvTerms {
    double U = 0.0;
    double U_s = 0.0;    ///< dU/du_{g-1}
    double U_x = 0.0;    ///< dU/du_g
    double U_xxx = 0.0;  ///< d^3U/du_g^3
};

KdvTerms kdv_terms(const SolitonCurve& c, const ExponentialSum& theta, const PhasePoint& p, double offset);

/// |4 U_s + 6 U U_x +- U_xxx| / max(1, |U_xxx|) with U = 2(-d^2_{t1} log theta + offset) + lambda_{2g}/6.
/// Throws GenusTooSmall for g = 1.
double kdv_residual(const SolitonCurve& c, const PhasePoint& p, double offset, KdvForm form = KdvForm::Consistent);
double kdv_residual(const SolitonCurve& c, const ExponentialSum& theta, const PhasePoint& p, double offset,
                    KdvForm form);

struct CheckResult {
    std::string id;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    long points = 0;
    std::string note;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const noexcept;
    const CheckResult* find(const std::string& id) const noexcept;
    void add(CheckResult r);
};

/// Max over the grid of |d^2_{t1} log theta~ - d^2_{t1} log tau_Hirota(k, phi*)|,
/// phi* taken from to_hirota_gauge. ThetaZero points are skipped and counted
/// in `note`.
CheckResult oracle_compare(const SolitonCurve& c, std::span<const PhasePoint> grid, double tolerance = 1e-8,
                           unsigned threads = 1);

struct SuiteOptions {
    std::uint64_t seed = 20240611;
    int random_points = 200;
    /// t-box for random sampling: each t_m uniform in [-box, box].
    double box = 3.0;
    /// Overrides of the per-check tolerances, keyed by check id.
    std::map<std::string, double> tolerances;
    unsigned threads = 1;
};

/// Default tolerance for every check id the suite knows.
const std::map<std::string, double>& default_tolerances();

/// Runs every invariant on one curve; failures are reported, not thrown.
VerificationReport run_suite(const SolitonCurve& c, const SuiteOptions& options = {});

/// Draws random points in [-box, box]^g, resampling while the relative
/// magnitude of theta at the point is below 1e-6.
std::vector<PhasePoint> sample_points(const ExponentialSum& theta, int count, double box, std::uint64_t seed);

}  // namespace soliton
