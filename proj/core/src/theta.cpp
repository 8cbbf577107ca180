#include "soliton/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "soliton/error.hpp"
#include "soliton/periods.hpp"
#include "soliton/structmat.hpp"

namespace soliton {

ExponentialSum build_theta(const SolitonCurve& c, ThetaOptions options) {
    const int g = c.genus();
    const auto n = static_cast<std::size_t>(g);
    const ComplexMatrix tau = tau_off(c);
    const ComplexMatrix K1 = build_K(c, 1);
    const Complex quarter_pi_i{0.0, std::numbers::pi / 4.0};

    ExponentialSum theta(g);
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
        std::vector<double> eps(n);
        for (std::size_t i = 0; i < n; ++i) eps[i] = (mask & (1u << i)) ? 1.0 : -1.0;

        Complex quad{};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) quad += eps[i] * eps[j] * Complex(tau(i, j));
        Complex amplitude = std::exp(quarter_pi_i * quad);
        if (options.characteristic_phase) {
            double phase = 0.0;
            for (std::size_t r = 0; r < n; ++r) phase += eps[r] * 0.5 * static_cast<double>(g - static_cast<int>(r));
            amplitude *= std::exp(Complex{0.0, std::numbers::pi * phase});
        }

        // Column j of K(1) carries k^{2(g-1-j)+1}, i.e. time t_{g-j}.
        std::vector<double> wave(n, 0.0);
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t r = 0; r < n; ++r) wave[m] += eps[r] * static_cast<double>(K1(r, n - 1 - m).real());
        theta.add(amplitude, std::move(wave));
    }
    return theta;
}

namespace {

double vec_scale(const std::vector<ExpTerm>& terms) {
    double s = 0.0;
    for (const auto& t : terms)
        for (const double v : t.wavevector) s = std::max(s, std::abs(v));
    return s;
}

bool near(std::span<const double> a, std::span<const double> b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

int find_near(const std::vector<std::vector<double>>& vs, std::span<const double> v, double tol) {
    for (std::size_t j = 0; j < vs.size(); ++j)
        if (near(vs[j], v, tol)) return static_cast<int>(j);
    return -1;
}

bool is_zero_vec(std::span<const double> v, double tol) {
    return std::all_of(v.begin(), v.end(), [tol](double x) { return std::abs(x) <= tol; });
}

[[noreturn]] void ambiguous(const std::string& why) {
    throw Error(ErrorCode::GaugeAmbiguous, "cannot bring sum to Hirota gauge: " + why);
}

}  // namespace

HirotaGauge to_hirota_gauge(const ExponentialSum& s) {
    const int g = s.genus();
    const auto& terms = s.terms();
    if (g < 1 || terms.empty()) ambiguous("empty sum");
    const double tol = 1e-9 * std::max(1.0, vec_scale(terms));

    std::size_t ref = 0;
    for (std::size_t j = 1; j < terms.size(); ++j)
        if (terms[j].wavevector[0] < terms[ref].wavevector[0]) ref = j;
    for (std::size_t j = 0; j < terms.size(); ++j)
        if (j != ref && std::abs(terms[j].wavevector[0] - terms[ref].wavevector[0]) <= tol)
            ambiguous("reference term is not unique");
    const Complex a_ref = terms[ref].amplitude;
    if (std::abs(a_ref) == 0.0) ambiguous("reference amplitude is zero");

    std::vector<std::vector<double>> shifted(terms.size());
    std::vector<Complex> amp(terms.size());
    for (std::size_t j = 0; j < terms.size(); ++j) {
        shifted[j].resize(static_cast<std::size_t>(g));
        for (int m = 0; m < g; ++m)
            shifted[j][static_cast<std::size_t>(m)] =
                terms[j].wavevector[static_cast<std::size_t>(m)] - terms[ref].wavevector[static_cast<std::size_t>(m)];
        amp[j] = terms[j].amplitude / a_ref;
    }
    {
        std::vector<double> neg(terms[ref].wavevector);
        for (auto& v : neg) v = -v;
        bool found = false;
        for (const auto& t : terms) found = found || near(t.wavevector, neg, tol);
        if (!found) ambiguous("no term mirrors the reference wavevector");
    }

    // Generators: nonzero shifted vectors that are not a sum of two others.
    std::vector<std::size_t> gens;
    for (std::size_t j = 0; j < shifted.size(); ++j) {
        if (is_zero_vec(shifted[j], tol)) continue;
        bool composite = false;
        for (std::size_t q = 0; q < shifted.size() && !composite; ++q) {
            if (q == j || is_zero_vec(shifted[q], tol)) continue;
            std::vector<double> diff(shifted[j]);
            for (std::size_t m = 0; m < diff.size(); ++m) diff[m] -= shifted[q][m];
            if (!is_zero_vec(diff, tol) && find_near(shifted, diff, tol) >= 0) composite = true;
        }
        if (!composite) gens.push_back(j);
    }
    if (static_cast<int>(gens.size()) != g) {
        std::ostringstream os;
        os << "found " << gens.size() << " soliton generators, expected " << g;
        ambiguous(os.str());
    }
    std::sort(gens.begin(), gens.end(),
              [&](std::size_t x, std::size_t y) { return shifted[x][0] > shifted[y][0]; });

    HirotaGauge out;
    out.tau = ExponentialSum(g);
    std::vector<Complex> b(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        b[i] = amp[gens[i]];
        if (std::abs(b[i]) == 0.0) ambiguous("single-soliton amplitude is zero");
        out.phases.push_back(0.5 * std::log(b[i]));
        out.generators.push_back(shifted[gens[i]]);
    }

    std::vector<bool> used(terms.size(), false);
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
        std::vector<double> sum(static_cast<std::size_t>(g), 0.0);
        Complex scale = 1.0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            for (std::size_t m = 0; m < sum.size(); ++m) sum[m] += out.generators[i][m];
            scale *= b[i];
        }
        const int j = find_near(shifted, sum, tol);
        if (j < 0) continue;  // absent subset: coefficient zero
        if (used[static_cast<std::size_t>(j)]) ambiguous("two subsets map onto one term");
        used[static_cast<std::size_t>(j)] = true;
        out.tau.add(amp[static_cast<std::size_t>(j)] / scale, std::move(sum));
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        ambiguous("a term is not a sum of soliton generators");
    return out;
}

ExponentialSum HirotaGauge::gauge_equivalent() const {
    ExponentialSum out(tau.genus());
    for (const auto& term : tau.terms()) {
        // Recover the subset from the wavevector by matching generator sums.
        Complex amplitude = term.amplitude;
        const double tol = 1e-9 * std::max(1.0, vec_scale(tau.terms()));
        for (unsigned mask = 0; mask < (1u << generators.size()); ++mask) {
            std::vector<double> sum(term.wavevector.size(), 0.0);
            for (std::size_t i = 0; i < generators.size(); ++i)
                if (mask & (1u << i))
                    for (std::size_t m = 0; m < sum.size(); ++m) sum[m] += generators[i][m];
            if (near(sum, term.wavevector, tol)) {
                for (std::size_t i = 0; i < generators.size(); ++i)
                    if (mask & (1u << i)) amplitude *= std::exp(2.0 * phases[i]);
                break;
            }
        }
        out.add(amplitude, term.wavevector);
    }
    return out;
}

Complex wp_tilde(const SolitonCurve& c, int m, int n, const PhasePoint& p) {
    const ExponentialSum theta = build_theta(c);
    const ChainRule rule(c);
    const std::vector<double> dirs[2] = {rule.u_direction(m), rule.u_direction(n)};
    return -log_derivative(theta, dirs, p);
}

double kdv_consistent_offset(const SolitonCurve& c) {
    return -c.lambda(2 * c.genus()).real() / 4.0;
}

SolitonField::SolitonField(const SolitonCurve& c, ThetaOptions options)
    : SolitonField(c, kdv_consistent_offset(c), options) {}

SolitonField::SolitonField(const SolitonCurve& c, double offset, ThetaOptions options)
    : curve_(c), theta_(build_theta(c, options)), offset_(offset) {}

double SolitonField::baseline() const noexcept {
    return 2.0 * offset_ + curve_.lambda(2 * curve_.genus()).real() / 6.0;
}

double SolitonField::operator()(const PhasePoint& p) const {
    // Beyond log_derivative's underflow test: a sum that cancels to rounding
    // level carries no significant digits, so the point is on the divisor.
    if (theta_.eval_shifted(p).relative_magnitude() < kDivisorRelativeMagnitude)
        throw Error(ErrorCode::ThetaZero, "point lies on the theta divisor to rounding accuracy");
    const std::vector<double> x = unit_direction(curve_.genus(), 0);
    const std::vector<double> dirs[2] = {x, x};
    const Complex second = log_derivative(theta_, dirs, p);
    const Complex U = 2.0 * (-second + offset_) + static_cast<double>(curve_.lambda(2 * curve_.genus()).real()) / 6.0;
    if (std::abs(U.imag()) > 1e-9 * (1.0 + std::abs(U.real()))) {
        std::ostringstream os;
        os << "field has imaginary part " << U.imag();
        throw Error(ErrorCode::NonRealField, os.str());
    }
    return U.real();
}

double u_field(const SolitonCurve& c, const PhasePoint& p) { return SolitonField(c)(p); }

double u_field(const SolitonCurve& c, const PhasePoint& p, double offset) {
    return SolitonField(c, offset)(p);
}

}  // namespace soliton
