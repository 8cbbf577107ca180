#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "soliton/scalar.hpp"

namespace soliton {

/// A point in hierarchy times t = (t_1, ..., t_g). t_1 is space, t_2 the KdV
/// time direction.
class PhasePoint {
public:
    PhasePoint() = default;
    /// Throws InvalidArgument on non-finite entries.
    explicit PhasePoint(std::vector<double> t);
    PhasePoint(std::initializer_list<double> t) : PhasePoint(std::vector<double>(t)) {}

    std::size_t size() const noexcept { return t_.size(); }
    double operator[](std::size_t i) const noexcept { return t_[i]; }
    std::span<const double> values() const noexcept { return t_; }

private:
    std::vector<double> t_;
};

struct ExpTerm {
    Complex amplitude;
    std::vector<double> wavevector;
};

/// Value of a sum scaled by exp(-log_scale) so it stays representable:
/// true value = mantissa * exp(log_scale).
struct ShiftedValue {
    Complex mantissa;
    double log_scale = 0.0;
    /// sum_j |A_j| exp(Re<k_j,t> - log_scale); |mantissa| / magnitude near
    /// zero means the point is close to a zero of the sum.
    double magnitude = 0.0;

    Complex value() const;
    double relative_magnitude() const noexcept { return magnitude > 0.0 ? std::abs(mantissa) / magnitude : 0.0; }
};

/// Finite sum  sum_j A_j exp(<kappa_j, t>)  with complex amplitudes and real
/// wavevectors. Terms with identical wavevectors are merged on insertion, so
/// wavevectors are pairwise distinct. Differentiation is exact.
class ExponentialSum {
public:
    explicit ExponentialSum(int genus = 0) : genus_(genus) {}

    /// Adds (or merges into an existing term with bitwise-equal wavevector).
    void add(Complex amplitude, std::vector<double> wavevector);

    int genus() const noexcept { return genus_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<ExpTerm>& terms() const noexcept { return terms_; }

    /// Index of the term with this exact wavevector, or -1.
    int find(std::span<const double> wavevector) const noexcept;

    ShiftedValue eval_shifted(const PhasePoint& p) const;
    Complex operator()(const PhasePoint& p) const { return eval_shifted(p).value(); }

    /// d/dt_m (0-based m).
    ExponentialSum derive(int m) const;
    /// Directional derivative sum_m direction[m] d/dt_m.
    ExponentialSum derive_along(std::span<const double> direction) const;

    /// Multiplies every amplitude by `factor`.
    ExponentialSum scaled(Complex factor) const;

private:
    void check_point(const PhasePoint& p) const;

    int genus_;
    std::vector<ExpTerm> terms_;
};

Complex eval(const ExponentialSum& s, const PhasePoint& p);
ExponentialSum derive(const ExponentialSum& s, int m);

/// Mixed logarithmic derivative d/dd_1 ... d/dd_n log s at p, each d_i a
/// direction in t-space. Computed exactly as the joint cumulant of the
/// term weights, with one exponent shift for every factor. Throws ThetaZero
/// when the shifted value has modulus below 1e-300.
Complex log_derivative(const ExponentialSum& s, std::span<const std::vector<double>> directions,
                       const PhasePoint& p);

/// (s_mn s - s_m s_n) / s^2 at p (0-based m, n).
Complex log_second_derivative(const ExponentialSum& s, int m, int n, const PhasePoint& p);

/// Unit vector e_m in t-space.
std::vector<double> unit_direction(int genus, int m);

}  // namespace soliton
