#include "soliton/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "soliton/error.hpp"

namespace soliton {

PhasePoint::PhasePoint(std::vector<double> t) : t_(std::move(t)) {
    for (const double v : t_)
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "phase point has non-finite entry");
}

Complex ShiftedValue::value() const { return mantissa * std::exp(log_scale); }

void ExponentialSum::add(Complex amplitude, std::vector<double> wavevector) {
    if (static_cast<int>(wavevector.size()) != genus_)
        throw Error(ErrorCode::DimensionMismatch, "wavevector length differs from genus");
    const int idx = find(wavevector);
    if (idx >= 0) {
        terms_[static_cast<std::size_t>(idx)].amplitude += amplitude;
        return;
    }
    terms_.push_back({amplitude, std::move(wavevector)});
}

int ExponentialSum::find(std::span<const double> wavevector) const noexcept {
    for (std::size_t j = 0; j < terms_.size(); ++j)
        if (std::equal(wavevector.begin(), wavevector.end(), terms_[j].wavevector.begin(),
                       terms_[j].wavevector.end()))
            return static_cast<int>(j);
    return -1;
}

void ExponentialSum::check_point(const PhasePoint& p) const {
    if (static_cast<int>(p.size()) != genus_)
        throw Error(ErrorCode::DimensionMismatch, "phase point dimension differs from genus");
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

ShiftedValue ExponentialSum::eval_shifted(const PhasePoint& p) const {
    check_point(p);
    ShiftedValue out;
    if (terms_.empty()) return out;
    std::vector<double> exponents(terms_.size());
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        exponents[j] = dot(terms_[j].wavevector, p.values());
        shift = std::max(shift, exponents[j]);
    }
    out.log_scale = shift;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        const double w = std::exp(exponents[j] - shift);
        out.mantissa += terms_[j].amplitude * w;
        out.magnitude += std::abs(terms_[j].amplitude) * w;
    }
    return out;
}

ExponentialSum ExponentialSum::derive(int m) const {
    if (m < 0 || m >= genus_) throw Error(ErrorCode::InvalidArgument, "derivative direction out of range");
    ExponentialSum out(genus_);
    out.terms_ = terms_;
    for (auto& term : out.terms_) term.amplitude *= term.wavevector[static_cast<std::size_t>(m)];
    return out;
}

ExponentialSum ExponentialSum::derive_along(std::span<const double> direction) const {
    if (static_cast<int>(direction.size()) != genus_)
        throw Error(ErrorCode::DimensionMismatch, "direction length differs from genus");
    ExponentialSum out(genus_);
    out.terms_ = terms_;
    for (auto& term : out.terms_) term.amplitude *= dot(term.wavevector, direction);
    return out;
}

ExponentialSum ExponentialSum::scaled(Complex factor) const {
    ExponentialSum out(genus_);
    out.terms_ = terms_;
    for (auto& term : out.terms_) term.amplitude *= factor;
    return out;
}

Complex eval(const ExponentialSum& s, const PhasePoint& p) { return s(p); }

ExponentialSum derive(const ExponentialSum& s, int m) { return s.derive(m); }

std::vector<double> unit_direction(int genus, int m) {
    if (m < 0 || m >= genus) throw Error(ErrorCode::InvalidArgument, "direction index out of range");
    std::vector<double> e(static_cast<std::size_t>(genus), 0.0);
    e[static_cast<std::size_t>(m)] = 1.0;
    return e;
}

namespace {

// Enumerates set partitions of {0..n-1}; each block is a bitmask.
void for_each_partition(int n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> blocks;
    std::function<void(int)> rec = [&](int element) {
        if (element == n) {
            visit(blocks);
            return;
        }
        // Index loop: the recursion may reallocate `blocks`.
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i] |= 1u << element;
            rec(element + 1);
            blocks[i] &= ~(1u << element);
        }
        blocks.push_back(1u << element);
        rec(element + 1);
        blocks.pop_back();
    };
    rec(0);
}

}  // namespace

Complex log_derivative(const ExponentialSum& s, std::span<const std::vector<double>> directions,
                       const PhasePoint& p) {
    const int n = static_cast<int>(directions.size());
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "log_derivative needs at least one direction");
    if (n > 8) throw Error(ErrorCode::InvalidArgument, "log_derivative supports at most 8 directions");
    if (static_cast<int>(p.size()) != s.genus())
        throw Error(ErrorCode::DimensionMismatch, "phase point dimension differs from genus");
    for (const auto& d : directions)
        if (static_cast<int>(d.size()) != s.genus())
            throw Error(ErrorCode::DimensionMismatch, "direction length differs from genus");

    const auto& terms = s.terms();
    const std::size_t count = terms.size();
    std::vector<double> exponents(count);
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < count; ++j) {
        exponents[j] = dot(terms[j].wavevector, p.values());
        shift = std::max(shift, exponents[j]);
    }
    std::vector<Complex> weight(count);
    Complex total{};
    double abs_total = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        weight[j] = terms[j].amplitude * std::exp(exponents[j] - shift);
        total += weight[j];
        abs_total += std::abs(weight[j]);
    }
    if (count == 0 || std::abs(total) < 1e-300) throw Error(ErrorCode::ThetaZero, "point lies on the zero set of the sum");

    // Projections <kappa_j, d_i>, centred by an |weight|-averaged wavevector.
    // Cumulants of order >= 2 do not see the centring (it is a gauge factor).
    std::vector<std::vector<double>> proj(static_cast<std::size_t>(n), std::vector<double>(count));
    std::vector<double> centre(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            proj[static_cast<std::size_t>(i)][j] = dot(terms[j].wavevector, directions[static_cast<std::size_t>(i)]);
            centre[static_cast<std::size_t>(i)] += std::abs(weight[j]) * proj[static_cast<std::size_t>(i)][j];
        }
        centre[static_cast<std::size_t>(i)] /= abs_total;
        for (auto& v : proj[static_cast<std::size_t>(i)]) v -= centre[static_cast<std::size_t>(i)];
    }

    // Moments E[prod_{i in B} proj_i] for every subset B.
    const unsigned full = (1u << n) - 1u;
    std::vector<Complex> moment(full + 1u);
    for (unsigned mask = 1; mask <= full; ++mask) {
        Complex acc{};
        for (std::size_t j = 0; j < count; ++j) {
            double f = 1.0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) f *= proj[static_cast<std::size_t>(i)][j];
            acc += weight[j] * f;
        }
        moment[mask] = acc / total;
    }

    Complex cumulant{};
    for_each_partition(n, [&](const std::vector<unsigned>& blocks) {
        const int b = static_cast<int>(blocks.size());
        double coeff = (b % 2 == 1) ? 1.0 : -1.0;
        for (int f = 2; f < b; ++f) coeff *= f;
        Complex prod = coeff;
        for (const unsigned blk : blocks) prod *= moment[blk];
        cumulant += prod;
    });
    if (n == 1) cumulant += centre[0];
    return cumulant;
}

Complex log_second_derivative(const ExponentialSum& s, int m, int n, const PhasePoint& p) {
    const std::vector<double> dirs[2] = {unit_direction(s.genus(), m), unit_direction(s.genus(), n)};
    return log_derivative(s, dirs, p);
}

}  // namespace soliton
