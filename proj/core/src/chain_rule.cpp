#include "soliton/chain_rule.hpp"

#include "soliton/error.hpp"
#include "soliton/structmat.hpp"

namespace soliton {

ChainRule::ChainRule(const SolitonCurve& c) : genus_(c.genus()), M_(build_M(c)), Minv_(invert(M_)) {
    const auto g = static_cast<std::size_t>(genus_);
    directions_.assign(g, std::vector<double>(g, 0.0));
    // d/du_i = sum_r M[r][i] d/dT_r with T_r = t_{g-r} (1-based), i.e. index g-1-r.
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t r = 0; r < g; ++r) directions_[i][g - 1 - r] = M_(r, i).real();
}

std::vector<double> ChainRule::t_from_u(std::span<const double> u) const {
    const auto g = static_cast<std::size_t>(genus_);
    if (u.size() != g) throw Error(ErrorCode::DimensionMismatch, "u has wrong dimension");
    std::vector<double> t(g, 0.0);
    for (std::size_t r = 0; r < g; ++r) {
        double T = 0.0;
        for (std::size_t j = 0; j < g; ++j) T += M_(r, j).real() * u[j];
        t[g - 1 - r] = T;
    }
    return t;
}

std::vector<double> ChainRule::u_from_t(std::span<const double> t) const {
    const auto g = static_cast<std::size_t>(genus_);
    if (t.size() != g) throw Error(ErrorCode::DimensionMismatch, "t has wrong dimension");
    std::vector<double> u(g, 0.0);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t r = 0; r < g; ++r) u[i] += Minv_(i, r).real() * t[g - 1 - r];
    return u;
}

ChainRule chain_rule(const SolitonCurve& c) { return ChainRule(c); }

}  // namespace soliton
