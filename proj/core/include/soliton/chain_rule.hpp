#pragma once

#include <span>
#include <vector>

#include "soliton/curve.hpp"
#include "soliton/matrix.hpp"

namespace soliton {

/// Correspondence between the Abelian coordinates u = (u_1..u_g) and the
/// hierarchy times t = (t_1..t_g). With the reversed time vector
/// T = (t_g, ..., t_1) the map is T = M u, so that
///   (d/du_1, ..., d/du_g)^T = M^T (d/dt_g, ..., d/dt_1)^T,
/// giving d/du_g = d/dt_1 and d/du_{g-1} = d/dt_2 + mu_{g-1} d/dt_1.
class ChainRule {
public:
    explicit ChainRule(const SolitonCurve& c);

    int genus() const noexcept { return genus_; }
    const ComplexMatrix& M() const noexcept { return M_; }
    const ComplexMatrix& Minv() const noexcept { return Minv_; }

    /// d/du_i expressed as a direction in t-space (0-based i; entry m is the
    /// coefficient of d/dt_{m+1}).
    const std::vector<double>& u_direction(int i) const { return directions_.at(static_cast<std::size_t>(i)); }

    std::vector<double> t_from_u(std::span<const double> u) const;
    std::vector<double> u_from_t(std::span<const double> t) const;

private:
    int genus_;
    ComplexMatrix M_;
    ComplexMatrix Minv_;
    std::vector<std::vector<double>> directions_;
};

ChainRule chain_rule(const SolitonCurve& c);

}  // namespace soliton
