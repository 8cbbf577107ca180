#include "soliton/structmat.hpp"

#include "soliton/error.hpp"

namespace soliton {

double ipow(double x, int n) noexcept {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

Real ipow(Real x, int n) noexcept {
    Real r = 1.0L;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

ComplexMatrix build_W(const SolitonCurve& c) {
    const auto g = static_cast<std::size_t>(c.genus());
    const ChiTable chi = chi_table(c);
    ComplexMatrix W(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) W(i, j) = chi.chi[i][j];
    return W;
}

ComplexMatrix build_M(const SolitonCurve& c) {
    const int g = c.genus();
    ComplexMatrix M(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int r = 0; r < g; ++r) {
        M(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = 1.0;
        for (int col = 0; col < r; ++col) {
            M(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) = c.mu(g - (r - col));
        }
    }
    return M;
}

ComplexMatrix build_K(const SolitonCurve& c, int l) {
    const int g = c.genus();
    if (l < 0) throw Error(ErrorCode::InvalidArgument, "K(l) needs l >= 0");
    ComplexMatrix K(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            K(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                ipow(static_cast<Real>(c.k()[static_cast<std::size_t>(i)]), 2 * (g - 1 - j) + l);
    return K;
}

ComplexMatrix build_V(const SolitonCurve& c) {
    const int g = c.genus();
    ComplexMatrix V(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            V(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                ipow(c.a()[static_cast<std::size_t>(j)], i);
    return V;
}

ComplexMatrix build_Pdiag(const SolitonCurve& c) {
    return ComplexMatrix::diagonal(c.Pprime_at_a());
}

ComplexMatrix w_inverse(const SolitonCurve& c) {
    ComplexMatrix inv = build_V(c);
    const auto& dP = c.Pprime_at_a();
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) /= dP[j];
    return inv;
}

}  // namespace soliton
