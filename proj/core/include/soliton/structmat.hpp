#pragma once

#include "soliton/curve.hpp"
#include "soliton/matrix.hpp"

namespace soliton {

// Structural matrices of the degenerate curve. Rows are indexed by soliton
// i (descending k), all indices 0-based in code.

/// W[i][j] = chi_{i,j}: row i holds the coefficients of pi_i ascending.
/// The last column is all ones.
ComplexMatrix build_W(const SolitonCurve& c);

/// Unit lower-triangular band matrix, M[r][c] = mu_{g-(r-c)} for r > c.
ComplexMatrix build_M(const SolitonCurve& c);

/// K(l)[i][j] = k_i^{2(g-1-j)+l}: rows (k^{2g+l-2}, k^{2g+l-4}, ..., k^l).
ComplexMatrix build_K(const SolitonCurve& c, int l);

/// Vandermonde V[i][j] = a_j^i.
ComplexMatrix build_V(const SolitonCurve& c);

/// diag(P'(a_1), ..., P'(a_g)).
ComplexMatrix build_Pdiag(const SolitonCurve& c);

/// Closed-form inverse of W as a column scaling of the Vandermonde matrix,
/// V diag(1/P'(a_j)). Uses W V = diag(P'(a)), i.e. pi_i(a_j) = delta_ij P'(a_i).
ComplexMatrix w_inverse(const SolitonCurve& c);

/// Integer power by repeated multiplication; keeps real input exactly real.
double ipow(double x, int n) noexcept;
Real ipow(Real x, int n) noexcept;

}  // namespace soliton
