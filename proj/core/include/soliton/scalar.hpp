#pragma once

#include <complex>

namespace soliton {

/// Working precision of the algebraic layer: polynomials, structural and
/// period matrices. The closed-form inverses involve sums whose terms exceed
/// the result by up to ~1e9 for g = 8, so double rounding of the stored
/// entries alone breaks W W^{-1} = I at the 1e-10 level. The exponential sums
/// stay in double.
using Real = long double;
using Scalar = std::complex<Real>;

/// Precision of the exponential-sum layer and all field values.
using Complex = std::complex<double>;

}  // namespace soliton
