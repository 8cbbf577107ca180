#pragma once

#include <complex>
#include <string>

namespace soliton::cli {

/// Shortest round-trip decimal ("0.1", "1e-30"); "nan"/"inf"/"-inf" for
/// non-finite values. Independent of the global locale.
std::string fmt(double v);
/// Fixed number of significant digits in scientific notation.
std::string fmt_sci(double v, int digits);
/// "re+imi" / "re-imi" with both parts in shortest form.
std::string fmt_complex(std::complex<double> z);

}  // namespace soliton::cli
