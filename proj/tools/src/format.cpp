#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace soliton::cli {

namespace {

std::string nonfinite(double v) {
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string fmt(double v) {
    if (!std::isfinite(v)) return nonfinite(v);
    if (v == 0.0) v = 0.0;  // no "-0"
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string fmt_sci(double v, int digits) {
    if (!std::isfinite(v)) return nonfinite(v);
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, digits);
    return std::string(buf.data(), res.ptr);
}

std::string fmt_complex(std::complex<double> z) {
    std::string im = fmt(z.imag());
    if (im.front() != '-') im.insert(im.begin(), '+');
    return fmt(z.real()) + im + "i";
}

}  // namespace soliton::cli
