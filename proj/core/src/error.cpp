#include "soliton/error.hpp"

namespace soliton {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyWavenumbers: return "empty wavenumbers";
        case ErrorCode::NonPositiveWavenumber: return "non-positive wavenumber";
        case ErrorCode::DuplicateWavenumber: return "duplicate wavenumber";
        case ErrorCode::DimensionMismatch: return "dimension mismatch";
        case ErrorCode::SingularMatrix: return "singular matrix";
        case ErrorCode::ThetaZero: return "theta zero";
        case ErrorCode::NonRealField: return "non-real field";
        case ErrorCode::GaugeAmbiguous: return "gauge ambiguous";
        case ErrorCode::GenusTooSmall: return "genus too small";
        case ErrorCode::InvalidArgument: return "invalid argument";
    }
    return "unknown";
}

bool Error::is_validation() const noexcept {
    switch (code_) {
        case ErrorCode::EmptyWavenumbers:
        case ErrorCode::NonPositiveWavenumber:
        case ErrorCode::DuplicateWavenumber:
        case ErrorCode::InvalidArgument:
        case ErrorCode::GenusTooSmall:
            return true;
        default:
            return false;
    }
}

}  // namespace soliton
