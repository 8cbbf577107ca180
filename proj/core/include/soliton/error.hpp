#pragma once

#include <stdexcept>
#include <string>

namespace soliton {

enum class ErrorCode {
    EmptyWavenumbers,
    NonPositiveWavenumber,
    DuplicateWavenumber,
    DimensionMismatch,
    SingularMatrix,
    ThetaZero,
    NonRealField,
    GaugeAmbiguous,
    GenusTooSmall,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Library-wide exception. `code()` identifies the failure kind so callers
/// (the CLI in particular) can map it onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// True for errors caused by bad user input rather than numerics.
    bool is_validation() const noexcept;

private:
    ErrorCode code_;
};

}  // namespace soliton
