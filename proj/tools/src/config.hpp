#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace soliton::cli {

/// Malformed or invalid run configuration (exit status 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Axis {
    double min = -3.0;
    double max = 3.0;
    int count = 121;
};

enum class Format { Csv, Json };

struct RunConfig {
    std::vector<double> k;
    Axis t1;
    Axis t2;
    /// Fixed values of t_3..t_g; missing entries are zero.
    std::vector<double> higher_times;
    /// Check-id -> tolerance overrides.
    std::map<std::string, double> tolerances;
    Format format = Format::Csv;
    std::string out;  ///< empty: stdout
    std::uint64_t seed = 20240611;
    int random_points = 200;
    double box = 3.0;
    unsigned threads = 1;
    /// Constant s in wp_gg = -d^2 log theta + s; empty selects the KdV-consistent value.
    std::optional<double> offset;
    bool characteristic_phase = false;
};

/// Command-line overrides; unset members leave the file values alone.
struct Overrides {
    std::optional<std::string> k;
    std::optional<std::string> grid;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
};

/// Parses the flat `key = value` format (see configs/README.md).
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_config(const std::string& path);

void apply_overrides(RunConfig& cfg, const Overrides& o);

/// Checks the invariants that parsing alone cannot: wavenumbers present,
/// counts >= 2, min < max, tolerances > 0 and known. Curve-level validity
/// (positivity, distinctness) is left to SolitonCurve.
void validate(const RunConfig& cfg);

// Value parsers shared by the file format and the flags. All use from_chars,
// so they do not depend on the locale.
double parse_real(const std::string& s, const std::string& what);
std::vector<double> parse_real_list(const std::string& s, const std::string& what);
/// "t1:-3:3:121,t2:-3:3:121"; either axis may be omitted.
void parse_grid(const std::string& s, RunConfig& cfg);
Format parse_format(const std::string& s);

}  // namespace soliton::cli
