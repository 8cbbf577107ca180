#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "soliton/kdvcheck.hpp"

namespace soliton::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char ch : s) {
        if (ch == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

template <class Int>
Int parse_int(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    Int v{};
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError(what + ": expected an integer, got '" + s + "'");
    return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    throw ConfigError(what + ": expected true or false, got '" + s + "'");
}

Axis parse_axis(const std::string& s, const std::string& what) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw ConfigError(what + ": expected min:max:count, got '" + s + "'");
    Axis a;
    a.min = parse_real(parts[0], what + " min");
    a.max = parse_real(parts[1], what + " max");
    a.count = parse_int<int>(parts[2], what + " count");
    return a;
}

}  // namespace

double parse_real(const std::string& s, const std::string& what) {
    std::string t = trim(s);
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
        throw ConfigError(what + ": expected a finite number, got '" + s + "'");
    return v;
}

std::vector<double> parse_real_list(const std::string& s, const std::string& what) {
    std::vector<double> out;
    if (trim(s).empty()) return out;
    for (const auto& part : split(s, ',')) out.push_back(parse_real(part, what));
    return out;
}

void parse_grid(const std::string& s, RunConfig& cfg) {
    for (const auto& part : split(s, ',')) {
        const auto colon = part.find(':');
        const std::string name = trim(part.substr(0, colon));
        if (colon == std::string::npos) throw ConfigError("grid: expected name:min:max:count, got '" + part + "'");
        const std::string rest = part.substr(colon + 1);
        if (name == "t1") cfg.t1 = parse_axis(rest, "grid t1");
        else if (name == "t2") cfg.t2 = parse_axis(rest, "grid t2");
        else throw ConfigError("grid: unknown axis '" + name + "' (use t1 or t2; set t3.. with 'times')");
    }
}

Format parse_format(const std::string& s) {
    const std::string t = trim(s);
    if (t == "csv") return Format::Csv;
    if (t == "json") return Format::Json;
    throw ConfigError("format: expected csv or json, got '" + s + "'");
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");
        if (!seen.insert(key).second) throw ConfigError(where + ": duplicate key '" + key + "'");

        const std::string what = where + ": " + key;
        if (key == "k") {
            cfg.k = parse_real_list(value, what);
        } else if (key == "grid") {
            parse_grid(value, cfg);
        } else if (key == "t1") {
            cfg.t1 = parse_axis(value, what);
        } else if (key == "t2") {
            cfg.t2 = parse_axis(value, what);
        } else if (key == "times") {
            cfg.higher_times = parse_real_list(value, what);
        } else if (key == "format") {
            cfg.format = parse_format(value);
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "seed") {
            cfg.seed = parse_int<std::uint64_t>(value, what);
        } else if (key == "random_points") {
            cfg.random_points = parse_int<int>(value, what);
        } else if (key == "box") {
            cfg.box = parse_real(value, what);
        } else if (key == "threads") {
            cfg.threads = parse_int<unsigned>(value, what);
        } else if (key == "offset") {
            if (value == "auto") cfg.offset.reset();
            else cfg.offset = parse_real(value, what);
        } else if (key == "characteristic_phase") {
            cfg.characteristic_phase = parse_bool(value, what);
        } else if (key.rfind("tolerance.", 0) == 0) {
            cfg.tolerances[key.substr(10)] = parse_real(value, what);
        } else {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

void apply_overrides(RunConfig& cfg, const Overrides& o) {
    if (o.k) cfg.k = parse_real_list(*o.k, "--k");
    if (o.grid) parse_grid(*o.grid, cfg);
    if (o.format) cfg.format = parse_format(*o.format);
    if (o.out) cfg.out = *o.out;
    if (o.seed) cfg.seed = *o.seed;
    if (o.threads) cfg.threads = *o.threads;
}

void validate(const RunConfig& cfg) {
    if (cfg.k.empty()) throw ConfigError("no wavenumbers: set 'k' in the config or pass --k");
    for (const auto* axis : {&cfg.t1, &cfg.t2}) {
        const char* name = axis == &cfg.t1 ? "t1" : "t2";
        if (axis->count < 2) throw ConfigError(std::string("grid ") + name + ": count must be >= 2");
        if (!(axis->min < axis->max)) throw ConfigError(std::string("grid ") + name + ": min must be < max");
    }
    if (cfg.higher_times.size() + 2 > std::max<std::size_t>(cfg.k.size(), 2))
        throw ConfigError("times: more fixed times than t3..t_g for this genus");
    const auto& known = default_tolerances();
    for (const auto& [id, tol] : cfg.tolerances) {
        if (!known.count(id)) throw ConfigError("tolerance." + id + ": unknown check id");
        if (!(tol > 0.0)) throw ConfigError("tolerance." + id + ": must be > 0");
    }
    if (cfg.random_points < 1) throw ConfigError("random_points must be >= 1");
    if (!(cfg.box > 0.0)) throw ConfigError("box must be > 0");
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
}

}  // namespace soliton::cli
