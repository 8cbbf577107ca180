#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>

#include "format.hpp"
#include "soliton/error.hpp"
#include "soliton/kdvcheck.hpp"
#include "soliton/parallel.hpp"
#include "soliton/periods.hpp"
#include "soliton/structmat.hpp"
#include "soliton/theta.hpp"

namespace soliton::cli {

using Json = nlohmann::ordered_json;

namespace {

Json pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }
Json pair(Scalar z) { return pair(std::complex<double>(z)); }

template <class T>
Json real_list(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(static_cast<double>(x));
    return a;
}

/// Real matrix as nested arrays (structural matrices have no imaginary part).
Json real_matrix(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(static_cast<double>(m(i, j).real()));
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Complex matrix as nested [re, im] pairs; `divergent_diagonal` entries become null.
Json complex_matrix(const ComplexMatrix& m, bool divergent_diagonal = false) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(divergent_diagonal && i == j ? Json(nullptr) : pair(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Scalar> coefficients(const Polynomial& p, std::size_t count) {
    std::vector<Scalar> c(count);
    for (std::size_t j = 0; j < count; ++j) c[j] = p.coeff(j);
    return c;
}

std::string join_real(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
    return s;
}

void print_real_matrix(std::ostream& out, const std::string& name, const ComplexMatrix& m) {
    out << name << " =\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << fmt(static_cast<double>(m(i, j).real()));
        out << "]\n";
    }
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::vector<double> to_double(const std::vector<Real>& v) { return {v.begin(), v.end()}; }
std::vector<double> real_parts(const std::vector<Scalar>& v) {
    std::vector<double> r;
    for (const auto& z : v) r.push_back(static_cast<double>(z.real()));
    return r;
}

}  // namespace

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const SolitonCurve c(cfg.k);
    const int g = c.genus();
    const auto n = static_cast<std::size_t>(g);
    const std::vector<Scalar> mu = coefficients(c.P(), n + 1);
    const std::vector<Scalar> lambda = coefficients(c.f(), 2 * n + 2);

    if (cfg.format == Format::Json) {
        Json doc;
        doc["genus"] = g;
        doc["k"] = real_list(c.k());
        doc["a"] = real_list(c.a());
        doc["mu"] = real_list(real_parts(mu));
        doc["lambda"] = real_list(real_parts(lambda));
        doc["W"] = real_matrix(build_W(c));
        doc["M"] = real_matrix(build_M(c));
        doc["K0"] = real_matrix(build_K(c, 0));
        doc["K1"] = real_matrix(build_K(c, 1));
        doc["Pdiag"] = real_matrix(build_Pdiag(c));
        doc["V"] = real_matrix(build_V(c));
        doc["W_inverse"] = real_matrix(w_inverse(c));
        write_json(out, doc);
        return kSuccess;
    }

    out << "genus g = " << g << '\n';
    out << "wavenumbers k (descending) = " << join_real(c.k()) << '\n';
    out << "branch points a_i = k_i^2 = " << join_real(to_double(c.a())) << '\n';
    out << "P(x) = prod (x - a_i), coefficients mu_0..mu_g = " << join_real(real_parts(mu)) << '\n';
    out << "f(x) = x P(x)^2, coefficients lambda_0..lambda_" << 2 * g + 1 << " = " << join_real(real_parts(lambda))
        << '\n';
    out << "lambda_" << 2 * g << " = " << fmt(static_cast<double>(c.lambda(2 * g).real())) << '\n';
    print_real_matrix(out, "W (rows: coefficients of P(x)/(x - a_i), ascending)", build_W(c));
    print_real_matrix(out, "M (unit lower triangular, M[r][c] = mu_{g-(r-c)})", build_M(c));
    print_real_matrix(out, "K(0) (rows k_i^{2g-2}, ..., k_i^0)", build_K(c, 0));
    print_real_matrix(out, "K(1) (rows k_i^{2g-1}, ..., k_i^1)", build_K(c, 1));
    print_real_matrix(out, "Pdiag = diag P'(a_i)", build_Pdiag(c));
    print_real_matrix(out, "V (Vandermonde, V[i][j] = a_j^i)", build_V(c));
    print_real_matrix(out, "W^{-1} = V Pdiag^{-1}", w_inverse(c));
    return kSuccess;
}

int cmd_periods(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const SolitonCurve c(cfg.k);
    const PeriodData p = compute_periods(c);
    if (cfg.format == Format::Json) {
        Json doc;
        doc["genus"] = c.genus();
        doc["k"] = real_list(c.k());
        doc["omega_prime"] = complex_matrix(p.omega1);
        doc["omega_second"] = complex_matrix(p.omega2_off, true);
        doc["tau"] = complex_matrix(p.tau_off, true);
        doc["tau_diagonal"] = "divergent";
        doc["eta_prime"] = complex_matrix(p.eta1);
        doc["C"] = complex_matrix(p.C);
        write_json(out, doc);
        return kSuccess;
    }
    out << "quantity,i,j,value\n";
    auto emit = [&](const char* name, const ComplexMatrix& m, bool divergent_diagonal) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                out << name << ',' << i + 1 << ',' << j + 1 << ',';
                if (divergent_diagonal && i == j) out << "divergent";
                else out << fmt_complex(std::complex<double>(m(i, j)));
                out << '\n';
            }
    };
    emit("omega_prime", p.omega1, false);
    emit("omega_second", p.omega2_off, true);
    emit("tau", p.tau_off, true);
    emit("eta_prime", p.eta1, false);
    emit("C", p.C, false);
    return kSuccess;
}

int cmd_tau(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const SolitonCurve c(cfg.k);
    const int g = c.genus();
    const HirotaGauge gauge = to_hirota_gauge(build_theta(c, {cfg.characteristic_phase}));

    // Order terms by subset mask so the output does not depend on how the
    // sum happened to be assembled.
    struct Row {
        unsigned mask;
        const ExpTerm* term;
    };
    std::vector<Row> rows;
    for (const auto& term : gauge.tau.terms()) {
        unsigned found = ~0u;
        for (unsigned mask = 0; mask < (1u << g) && found == ~0u; ++mask) {
            bool match = true;
            for (int m = 0; m < g && match; ++m) {
                double s = 0.0;
                for (int i = 0; i < g; ++i)
                    if (mask & (1u << i)) s += gauge.generators[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
                match = std::abs(s - term.wavevector[static_cast<std::size_t>(m)]) <= 1e-9 * std::max(1.0, std::abs(s));
            }
            if (match) found = mask;
        }
        if (found == ~0u) throw Error(ErrorCode::GaugeAmbiguous, "tau term does not match a soliton subset");
        rows.push_back({found, &term});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.mask < b.mask; });

    auto subset = [g](unsigned mask) {
        std::string s;
        for (int i = 0; i < g; ++i) s.push_back((mask & (1u << i)) ? '1' : '0');
        return s;
    };

    if (cfg.format == Format::Json) {
        Json doc;
        doc["genus"] = g;
        doc["k"] = real_list(c.k());
        Json phases = Json::array();
        for (const auto& ph : gauge.phases) phases.push_back(pair(ph));
        doc["phases"] = phases;
        Json terms = Json::array();
        for (const auto& r : rows) {
            Json t;
            t["subset"] = subset(r.mask);
            t["amplitude"] = pair(r.term->amplitude);
            t["wavevector"] = real_list(r.term->wavevector);
            terms.push_back(std::move(t));
        }
        doc["terms"] = terms;
        write_json(out, doc);
        return kSuccess;
    }
    out << "subset,amplitude";
    for (int m = 1; m <= g; ++m) out << ",w" << m;
    out << '\n';
    for (const auto& r : rows) {
        out << subset(r.mask) << ',' << fmt_complex(r.term->amplitude);
        for (const double w : r.term->wavevector) out << ',' << fmt(w);
        out << '\n';
    }
    return kSuccess;
}

namespace {

std::vector<double> axis_values(const Axis& a) {
    std::vector<double> v(static_cast<std::size_t>(a.count));
    const double step = (a.max - a.min) / (a.count - 1);
    for (int i = 0; i < a.count; ++i) v[static_cast<std::size_t>(i)] = a.min + step * i;
    v.back() = a.max;
    return v;
}

}  // namespace

int cmd_field(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const SolitonCurve c(cfg.k);
    const int g = c.genus();
    ThetaOptions opt;
    opt.characteristic_phase = cfg.characteristic_phase;
    const SolitonField field = cfg.offset ? SolitonField(c, *cfg.offset, opt) : SolitonField(c, opt);

    const std::vector<double> t1 = axis_values(cfg.t1);
    const std::vector<double> t2 = axis_values(cfg.t2);
    const std::size_t total = t1.size() * t2.size();
    std::vector<double> values(total, 0.0);
    std::vector<char> missing(total, 0);

    // Rows ordered with t2 outer, t1 inner.
    parallel_for(total, cfg.threads, [&](std::size_t idx) {
        std::vector<double> t(static_cast<std::size_t>(g), 0.0);
        t[0] = t1[idx % t1.size()];
        if (g >= 2) t[1] = t2[idx / t1.size()];
        for (std::size_t m = 2; m < t.size() && m - 2 < cfg.higher_times.size(); ++m) t[m] = cfg.higher_times[m - 2];
        try {
            values[idx] = field(PhasePoint(std::move(t)));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ThetaZero) throw;
            missing[idx] = 1;
        }
    });

    long missing_count = 0;
    for (const char m : missing) missing_count += m;
    if (missing_count > 0) err << "field: " << missing_count << " grid points on the theta divisor left missing\n";

    if (cfg.format == Format::Json) {
        Json doc;
        doc["genus"] = g;
        doc["k"] = real_list(c.k());
        doc["offset"] = field.offset();
        doc["baseline"] = field.baseline();
        doc["higher_times"] = real_list(cfg.higher_times);
        doc["missing"] = missing_count;
        doc["columns"] = Json::array({"t1", "t2", "U"});
        Json rows = Json::array();
        for (std::size_t idx = 0; idx < total; ++idx) {
            rows.push_back(Json::array({t1[idx % t1.size()], t2[idx / t1.size()],
                                        missing[idx] ? Json(nullptr) : Json(values[idx])}));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump() << '\n';
        return kSuccess;
    }
    out << "t1,t2,U\n";
    for (std::size_t idx = 0; idx < total; ++idx) {
        out << fmt(t1[idx % t1.size()]) << ',' << fmt(t2[idx / t1.size()]) << ','
            << (missing[idx] ? std::string("nan") : fmt(values[idx])) << '\n';
    }
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const SolitonCurve c(cfg.k);
    SuiteOptions opt;
    opt.seed = cfg.seed;
    opt.random_points = cfg.random_points;
    opt.box = cfg.box;
    opt.tolerances = cfg.tolerances;
    opt.threads = cfg.threads;
    const VerificationReport report = run_suite(c, opt);

    // Human-readable table on the diagnostics stream.
    err << "verify: k = (" << join_real(c.k()) << "), genus " << c.genus() << ", seed " << cfg.seed << ", "
        << cfg.random_points << " random points\n";
    err << std::left << std::setw(26) << "check" << std::setw(12) << "max_error" << std::setw(12) << "tolerance"
        << std::setw(8) << "points" << "status\n";
    for (const auto& r : report.checks) {
        const std::string status = r.skipped ? r.note : (r.pass ? "PASS" : "FAIL");
        err << std::left << std::setw(26) << r.id << std::setw(12) << (r.skipped ? "-" : fmt_sci(r.max_error, 2))
            << std::setw(12) << (r.skipped ? "-" : fmt_sci(r.tolerance, 2)) << std::setw(8) << r.points << status;
        if (!r.skipped && !r.pass && !r.note.empty()) err << "  (" << r.note << ")";
        err << '\n';
    }

    if (cfg.format == Format::Json) {
        Json doc;
        doc["k"] = real_list(c.k());
        doc["genus"] = c.genus();
        doc["seed"] = cfg.seed;
        doc["random_points"] = cfg.random_points;
        doc["all_passed"] = report.all_passed();
        Json checks = Json::array();
        for (const auto& r : report.checks) {
            Json j;
            j["id"] = r.id;
            j["max_error"] = std::isfinite(r.max_error) ? Json(r.max_error) : Json(nullptr);
            j["tolerance"] = r.tolerance;
            j["pass"] = r.pass;
            j["skipped"] = r.skipped;
            j["points"] = r.points;
            j["note"] = r.note;
            checks.push_back(std::move(j));
        }
        doc["checks"] = std::move(checks);
        write_json(out, doc);
    } else {
        out << "id,max_error,tolerance,pass,skipped,points,note\n";
        for (const auto& r : report.checks) {
            std::string note = r.note;
            std::replace(note.begin(), note.end(), ',', ';');
            std::replace(note.begin(), note.end(), '"', '\'');
            out << r.id << ',' << fmt(r.max_error) << ',' << fmt(r.tolerance) << ',' << (r.pass ? "true" : "false")
                << ',' << (r.skipped ? "true" : "false") << ',' << r.points << ",\"" << note << "\"\n";
        }
    }

    if (report.all_passed()) return kSuccess;
    err << "verify: failing checks:";
    for (const auto& r : report.checks)
        if (!r.pass && !r.skipped) err << ' ' << r.id;
    err << '\n';
    return kVerificationFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Soliton solutions of KdV from degenerate hyperelliptic curves"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides ov;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "run configuration file (key = value)");
        sub->add_option("--k", ov.k, "wavenumbers, e.g. \"2,1\"");
        sub->add_option("--grid", ov.grid, "field grid, e.g. \"t1:-3:3:121,t2:-3:3:121\"");
        sub->add_option("--format", ov.format, "csv or json");
        sub->add_option("--out", ov.out, "output file (default stdout)");
        sub->add_option("--seed", ov.seed, "random seed for verify");
        sub->add_option("--threads", ov.threads, "worker threads for field and verify");
    };
    struct Command {
        const char* name;
        const char* help;
        int (*fn)(const RunConfig&, std::ostream&, std::ostream&);
    };
    const Command commands[] = {
        {"info", "curve data and structural matrices", cmd_info},
        {"periods", "period matrices, tau, eta' and C", cmd_periods},
        {"tau", "Hirota-gauge tau function terms", cmd_tau},
        {"field", "sample U(t1, t2) on the grid", cmd_field},
        {"verify", "run every invariant check; exit 1 on failure", cmd_verify},
    };
    std::vector<CLI::App*> subs;
    for (const auto& cmd : commands) {
        subs.push_back(app.add_subcommand(cmd.name, cmd.help));
        add_common(subs.back());
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    const Command* chosen = nullptr;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed()) chosen = &commands[i];

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        apply_overrides(cfg, ov);
        validate(cfg);

        std::ostringstream buffer;
        buffer.imbue(std::locale::classic());
        const int status = chosen->fn(cfg, buffer, err);
        if (cfg.out.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) throw ConfigError("cannot open output file '" + cfg.out + "'");
            file << buffer.str();
            if (!file.flush()) throw ConfigError("failed writing output file '" + cfg.out + "'");
        }
        return status;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error& e) {
        err << (e.is_validation() ? "validation error: " : "numerical error: ") << e.what() << '\n';
        return e.is_validation() ? kConfigError : kNumericalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kNumericalError;
    }
}

}  // namespace soliton::cli
