#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <locale>
#include <numbers>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "format.hpp"

namespace soliton::cli {
namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "soliton");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / ("soliton_cli_test_" + name);
    std::ofstream(p) << content;
    return p;
}

TEST(Config, ParsesAllKeys) {
    const RunConfig cfg = parse_config(
        "# comment\n"
        "k = 3, 2, 1   # trailing comment\n"
        "grid = t1:-1:1:11, t2:0:2:5\n"
        "times = 0.5\n"
        "format = json\n"
        "out = x.json\n"
        "seed = 7\n"
        "random_points = 10\n"
        "box = 2\n"
        "threads = 3\n"
        "offset = -1.5\n"
        "characteristic_phase = true\n"
        "tolerance.kdv_residual = 1e-30\n");
    EXPECT_EQ(cfg.k, (std::vector<double>{3.0, 2.0, 1.0}));
    EXPECT_EQ(cfg.t1.count, 11);
    EXPECT_EQ(cfg.t2.max, 2.0);
    EXPECT_EQ(cfg.higher_times, std::vector<double>{0.5});
    EXPECT_EQ(cfg.format, Format::Json);
    EXPECT_EQ(cfg.out, "x.json");
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.random_points, 10);
    EXPECT_EQ(cfg.threads, 3u);
    ASSERT_TRUE(cfg.offset.has_value());
    EXPECT_EQ(*cfg.offset, -1.5);
    EXPECT_TRUE(cfg.characteristic_phase);
    EXPECT_EQ(cfg.tolerances.at("kdv_residual"), 1e-30);
    EXPECT_NO_THROW(validate(cfg));
}

TEST(Config, RejectsMalformedInput) {
    for (const char* text : {"k 2,1\n", "k = 2,,1\n", "k = 2\nk = 3\n", "colour = red\n", "grid = t1:0:1\n",
                             "grid = t9:0:1:3\n", "seed = -1\n", "format = xml\n", "k = 1e999\n", "k = nan\n",
                             "threads = two\n", "characteristic_phase = maybe\n", "= 3\n"}) {
        EXPECT_THROW(parse_config(text), ConfigError) << text;
    }
}

TEST(Config, ValidationInvariants) {
    RunConfig cfg = parse_config("k = 2,1\n");
    EXPECT_NO_THROW(validate(cfg));
    cfg.t1 = {0.0, 0.0, 2};
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg = parse_config("k = 2,1\nt2 = 0:1:1\n");
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg = parse_config("k = 2,1\ntolerance.kdv_residual = 0\n");
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg = parse_config("k = 2,1\ntolerance.nonsense = 1\n");
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg = parse_config("k = 2,1\ntimes = 1\n");
    EXPECT_THROW(validate(cfg), ConfigError);
    EXPECT_THROW(validate(parse_config("")), ConfigError);
}

TEST(Config, OverridesWin) {
    RunConfig cfg = parse_config("k = 2,1\nformat = csv\n");
    Overrides o;
    o.k = "3, 2, 1";
    o.grid = "t2:-5:5:3";
    o.format = "json";
    o.seed = 99;
    apply_overrides(cfg, o);
    EXPECT_EQ(cfg.k.size(), 3u);
    EXPECT_EQ(cfg.t2.count, 3);
    EXPECT_EQ(cfg.t1.count, 121);
    EXPECT_EQ(cfg.format, Format::Json);
    EXPECT_EQ(cfg.seed, 99u);
}

TEST(Format, LocaleIndependentNumbers) {
    EXPECT_EQ(fmt(0.1), "0.1");
    EXPECT_EQ(fmt(-0.0), "0");
    EXPECT_EQ(fmt(1e-30), "1e-30");
    EXPECT_EQ(fmt(std::nan("")), "nan");
    EXPECT_EQ(fmt_complex({1.5, -2.0}), "1.5-2i");
    EXPECT_EQ(fmt_complex({0.0, 0.25}), "0+0.25i");
    try {
        std::locale::global(std::locale("de_DE.UTF-8"));
    } catch (const std::runtime_error&) {
        GTEST_SKIP() << "de_DE locale not installed";
    }
    EXPECT_EQ(fmt(0.5), "0.5");
    std::locale::global(std::locale::classic());
}

TEST(Cli, InfoExample) {
    const Result r = run_args({"info", "--k", "2,1"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("lambda_4 = -10"), std::string::npos);
    EXPECT_NE(r.out.find("[-1, 1]\n  [-4, 1]"), std::string::npos);
}

TEST(Cli, ValidationErrorsExitTwo) {
    Result r = run_args({"info", "--k", "1,1"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("duplicate wavenumber"), std::string::npos);
    EXPECT_EQ(run_args({"info", "--k", ""}).status, 2);
    EXPECT_EQ(run_args({"info"}).status, 2);
    EXPECT_EQ(run_args({"info", "--k", "-1"}).status, 2);
    EXPECT_EQ(run_args({"field", "--k", "1", "--grid", "t1:0:0:2"}).status, 2);
    EXPECT_EQ(run_args({"bogus"}).status, 2);
    EXPECT_EQ(run_args({}).status, 2);
    EXPECT_EQ(run_args({"info", "--config", "/nonexistent/file.conf"}).status, 2);
    EXPECT_EQ(run_args({"verify", "--k", "2,1", "--seed", "x"}).status, 2);
}

TEST(Cli, PeriodsJsonRoundTrips) {
    const Result r = run_args({"periods", "--k", "2,1", "--format", "json"});
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(nlohmann::ordered_json::parse(doc.dump()), doc);
    EXPECT_NEAR(doc["tau"][0][1][1].get<double>(), std::log(3.0) / std::numbers::pi, 1e-15);
    EXPECT_TRUE(doc["tau"][0][0].is_null());
    EXPECT_NEAR(doc["C"][1][1][0].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(doc["C"][1][1][1].get<double>(), 0.0, 1e-12);
}

TEST(Cli, TauTerms) {
    Result r = run_args({"tau", "--k", "2,1"});
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("11,0.1111111111111111"), std::string::npos) << r.out;
    r = run_args({"tau", "--k", "0.7", "--format", "json"});
    const auto doc = nlohmann::ordered_json::parse(r.out);
    ASSERT_EQ(doc["terms"].size(), 2u);
    for (const auto& t : doc["terms"]) EXPECT_NEAR(t["amplitude"][0].get<double>(), 1.0, 1e-14);
    r = run_args({"tau", "--k", "3,2,1.5,1", "--format", "json"});
    EXPECT_EQ(nlohmann::ordered_json::parse(r.out)["terms"].size(), 16u);
}

TEST(Cli, FieldDeterministicAcrossThreads) {
    const Result a = run_args({"field", "--k", "2,1", "--grid", "t1:-3:3:31,t2:-1:1:7", "--threads", "1"});
    const Result b = run_args({"field", "--k", "2,1", "--grid", "t1:-3:3:31,t2:-1:1:7", "--threads", "4"});
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1 + 31 * 7);
    EXPECT_EQ(a.out.substr(0, 8), "t1,t2,U\n");
}

TEST(Cli, FieldWritesFileAndJson) {
    const auto path = std::filesystem::temp_directory_path() / "soliton_cli_test_field.json";
    const Result r =
        run_args({"field", "--k", "1", "--grid", "t1:-2:2:5,t2:0:1:2", "--format", "json", "--out", path.string()});
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const auto doc = nlohmann::ordered_json::parse(in);
    EXPECT_EQ(doc["rows"].size(), 10u);
    EXPECT_EQ(doc["columns"][2], "U");
    std::filesystem::remove(path);
}

TEST(Cli, FieldThetaZeroRowsAreMissing) {
    // The characteristic phase puts theta = 0 at the origin for g = 1.
    const auto cfg = temp_file("charphase.conf", "k = 1\ncharacteristic_phase = true\ngrid = t1:-1:1:3, t2:0:1:2\n");
    const Result r = run_args({"field", "--config", cfg.string()});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("0,0,nan\n"), std::string::npos) << r.out;
    EXPECT_NE(r.err.find("2 grid points on the theta divisor"), std::string::npos) << r.err;
    std::filesystem::remove(cfg);
}

TEST(Cli, VerifyExitCodes) {
    Result r = run_args({"verify", "--k", "2,1"});
    EXPECT_EQ(r.status, 0) << r.err;
    const auto cfg = temp_file("absurd.conf", "k = 2,1\ntolerance.kdv_residual = 1e-30\n");
    r = run_args({"verify", "--config", cfg.string(), "--format", "json"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("failing checks: kdv_residual"), std::string::npos);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    EXPECT_FALSE(doc["all_passed"].get<bool>());
    std::filesystem::remove(cfg);

    r = run_args({"verify", "--k", "1"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.err.find("skipped (g=1)"), std::string::npos);
}

TEST(Cli, VerifyIsReproducible) {
    const Result a = run_args({"verify", "--k", "3,2,1", "--seed", "5", "--format", "json"});
    const Result b = run_args({"verify", "--k", "3,2,1", "--seed", "5", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace soliton::cli
