#include "soliton/kdvcheck.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "soliton/chain_rule.hpp"
#include "soliton/error.hpp"
#include "test_support.hpp"

namespace soliton {
namespace {

TEST(HirotaTau, OneAndTwoSoliton) {
    const std::vector<double> k1{1.5};
    const std::vector<double> ph1{0.0};
    const ExponentialSum t1 = hirota_tau(k1, ph1);
    ASSERT_EQ(t1.size(), 2u);
    EXPECT_NEAR(t1(PhasePoint{0.2}).real(), 1.0 + std::exp(0.6), 1e-14);

    const std::vector<double> k2{2.0, 1.0};
    const std::vector<double> ph2{0.1, -0.3};
    const ExponentialSum t2 = hirota_tau(k2, ph2);
    ASSERT_EQ(t2.size(), 4u);
    const int both = t2.find(std::vector<double>{6.0, 18.0});
    ASSERT_GE(both, 0);
    EXPECT_NEAR(t2.terms()[static_cast<std::size_t>(both)].amplitude.real(), std::exp(-0.4) / 9.0, 1e-15);
}

TEST(HirotaTau, Validation) {
    const std::vector<double> dup{1.0, 1.0};
    const std::vector<double> ph{0.0, 0.0};
    EXPECT_THROW(hirota_tau(dup, ph), Error);
    const std::vector<double> k{1.0, 2.0};
    const std::vector<double> one{0.0};
    EXPECT_THROW(hirota_tau(k, one), Error);
}

TEST(ChainRule, AnchorDirections) {
    const SolitonCurve c{2.0, 1.0};
    const ChainRule rule(c);
    EXPECT_EQ(rule.u_direction(1), (std::vector<double>{1.0, 0.0}));
    // mu_1 = -(a_1 + a_2) = -5
    EXPECT_EQ(rule.u_direction(0), (std::vector<double>{-5.0, 1.0}));
}

TEST(ChainRuleProperties, DirectionsAreJacobianColumns) {
    // d/du_i of any function of t(u) equals the directional derivative along
    // u_direction(i); checked with finite differences of t_from_u.
    std::mt19937_64 rng(37);
    for (int g = 1; g <= 6; ++g) {
        const SolitonCurve c(testing::random_wavenumbers(rng, g, 0.3, 2.0, 0.05));
        const ChainRule rule(c);
        std::vector<double> u(static_cast<std::size_t>(g));
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        for (auto& v : u) v = uni(rng);
        const std::vector<double> t0 = rule.t_from_u(u);
        const std::vector<double> back = rule.u_from_t(t0);
        for (int i = 0; i < g; ++i)
            EXPECT_NEAR(back[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)], 1e-10);
        for (int i = 0; i < g; ++i) {
            std::vector<double> up = u;
            up[static_cast<std::size_t>(i)] += 1.0;
            const std::vector<double> t1 = rule.t_from_u(up);
            for (int m = 0; m < g; ++m) {
                const auto mi = static_cast<std::size_t>(m);
                // t is linear in u, so a unit step gives the column exactly.
                EXPECT_NEAR(t1[mi] - t0[mi], rule.u_direction(i)[mi], 1e-9 * (1.0 + std::abs(t0[mi])))
                    << "g=" << g << " i=" << i << " m=" << m;
            }
        }
    }
}

TEST(Kdv, GenusOneRejected) {
    try {
        (void)kdv_residual(SolitonCurve{1.0}, PhasePoint{0.0}, 0.0);
        FAIL() << "expected throw";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GenusTooSmall);
    }
}

TEST(Kdv, ConsistentFormVanishesAtConsistentOffset) {
    const SolitonCurve c{2.0, 1.0};
    const double s = kdv_consistent_offset(c);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const PhasePoint p = testing::random_point(rng, 2, 3.0);
        EXPECT_LT(kdv_residual(c, p, s, KdvForm::Consistent), 1e-8);
    }
}

TEST(Kdv, OtherOffsetsAndDisplayedFormFail) {
    const SolitonCurve c{2.0, 1.0};
    const ExponentialSum theta = build_theta(c);
    std::mt19937_64 rng(43);
    const std::vector<PhasePoint> pts = sample_points(theta, 50, 2.0, 43);
    auto worst = [&](double s, KdvForm f) {
        double w = 0.0;
        for (const auto& p : pts) w = std::max(w, kdv_residual(c, theta, p, s, f));
        return w;
    };
    EXPECT_GT(worst(1.0, KdvForm::Displayed), 1e-3);
    EXPECT_GT(worst(-1.0, KdvForm::Displayed), 1e-3);
    EXPECT_GT(worst(kdv_consistent_offset(c), KdvForm::Displayed), 1e-3);
    EXPECT_GT(worst(kdv_consistent_offset(c) + 0.5, KdvForm::Consistent), 1e-3);
    (void)rng;
}

TEST(KdvProperties, HigherGenus) {
    std::mt19937_64 rng(47);
    for (int g = 2; g <= 5; ++g) {
        const SolitonCurve c(testing::random_wavenumbers(rng, g, 0.4, 1.6, 0.1));
        const ExponentialSum theta = build_theta(c);
        for (const auto& p : sample_points(theta, 30, 2.0, 100 + static_cast<unsigned>(g)))
            EXPECT_LT(kdv_residual(c, theta, p, kdv_consistent_offset(c), KdvForm::Consistent), 1e-8) << "g=" << g;
    }
}

TEST(KdvProperties, WideWavenumberRange) {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 12; ++trial) {
        const int g = 2 + trial % 4;
        const SolitonCurve c(testing::random_wavenumbers(rng, g, 0.5, 5.0, 0.05));
        const ExponentialSum theta = build_theta(c);
        for (const auto& p : sample_points(theta, 20, 2.0, 200 + static_cast<unsigned>(trial)))
            EXPECT_LT(kdv_residual(c, theta, p, kdv_consistent_offset(c), KdvForm::Consistent), 1e-8) << "g=" << g;
    }
}

TEST(KdvProperties, ResidualIsGaugeInvariant) {
    for (const SolitonCurve& c : {SolitonCurve{2.0, 1.0}, SolitonCurve{3.0, 2.0, 1.0}}) {
        const ExponentialSum theta = build_theta(c);
        const ExponentialSum gauged = to_hirota_gauge(theta).gauge_equivalent();
        const double s = kdv_consistent_offset(c);
        for (const auto& p : sample_points(theta, 50, 2.0, 9)) {
            const double a = kdv_residual(c, theta, p, s, KdvForm::Consistent);
            const double b = kdv_residual(c, gauged, p, s, KdvForm::Consistent);
            EXPECT_LT(std::abs(a - b), 1e-10);
        }
    }
}

TEST(Oracle, MatchesHirota) {
    for (const std::vector<double>& k :
         {std::vector<double>{1.0}, std::vector<double>{2.0, 1.0}, std::vector<double>{2.2, 1.7, 1.1, 0.8, 0.5}}) {
        const SolitonCurve c(k);
        const std::vector<PhasePoint> pts = sample_points(build_theta(c), 200, 3.0, 7);
        const CheckResult r = oracle_compare(c, pts, 1e-8, 2);
        EXPECT_TRUE(r.pass) << "g=" << c.genus() << " err=" << r.max_error << " " << r.note;
        EXPECT_EQ(r.points, 200);
    }
}

TEST(Suite, AllChecksPass) {
    for (const std::vector<double>& k : {std::vector<double>{1.0}, std::vector<double>{2.0, 1.0},
                                         std::vector<double>{3.0, 2.0, 1.0}}) {
        SuiteOptions opt;
        opt.random_points = 60;
        opt.threads = 2;
        const VerificationReport rep = run_suite(SolitonCurve(k), opt);
        for (const auto& r : rep.checks)
            EXPECT_TRUE(r.pass || r.skipped) << r.id << " err=" << r.max_error << " tol=" << r.tolerance << " "
                                             << r.note;
        EXPECT_TRUE(rep.all_passed());
        const CheckResult* kdv = rep.find("kdv_residual");
        ASSERT_NE(kdv, nullptr);
        EXPECT_EQ(kdv->skipped, k.size() == 1);
    }
}

TEST(Suite, ToleranceOverrideCanFail) {
    SuiteOptions opt;
    opt.random_points = 20;
    opt.tolerances["derivative_fd"] = 0.0;
    const VerificationReport rep = run_suite(SolitonCurve{2.0, 1.0}, opt);
    EXPECT_FALSE(rep.all_passed());
    EXPECT_FALSE(rep.find("derivative_fd")->pass);
}

TEST(Suite, SamplingIsDeterministic) {
    const ExponentialSum th = build_theta(SolitonCurve{2.0, 1.0});
    const auto a = sample_points(th, 10, 3.0, 5);
    const auto b = sample_points(th, 10, 3.0, 5);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t m = 0; m < 2; ++m) EXPECT_EQ(a[i][m], b[i][m]);
}

}  // namespace
}  // namespace soliton
