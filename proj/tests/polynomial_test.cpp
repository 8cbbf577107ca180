#include "soliton/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

namespace soliton {
namespace {

Polynomial poly(std::initializer_list<double> c) {
    std::vector<Scalar> v;
    for (double x : c) v.emplace_back(x, 0.0);
    return Polynomial(std::move(v));
}

void expect_coeffs(const Polynomial& p, std::initializer_list<double> expected) {
    ASSERT_EQ(p.coeffs().size(), expected.size());
    std::size_t j = 0;
    for (double e : expected) {
        EXPECT_DOUBLE_EQ(p.coeffs()[j].real(), e) << "coefficient " << j;
        EXPECT_DOUBLE_EQ(p.coeffs()[j].imag(), 0.0);
        ++j;
    }
}

TEST(Polynomial, FromRoots) {
    expect_coeffs(Polynomial::from_roots({}), {1.0});
    const std::vector<Scalar> one{1.0};
    expect_coeffs(Polynomial::from_roots(one), {-1.0, 1.0});
    const std::vector<Scalar> two{4.0, 1.0};
    expect_coeffs(Polynomial::from_roots(two), {4.0, -5.0, 1.0});
}

TEST(Polynomial, Multiply) {
    expect_coeffs(mul(poly({-1, 1}), poly({1})), {-1, 1});
    expect_coeffs(mul(poly({-1, 1}), poly({-1, 1})), {1, -2, 1});
    const Polynomial P = poly({4, -5, 1});
    expect_coeffs(mul(Polynomial::monomial(1), mul(P, P)), {0, 16, -40, 33, -10, 1});
    EXPECT_TRUE(mul(Polynomial{}, P).is_zero());
}

TEST(Polynomial, Derivative) {
    EXPECT_TRUE(derivative(poly({1})).is_zero());
    EXPECT_EQ(derivative(poly({1})).degree(), -1);
    expect_coeffs(derivative(poly({4, -5, 1})), {-5, 2});
    expect_coeffs(derivative(poly({0, 16, -40, 33, -10, 1})), {16, -80, 99, -40, 5});
}

TEST(Polynomial, Eval) {
    EXPECT_EQ(eval(poly({4, -5, 1}), 4.0), Scalar(0.0));
    EXPECT_EQ(eval(poly({-5, 2}), 4.0), Scalar(3.0));
    EXPECT_EQ(eval(poly({-5, 2}), 1.0), Scalar(-3.0));
    EXPECT_EQ(eval(Polynomial{}, 2.0), Scalar(0.0));
}

TEST(Polynomial, PolynomialPartOverPower) {
    const Polynomial f = poly({0, 1, -2, 1});
    expect_coeffs(polynomial_part_over_power(f, 2), {-2, 1});
    EXPECT_EQ(polynomial_part_over_power(f, 0), f);
    EXPECT_TRUE(polynomial_part_over_power(poly({1}), 3).is_zero());
}

TEST(Polynomial, TrimsExactZerosOnly) {
    const Polynomial p = poly({1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1);
    // (x + 1) - (x) leaves the constant; the x coefficient cancels exactly.
    EXPECT_EQ((poly({1, 1}) - poly({0, 1})).degree(), 0);
    const Polynomial tiny = poly({1, 1e-300});
    EXPECT_EQ(tiny.degree(), 1);
}

TEST(Polynomial, DivideByLinear) {
    const Polynomial P = poly({4, -5, 1});
    expect_coeffs(divide_by_linear(P, 4.0), {-1, 1});
    expect_coeffs(divide_by_linear(P, 1.0), {-4, 1});
}

class PolynomialProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{12345};
};

TEST_F(PolynomialProperties, RootsAreZeros) {
    std::uniform_real_distribution<double> uni(0.1, 10.0);
    std::uniform_int_distribution<int> count(0, 10);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Scalar> roots(static_cast<std::size_t>(count(rng)));
        for (auto& r : roots) r = uni(rng);
        const Polynomial p = Polynomial::from_roots(roots);
        ASSERT_EQ(p.degree(), static_cast<int>(roots.size()));
        double scale = 0.0;
        for (const auto& r : roots) {
            // |p(r)| relative to sum_j |c_j| |r|^j, the size of the Horner terms
            double s = 0.0, rp = 1.0;
            for (const auto& c : p.coeffs()) {
                s += std::abs(c) * rp;
                rp *= std::abs(r);
            }
            scale = s;
            EXPECT_LE(std::abs(p(r)), 1e-12 * scale);
        }
    }
}

TEST_F(PolynomialProperties, ProductRule) {
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        auto random_poly = [&] {
            std::vector<Scalar> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = Scalar(normal(rng), normal(rng));
            return Polynomial(std::move(c));
        };
        const Polynomial p = random_poly();
        const Polynomial q = random_poly();
        const Polynomial lhs = derivative(mul(p, q));
        const Polynomial rhs = mul(derivative(p), q) + mul(p, derivative(q));
        const int n = std::max(lhs.degree(), rhs.degree()) + 1;
        for (int j = 0; j < n; ++j)
            EXPECT_LE(std::abs(lhs.coeff(static_cast<std::size_t>(j)) - rhs.coeff(static_cast<std::size_t>(j))),
                      1e-12 * (1.0 + std::abs(lhs.coeff(static_cast<std::size_t>(j)))));
        if (!p.is_zero() && !q.is_zero()) EXPECT_EQ(mul(p, q).degree(), p.degree() + q.degree());
    }
}

TEST_F(PolynomialProperties, TruncationRemainderHasLowDegree) {
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Scalar> c(static_cast<std::size_t>(trial % 9 + 1));
        for (auto& v : c) v = Scalar(normal(rng), normal(rng));
        const Polynomial f(std::move(c));
        for (std::size_t m = 0; m < 10; ++m) {
            const Polynomial rest = f - mul(Polynomial::monomial(m), polynomial_part_over_power(f, m));
            EXPECT_LT(rest.degree(), static_cast<int>(m));
        }
    }
}

}  // namespace
}  // namespace soliton
