#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jsr/polar_norm.hpp"

using namespace jsr;
using std::numbers::pi;

namespace {

PolarNorm random_symmetric_gauge(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> value(0.5, 2.0);
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
        values[k] = values[k + n / 2] = value(rng);
    }
    return PolarNorm(std::move(values));
}

}  // namespace

TEST(PolarNorm, Construction) {
    EXPECT_THROW(PolarNorm::constant(7), InvalidGauge);
    EXPECT_THROW(PolarNorm(std::vector<double>(8, 0.0)), InvalidGauge);
    std::vector<double> bad(8, 1.0);
    bad[3] = NAN;
    EXPECT_THROW(PolarNorm{bad}, InvalidGauge);
    EXPECT_NO_THROW(PolarNorm::constant(9));
}

TEST(PolarNorm, GridHasExactZeroNode) {
    const auto p = PolarNorm::constant(3000);
    ASSERT_TRUE(p.zero_node().has_value());
    EXPECT_EQ(*p.zero_node(), 1500u);
    EXPECT_EQ(p.node_angle(1500), 0.0);
    EXPECT_EQ(p.node_angle(0), -pi);
    EXPECT_FALSE(PolarNorm::constant(9).zero_node().has_value());
}

TEST(PolarNorm, EvalDirectionExamples) {
    const auto one = PolarNorm::constant(16);
    for (double phi : {-10.0, -pi, -1.0, 0.0, 0.3, pi, 7.5}) {
        EXPECT_DOUBLE_EQ(one.eval_direction(phi), 1.0);
    }
    std::vector<double> alternating{1, 2, 1, 2, 1, 2, 1, 2};  // period 4 pattern on an 8-grid
    const PolarNorm p(alternating);
    // nodes at -pi, -3pi/4, ..., midpoint between two nodes
    EXPECT_DOUBLE_EQ(p.eval_direction(-7 * pi / 8), 1.5);
    // wrap segment from the last node (3pi/4) to node 0 (-pi = pi)
    EXPECT_DOUBLE_EQ(p.eval_direction(7 * pi / 8), 1.5);
    EXPECT_DOUBLE_EQ(p.eval_direction(pi), 1.0);
    EXPECT_DOUBLE_EQ(p.eval_direction(-pi), 1.0);
}

TEST(PolarNorm, EvalDirectionFourNodeLayout) {
    // the 4-node layout of values (1,2,1,2) at -pi, -pi/2, 0, pi/2, embedded in an 8-grid
    const PolarNorm p({1, 1.5, 2, 1.5, 1, 1.5, 2, 1.5});
    EXPECT_DOUBLE_EQ(p.eval_direction(-3 * pi / 4), 1.5);
    EXPECT_DOUBLE_EQ(p.eval_direction(3 * pi / 4), 1.5);
    EXPECT_DOUBLE_EQ(p.eval_direction(-pi / 2), 2.0);
}

TEST(PolarNorm, EvalExamples) {
    const auto one = PolarNorm::constant(64);
    EXPECT_DOUBLE_EQ(one.eval({3, 4}), 5.0);
    EXPECT_EQ(one.eval({0, 0}), 0.0);
    std::vector<double> values(64, 1.0);
    values[32] = 2.0;  // phi = 0
    EXPECT_DOUBLE_EQ(PolarNorm(values).eval({1, 0}), 2.0);
}

TEST(PolarNorm, Homogeneity) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coord(-5, 5);
    std::uniform_real_distribution<double> factor(0, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_symmetric_gauge(rng, 64);
        const Vec2 x{coord(rng), coord(rng)};
        const double base = p.eval(x);
        // powers of two scale without rounding
        EXPECT_EQ(p.eval({4 * x[0], 4 * x[1]}), 4 * base);
        const double c = factor(rng);
        EXPECT_NEAR(p.eval({c * x[0], c * x[1]}), c * base, 1e-14 * c * base);
        EXPECT_NEAR(p.eval({-c * x[0], -c * x[1]}), c * base, 1e-12 * c * base);
    }
}

TEST(PolarNorm, ContinuousAcrossSeam) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_symmetric_gauge(rng, 64);
        double lipschitz = 0.0;
        const double h = 2 * pi / 64;
        for (std::size_t k = 0; k < 64; ++k) {
            lipschitz = std::max(lipschitz, std::abs(p[(k + 1) % 64] - p[k]) / h);
        }
        for (double eps : {1e-3, 1e-6, 1e-9}) {
            EXPECT_LE(std::abs(p.eval_direction(-pi + eps) - p.eval_direction(pi - eps)), lipschitz * 2 * eps + 1e-14);
        }
    }
}

TEST(PolarNorm, UnitBall) {
    const auto one = PolarNorm::constant(100);
    const auto ball = unit_ball(one);
    ASSERT_EQ(ball.size(), 100u);
    for (const auto& v : ball) {
        EXPECT_NEAR(std::hypot(v[0], v[1]), 1.0, 1e-15);
    }
    const auto half = unit_ball(one.scaled(2.0));
    for (std::size_t k = 0; k < 100; ++k) {
        EXPECT_DOUBLE_EQ(half[k][0], ball[k][0] / 2);
        EXPECT_DOUBLE_EQ(half[k][1], ball[k][1] / 2);
    }
}

TEST(PolarNorm, EccentricityExamples) {
    std::mt19937_64 rng(33);
    const auto q = random_symmetric_gauge(rng, 128);
    EXPECT_DOUBLE_EQ(eccentricity(q, q), 1.0);
    EXPECT_NEAR(eccentricity(q.scaled(3.0), q), 1.0, 1e-15);

    // the square's gauge max(|cos|, |sin|) against the circle: ratio range [1, sqrt 2]
    for (std::size_t n : {3000u, 1000u, 1002u}) {
        std::vector<double> square(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double phi = grid_angle(k, n);
            square[k] = std::max(std::abs(std::cos(phi)), std::abs(std::sin(phi)));
        }
        // pi/4 is a node when 8 | n; otherwise the nearest node is up to pi/n away and 1/cos has slope sqrt 2 there
        const double slack = n % 8 == 0 ? 1.0 / n : std::sqrt(2.0) * pi / n;
        EXPECT_NEAR(eccentricity(PolarNorm::constant(n), PolarNorm(square)), std::sqrt(2.0), slack);
    }
    EXPECT_THROW(eccentricity(PolarNorm::constant(8), PolarNorm::constant(10)), GridMismatch);
}

TEST(PolarNorm, EccentricityProperties) {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> factor(0.01, 100);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_symmetric_gauge(rng, 32);
        const auto q = random_symmetric_gauge(rng, 32);
        const double e = eccentricity(p, q);
        EXPECT_GE(e, 1.0);
        EXPECT_NEAR(eccentricity(q, p), e, 1e-14 * e);
        EXPECT_GE(e * eccentricity(q, p), 1.0);
        EXPECT_NEAR(eccentricity(p.scaled(factor(rng)), q), e, 1e-13 * e);
    }
}

TEST(PolarNorm, SymmetryDefect) {
    EXPECT_EQ(symmetry_defect(PolarNorm::constant(40)), 0.0);
    std::vector<double> values(40, 1.0);
    values[7] *= 1 + 1e-3;
    EXPECT_NEAR(symmetry_defect(PolarNorm(values)), 1e-3, 1e-15);
    EXPECT_THROW(symmetry_defect(PolarNorm::constant(41)), InvalidGauge);
}

TEST(PolarNorm, ConvexityDefect) {
    EXPECT_NEAR(convexity_defect(PolarNorm::constant(360)), std::sin(2 * pi / 360), 1e-12);
    std::vector<double> dented(360, 1.0);
    dented[100] = 1.2;  // pulls one vertex inwards
    EXPECT_LT(convexity_defect(PolarNorm(dented)), 0.0);
}
