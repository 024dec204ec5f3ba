#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jumpkit/errors.hpp"
#include "jumpkit/geometry.hpp"
#include "jumpkit/variation.hpp"

using namespace jumpkit;
using std::numbers::pi;

TEST(QuasiNorm, Examples) {
    QuasiNormSpec q(CanonicalMapSpec::moment_curve(2));
    std::vector<double> a{4, 9}, b{-1, 16}, z{0, 0};
    EXPECT_EQ(q(a), 4.0);
    EXPECT_EQ(q(b), 4.0);
    EXPECT_EQ(quasi_norm(q, z), 0.0);
    std::vector<double> wrong{1, 2, 3};
    EXPECT_THROW(q(wrong), InvalidArgument);
}

TEST(QuasiNorm, DyadicHomogeneityIsExact) {
    auto g = CanonicalMapSpec::moment_curve(3);
    QuasiNormSpec q(g);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> xi{u(rng), u(rng), u(rng)};
        double base = q(xi);
        for (int k : {-7, -1, 1, 4, 12}) {
            double t = std::ldexp(1.0, k);
            EXPECT_EQ(q(g.dilate(t, xi)), t * base) << k;
        }
    }
    EXPECT_EQ(dyadic_root(-27.0, 3), 3.0);
    EXPECT_EQ(dyadic_root(0.0, 5), 0.0);
    EXPECT_DOUBLE_EQ(dyadic_root(10.0, 4), std::pow(10.0, 0.25));
    EXPECT_THROW(dyadic_root(1.0, 0), InvalidArgument);
}

TEST(QuasiNorm, TriangleConstant) {
    QuasiNormSpec q(CanonicalMapSpec::moment_curve(2));
    double c = quasi_triangle_constant(q, 20000, -10, 10, 3);
    // |a + b|^{1/m} <= |a|^{1/m} + |b|^{1/m}, so the maximum norm is subadditive
    EXPECT_LE(c, 1.0 + 1e-12);
    EXPECT_GT(c, 0.5);
    EXPECT_EQ(c, quasi_triangle_constant(q, 20000, -10, 10, 3));
}

TEST(BoundaryExact, ClosedForms) {
    auto disc = ConvexBodySpec::lq_ball(2, 2);
    EXPECT_NEAR(*exact_boundary_neighborhood(disc, 0.1), pi * (1.21 - 0.81), 1e-14);
    auto square = ConvexBodySpec::lq_ball(2, infinity);
    EXPECT_NEAR(*exact_boundary_neighborhood(square, 0.25), 8 * 2 * 0.25 + (pi - 4) * 0.0625, 1e-14);
    auto cube = ConvexBodySpec::box({0.5, 1, 1.5});
    double s = 0.2;
    double outer = 2 * (2 + 6 + 3) * s + pi / 4 * 4 * 6 * s * s + 4 * pi / 3 * s * s * s;
    EXPECT_NEAR(*exact_boundary_neighborhood(cube, s), outer + 6 - 0.6 * 1.6 * 2.6, 1e-13);
    EXPECT_FALSE(exact_boundary_neighborhood(ConvexBodySpec::lq_ball(2, 3), 0.1).has_value());
    EXPECT_FALSE(exact_boundary_neighborhood(square, 1.5).has_value());
    EXPECT_FALSE(exact_boundary_neighborhood(ConvexBodySpec::lq_ball(4, infinity), 0.1).has_value());
    // grows with s
    double prev = 0;
    for (double t = 0.05; t <= 1; t += 0.05) {
        double v = *exact_boundary_neighborhood(square, t);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(BoundaryMonteCarlo, AgreesWithExact) {
    std::vector<ConvexBodySpec> bodies{ConvexBodySpec::lq_ball(2, 2), ConvexBodySpec::lq_ball(2, infinity),
                                       ConvexBodySpec::lq_ball(2, 1), ConvexBodySpec::lq_ball(3, 2),
                                       ConvexBodySpec::box({0.5, 1, 1.5})};
    for (const auto& b : bodies)
        for (double s : {0.05, 0.3}) {
            auto ex = exact_boundary_neighborhood(b, s);
            ASSERT_TRUE(ex.has_value());
            auto mc = boundary_neighborhood_measure(b, s, 200000, 21);
            EXPECT_TRUE(mc.exact_distance);
            EXPECT_LE(std::fabs(mc.estimate - *ex), 4 * mc.stderr_) << b.dim() << " " << s;
            EXPECT_DOUBLE_EQ(mc.ratio, mc.estimate / (s * std::pow(b.diameter(), b.dim() - 1)));
        }
}

TEST(BoundaryMonteCarlo, SerialParallelBitwiseAndErrors) {
    auto b = ConvexBodySpec::lq_ball(3, 3);
    auto a = boundary_neighborhood_measure(b, 0.2, 300000, 5, kernels::Exec::serial);
    auto p = boundary_neighborhood_measure(b, 0.2, 300000, 5, kernels::Exec::parallel);
    EXPECT_EQ(a.estimate, p.estimate);
    EXPECT_EQ(a.stderr_, p.stderr_);
    EXPECT_EQ(a.samples, 300000u);
    EXPECT_THROW(boundary_neighborhood_measure(b, 0.0, 100, 1), InvalidArgument);
    EXPECT_THROW(boundary_neighborhood_measure(b, b.diameter() * 1.01, 100, 1), InvalidArgument);
    EXPECT_THROW(boundary_neighborhood_measure(b, 0.1, 1, 1), InvalidArgument);
}

TEST(SingularEnvelope, DilationMovesTheGridOnly) {
    auto g = CanonicalMapSpec::moment_curve(2);
    auto body = ConvexBodySpec::lq_ball(1, 2);
    auto K = KernelSpec::hilbert();
    auto grid = log_radial_grid(2, 60, -6, 6, 4);
    FrequencyGrid dilated;
    for (const auto& xi : grid) dilated.push_back(g.dilate(2.0, xi));
    auto a = singular_envelope_check(g, body, K, 2.0, 0.5, grid);
    auto b = singular_envelope_check(g, body, K, 1.0, 0.5, dilated);
    EXPECT_EQ(a.high_points, b.high_points);
    EXPECT_EQ(a.low_points, b.low_points);
    EXPECT_NEAR(a.high_constant, b.high_constant, 1e-8);
    EXPECT_NEAR(a.low_constant, b.low_constant, 1e-8);
    EXPECT_GT(a.high_points, 0u);
    EXPECT_GT(a.low_points, 0u);
    EXPECT_GT(a.high_constant, 0.0);
    auto s = singular_envelope_check(g, body, K, 2.0, 0.5, grid, kernels::Exec::serial);
    EXPECT_EQ(s.high_constant, a.high_constant);
    EXPECT_THROW(singular_envelope_check(g, body, K, 1.0, 1.0, grid), InvalidArgument);
}
