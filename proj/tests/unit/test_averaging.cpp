#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "jumpkit/averaging.hpp"
#include "jumpkit/errors.hpp"
#include "oracles.hpp"

using namespace jumpkit;

namespace {

LatticeField random_field(int d, int M, std::uint64_t seed, double spacing = 1.0, bool positive = false) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    LatticeField f(d, M, spacing);
    for (auto& v : f.values()) v = positive ? cplx(std::fabs(g(rng)), 0) : cplx(g(rng), g(rng));
    return f;
}

double max_diff(const LatticeField& a, const LatticeField& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST(AvgConvex, ConstantsAndDelta) {
    LatticeField c(2, 16, 0.5);
    for (auto& v : c.values()) v = 2.5;
    auto body = ConvexBodySpec::lq_ball(2, 2);
    auto out = avg_convex(c, body, 2.0);
    for (auto v : out.values()) EXPECT_NEAR(std::abs(v - 2.5), 0.0, 1e-12);

    LatticeField delta(2, 16, 0.5);
    delta[0] = 1.0;
    auto k = sampled_indicator(body, 2.0, 16, 0.5);
    EXPECT_LT(max_diff(avg_convex(delta, body, 2.0), k), 1e-12);
    EXPECT_THROW(avg_convex(delta, body, 5.0), InvalidArgument);  // radius 5 vs half period 4
}

TEST(AvgConvex, OneDimensionalMovingAverage) {
    const int M = 64;
    const double h = 0.25, t = 1.6;  // window |c| h < t, i.e. |c| <= 6
    auto f = random_field(1, M, 3, h);
    for (double q : {1.0, 2.0, 5.0, infinity}) {
        auto out = avg_convex(f, ConvexBodySpec::lq_ball(1, q), t);
        for (int x = 0; x < M; ++x) {
            cplx s = 0;
            for (int c = -6; c <= 6; ++c) s += f[((x - c) % M + M) % M];
            ASSERT_NEAR(std::abs(out[x] - s / 13.0), 0.0, 1e-10);
        }
    }
}

TEST(AvgConvex, PositivityMeanAndTranslation) {
    auto f = random_field(3, 8, 4, 0.5, true);
    auto body = ConvexBodySpec::lq_ball(3, 1);
    auto out = avg_convex(f, body, 1.7);
    for (auto v : out.values()) EXPECT_GE(v.real(), -1e-12);
    EXPECT_NEAR(std::abs(out.mean() - f.mean()), 0.0, 1e-10);
    int s[] = {1, -3, 2};
    EXPECT_LT(max_diff(avg_convex(f.shifted(s), body, 1.7), out.shifted(s)), 1e-12);
}

TEST(AvgConvex, ScalingCovariance) {
    // A_{2(1+t)} over G equals A_2 over (1+t)G
    auto f = random_field(2, 32, 5, 0.7);
    const double t = 0.5;
    auto a = avg_convex(f, ConvexBodySpec::lq_ball(2, infinity), 2 * (1 + t));
    auto b = avg_convex(f, ConvexBodySpec::box({1 + t, 1 + t}), 2);
    EXPECT_LT(max_diff(a, b), 1e-12);
}

TEST(AvgConvex, DiscretizationBoundIsAFraction) {
    double prev = 1;
    for (int M : {16, 32, 64}) {
        double b = indicator_discretization_bound(ConvexBodySpec::lq_ball(2, 2), 1.0, M, 4.0 / M);
        EXPECT_GT(b, 0.0);
        EXPECT_LT(b, prev);
        prev = b;
    }
}

TEST(DiscreteCube, ConstantsAndFullWindow) {
    LatticeField c(3, 5);
    for (auto& v : c.values()) v = cplx(1.5, -2);
    auto ac = avg_discrete_cube(c, 1);
    for (auto v : ac.values()) EXPECT_NEAR(std::abs(v - cplx(1.5, -2)), 0.0, 1e-14);
    auto f = random_field(3, 5, 6);
    auto m = f.mean();
    auto af = avg_discrete_cube(f, 2);
    for (auto v : af.values()) EXPECT_NEAR(std::abs(v - m), 0.0, 1e-13);
    EXPECT_THROW(avg_discrete_cube(f, 3), InvalidArgument);
}

TEST(DiscreteCube, MatchesDirectSum) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    std::vector<double> f(256);
    for (auto& x : f) x = g(rng);
    std::vector<double> out(256);
    avg_discrete_cube_real(f, out, 2, 16, 3, kernels::Exec::serial);
    auto ref = oracle::direct_cube_average_2d(f, 16, 3);
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(out[i], ref[i], 1e-10);
}

TEST(DiscreteCube, EqualsSymbolMultiplier) {
    auto f = random_field(2, 12, 8);
    for (int N : {1, 2, 5}) {
        auto a = avg_discrete_cube(f, N);
        auto b = apply_multiplier(f, discrete_cube_family().at(N));
        EXPECT_LT(max_diff(a, b), 1e-10);
    }
}

TEST(DiscreteCube, SerialParallelBitwiseAndPositivity) {
    auto f = random_field(4, 16, 9, 1.0, true);
    auto a = avg_discrete_cube(f, 4, kernels::Exec::serial);
    auto b = avg_discrete_cube(f, 4, kernels::Exec::parallel);
    EXPECT_EQ(std::memcmp(a.values().data(), b.values().data(), a.size() * sizeof(cplx)), 0);
    for (auto v : a.values()) EXPECT_GE(v.real(), 0.0);
    EXPECT_NEAR(std::abs(a.mean() - f.mean()), 0.0, 1e-12);
    int s[] = {0, 5, -1, 15};
    EXPECT_LT(max_diff(avg_discrete_cube(f.shifted(s), 4), a.shifted(s)), 1e-12);
}

TEST(DiscreteSymbol, Examples) {
    std::vector<double> zero(4, 0.0), q{0.25};
    EXPECT_EQ(discrete_symbol(7, zero), 1.0);
    EXPECT_NEAR(discrete_symbol(1, q), 1.0 / 3, 1e-15);
}

TEST(DiscreteSymbol, ConstantsMatchDirectScan) {
    auto grid = torus_grid(2, 200, 3);
    auto c = discrete_symbol_constants(16, grid, kernels::Exec::serial);
    auto p = discrete_symbol_constants(16, grid, kernels::Exec::parallel);
    EXPECT_EQ(c.decay, p.decay);
    EXPECT_EQ(c.lipschitz, p.lipschitz);
    double decay = 0, near = 0, lip = 0;
    for (const auto& xi : grid) {
        double r = std::hypot(xi[0], xi[1]);
        for (int a = 1; a <= 16; ++a) {
            double ma = discrete_symbol(a, xi);
            decay = std::max(decay, std::fabs(ma) * a * r);
            near = std::max(near, std::fabs(ma - 1) / (a * r));
            for (int b = 1; b <= 16; ++b)
                if (a != b)
                    lip = std::max(lip, std::fabs(ma - discrete_symbol(b, xi)) / (std::abs(a - b) * std::max(1.0 / a, 1.0 / b)));
        }
    }
    EXPECT_NEAR(c.decay, decay, 1e-14);
    EXPECT_NEAR(c.near_zero, near, 1e-12);
    EXPECT_NEAR(c.lipschitz, lip, 1e-14);
    EXPECT_TRUE(std::isfinite(c.decay) && std::isfinite(c.near_zero) && std::isfinite(c.lipschitz));
}
