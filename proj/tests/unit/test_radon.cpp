#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jumpkit/errors.hpp"
#include "jumpkit/geometry.hpp"
#include "jumpkit/radon.hpp"
#include "oracles.hpp"

using namespace jumpkit;
using std::numbers::pi;

namespace {

const auto interval = ConvexBodySpec::lq_ball(1, 2);

LatticeField cosine_1d(int M, double L, int mode) {
    LatticeField f(1, M, L / M);
    for (int i = 0; i < M; ++i) f[i] = std::cos(2 * pi * mode * i / double(M));
    return f;
}

}  // namespace

TEST(CanonicalMap, SortsAndDilates) {
    CanonicalMapSpec g(2, {{0, 2}, {1, 0}, {1, 1}});
    EXPECT_EQ(g.gamma().front(), (std::vector<int>{0, 2}));
    EXPECT_EQ(g.max_degree(), 2);
    double y[] = {2.0, 3.0}, out[3];
    g.apply(y, out);
    EXPECT_EQ(out[0], 9.0);
    EXPECT_EQ(out[1], 2.0);
    EXPECT_EQ(out[2], 6.0);
    std::vector<double> xi{1, 1, 1};
    auto d = g.dilate(2, xi);
    EXPECT_EQ(d[0], 4.0);
    EXPECT_EQ(d[1], 2.0);
    EXPECT_THROW(CanonicalMapSpec(1, {{0}}), InvalidArgument);
    EXPECT_THROW(CanonicalMapSpec(1, {{1}, {1}}), InvalidArgument);
    EXPECT_THROW(CanonicalMapSpec(2, {{1}}), InvalidArgument);
}

TEST(RadonAverage, LineCaseMatchesContinuousAverage) {
    const int M = 256, mode = 3;
    const double L = 8, t = 0.9;
    auto f = cosine_1d(M, L, mode);
    auto r = radon_average(f, CanonicalMapSpec::moment_curve(1), interval, t);
    EXPECT_FALSE(r.warning);
    const double a = 2 * pi * mode * t / L;
    // linear interpolation error of cos(2 pi mode x / L) at spacing L / M
    const double interp = std::pow(2 * pi * mode / M, 2) / 8;
    for (int i = 0; i < M; ++i) ASSERT_NEAR(r.field[i].real(), f[i].real() * std::sin(a) / a, interp + 1e-8);
}

TEST(RadonAverage, ConstantsAndLinearity) {
    LatticeField c(2, 32, 0.125);
    for (auto& v : c.values()) v = 3.0;
    auto par = CanonicalMapSpec::moment_curve(2);
    auto r = radon_average(c, par, interval, 1.3);
    for (auto v : r.field.values()) EXPECT_NEAR(std::abs(v - 3.0), 0.0, 1e-12);

    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    LatticeField f(2, 32, 0.125), h(2, 32, 0.125), s(2, 32, 0.125);
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = g(rng);
        h[i] = g(rng);
        s[i] = 2.0 * f[i] - 0.5 * h[i];
    }
    RadonOptions opt;
    opt.min_panels = opt.max_panels = 16;  // same stencil for all three
    auto rf = radon_average(f, par, interval, 1.3, opt), rh = radon_average(h, par, interval, 1.3, opt);
    auto rs = radon_average(s, par, interval, 1.3, opt);
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(std::abs(rs.field[i] - (2.0 * rf.field[i] - 0.5 * rh.field[i])), 0.0, 1e-10);
}

TEST(RadonMultiplier, MatchesSimpsonAndDecays) {
    auto par = CanonicalMapSpec::moment_curve(2);
    QuasiNormSpec q(par);
    double worst = 0;
    for (double t : {0.5, 1.0, 2.0})
        for (double x : {0.3, 2.0, 17.0}) {
            std::vector<double> xi{x, -0.7 * x};
            cplx m = radon_multiplier(par, interval, t, xi);
            auto f = [&](double y) { return std::polar(1.0, -2 * pi * (xi[0] * y + xi[1] * y * y)); };
            cplx ref = oracle::simpson(f, -t, t, 40000) / (2 * t);
            EXPECT_LT(std::abs(m - ref), 1e-8);
            worst = std::max(worst, std::abs(m) * std::sqrt(t * q(xi)));
        }
    EXPECT_LT(worst, 3.0);
}

TEST(RadonSingular, OddKernelKillsConstants) {
    LatticeField c(1, 64, 0.25);
    for (auto& v : c.values()) v = 1.0;
    RadonOptions opt;
    opt.r_max = 6;
    auto r = radon_singular(c, CanonicalMapSpec::moment_curve(1), interval, 0.5, KernelSpec::hilbert(), opt);
    for (auto v : r.field.values()) EXPECT_NEAR(std::abs(v), 0.0, 1e-10);
    RadonOptions none;
    EXPECT_THROW(radon_singular(c, CanonicalMapSpec::moment_curve(1), interval, 0.5, KernelSpec::hilbert(), none),
                 InvalidArgument);
}

TEST(RadonSingular, ShellDominatedByAverage) {
    // |int_{1<=|y|<=2} f(x-y)/y dy| <= int_{|y|<=2} |f(x-y)| dy = 4 A_2|f|(x)
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    LatticeField f(1, 128, 0.125), af(1, 128, 0.125);
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = g(rng);
        af[i] = std::abs(f[i]);
    }
    auto id = CanonicalMapSpec::moment_curve(1);
    auto shell = radon_singular_shell(af, id, interval, 1, 2, KernelSpec::hilbert());
    auto avg = radon_average(af, id, interval, 2);
    double C = 0;
    for (std::size_t i = 0; i < f.size(); ++i) C = std::max(C, std::abs(shell.field[i]) / avg.field[i].real());
    EXPECT_LE(C, 4 * (1 + 1e-6));
}

TEST(SingularMultiplier, MatchesSimpson) {
    auto par = CanonicalMapSpec::moment_curve(2);
    auto K = KernelSpec::hilbert();
    for (double x : {0.5, 4.0, 30.0}) {
        std::vector<double> xi{x, 0.5 * x};
        cplx d = singular_multiplier_difference(par, interval, K, 0.5, 1.0, xi);
        auto f = [&](double y) { return std::polar(1.0, -2 * pi * (xi[0] * y + xi[1] * y * y)) / y; };
        cplx ref = -(oracle::simpson(f, 0.5, 1.0, 40000) + oracle::simpson(f, -1.0, -0.5, 40000));
        EXPECT_LT(std::abs(d - ref), 1e-8) << x;
    }
    std::vector<double> xi{1.0, 1.0};
    EXPECT_EQ(singular_multiplier_difference(par, interval, K, 1, 1, xi), cplx(0));
}

TEST(Kernels, Validation) {
    EXPECT_TRUE(validate_kernel(KernelSpec::hilbert(), interval).ok);
    EXPECT_TRUE(validate_kernel(KernelSpec::riesz_2d(), ConvexBodySpec::lq_ball(2, 2)).ok);
    auto big = KernelSpec::hilbert();
    big.eval = [](std::span<const double> y) { return cplx(2 / y[0]); };
    EXPECT_FALSE(validate_kernel(big, interval).ok);
    auto even = KernelSpec::hilbert();
    even.odd = false;
    even.eval = [](std::span<const double> y) { return cplx(1 / std::fabs(y[0])); };
    auto v = validate_kernel(even, interval);
    EXPECT_FALSE(v.ok);
    EXPECT_GT(v.cancellation_residual, 1.0);
    // an odd kernel over an offset box has no analytic certificate but still cancels
    auto w = validate_kernel(KernelSpec::hilbert(), ConvexBodySpec::box({1.0}, {0.2}));
    EXPECT_TRUE(w.ok);
}

TEST(Kernels, SmoothnessReports) {
    auto h = kernel_smoothness_check(KernelSpec::hilbert(), 20000);
    EXPECT_TRUE(h.pointwise_holds);
    EXPECT_LE(h.pointwise_ratio, 1.0);
    EXPECT_TRUE(h.annular_holds);
    EXPECT_TRUE(h.implication_consistent);
    auto z = kernel_smoothness_check(KernelSpec::zero(1), 2000);
    EXPECT_EQ(z.size_ratio, 0.0);
    EXPECT_EQ(z.pointwise_ratio, 0.0);
    EXPECT_EQ(z.annular_ratio, 0.0);
    auto r = kernel_smoothness_check(KernelSpec::riesz_2d(), 100000);
    EXPECT_LE(r.size_ratio, 1 + 1e-12);
    EXPECT_TRUE(r.pointwise_holds);
    EXPECT_TRUE(r.implication_consistent);
}
