#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "jumpkit/kernels.hpp"
#include "jumpkit/variation.hpp"
#include "oracles.hpp"

using namespace jumpkit;
using kernels::Exec;

namespace {

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> random_real(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    for (auto& x : v) x = g(rng);
    return v;
}

}  // namespace

TEST(BoxFilter, MatchesDirectSumEveryAxis) {
    const int d = 3, M = 7;
    auto f = random_real(343, 1);
    for (int axis = 0; axis < d; ++axis)
        for (int r : {0, 1, 3}) {
            std::vector<double> out(f.size());
            kernels::box_filter_axis<double>(f, out, d, M, axis, r, Exec::serial);
            std::size_t stride = 1;
            for (int a = axis + 1; a < d; ++a) stride *= M;
            for (std::size_t x = 0; x < f.size(); ++x) {
                int c = static_cast<int>(x / stride % M);
                double s = 0;
                for (int o = -r; o <= r; ++o) s += f[x + (((c + o) % M + M) % M - c) * static_cast<long>(stride)];
                ASSERT_NEAR(out[x], s / (2 * r + 1), 1e-13);
            }
        }
}

TEST(BoxFilter, SerialAndParallelBitwiseEqual) {
    const int d = 4, M = 16;
    auto f = random_real(1 << 16, 2);
    for (int axis = 0; axis < d; ++axis) {
        std::vector<double> a(f.size()), b(f.size());
        kernels::box_filter_axis<double>(f, a, d, M, axis, 4, Exec::serial);
        kernels::box_filter_axis<double>(f, b, d, M, axis, 4, Exec::parallel);
        EXPECT_TRUE(bitwise_equal(a, b)) << axis;
    }
}

TEST(PowSum, MatchesLongDoubleAndIsDeterministic) {
    auto v = random_real(100003, 3);
    for (double p : {1.51, 2.0, 3.0}) {
        long double ref = 0;
        for (double x : v) ref += std::pow(static_cast<long double>(std::fabs(x)), static_cast<long double>(p));
        double s = kernels::blocked_pow_sum(v, p, Exec::serial);
        EXPECT_NEAR(s, static_cast<double>(ref), 1e-12 * s);
        double t = kernels::blocked_pow_sum(v, p, Exec::parallel);
        EXPECT_EQ(std::memcmp(&s, &t, sizeof s), 0);
    }
}

TEST(GridMax, TiesResolveToFirstIndex) {
    auto f = [](std::size_t i) { return i % 5000 == 17 ? 2.0 : std::sin(double(i)); };
    auto a = kernels::grid_max(20000, f, Exec::serial);
    auto b = kernels::grid_max(20000, f, Exec::parallel);
    EXPECT_EQ(a.index, 17u);
    EXPECT_EQ(b.index, 17u);
    EXPECT_EQ(a.value, 2.0);
}

TEST(JumpEvents, AgreeWithBreakpoints) {
    for (std::size_t len : {2u, 3u, 5u, 8u, 9u, 13u}) {
        auto v = random_real(len * 500, 4 + len);
        // repeated values exercise equal magnitudes
        for (std::size_t i = 0; i < v.size(); i += 7) v[i] = std::round(v[i]);
        auto ev = kernels::collect_jump_events(v, len, Exec::serial);
        std::size_t k = 0;
        for (std::size_t x = 0; x < 500; ++x) {
            auto prof = jump_breakpoints(std::span<const double>(v).subspan(x * len, len));
            const auto& bps = prof.breakpoints();
            for (std::size_t i = 0; i < bps.size(); ++i, ++k) {
                ASSERT_LT(k, ev.size());
                EXPECT_EQ(ev[k].point, x);
                EXPECT_EQ(ev[k].magnitude, bps[i].magnitude);
                EXPECT_EQ(ev[k].hi, bps[i].count);
                EXPECT_EQ(ev[k].lo, i + 1 < bps.size() ? bps[i + 1].count : 0);
            }
        }
        EXPECT_EQ(k, ev.size());
    }
}

TEST(JumpEvents, SerialAndParallelIdentical) {
    auto v = random_real(3 * 50000, 5);
    auto a = kernels::collect_jump_events(v, 3, Exec::serial);
    auto b = kernels::collect_jump_events(v, 3, Exec::parallel);
    ASSERT_EQ(a.size(), b.size());
    EXPECT_EQ(std::memcmp(a.data(), b.data(), a.size() * sizeof(kernels::JumpEvent)), 0);
}

TEST(JumpEvents, SortOrder) {
    auto v = random_real(4 * 20000, 6);
    for (auto& x : v) x = std::round(4 * x) / 4;  // many ties
    auto ev = kernels::collect_jump_events(v, 4, Exec::serial);
    auto ref = ev;
    std::stable_sort(ref.begin(), ref.end(), [](const auto& a, const auto& b) {
        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
        return a.point < b.point;
    });
    std::reverse(ev.begin(), ev.end());  // not point ordered either
    kernels::sort_jump_events(ev);
    ASSERT_EQ(ev.size(), ref.size());
    EXPECT_EQ(std::memcmp(ev.data(), ref.data(), ev.size() * sizeof(kernels::JumpEvent)), 0);
}

TEST(JumpEvents, SeminormRoutesAgreeBitwise) {
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t len = trial < 3 ? 3 : 10, n = 20000;
        auto v = random_real(len * n, 7 + trial);
        if (trial % 3 == 1)
            for (auto& x : v) x = std::round(2 * x);
        std::vector<double> w;
        if (trial % 3 == 2) {
            w = random_real(n, 30 + trial);
            for (auto& x : w) x = std::fabs(x) + 0.1;
        }
        std::vector<JumpProfile> profiles;
        for (std::size_t x = 0; x < n; ++x) profiles.push_back(jump_breakpoints(std::span<const double>(v).subspan(x * len, len)));
        std::vector<double> unit(n, 1.0);
        auto ev = kernels::collect_jump_events(v, len, Exec::parallel);
        kernels::JumpEventIndex index(ev);
        for (double p : {1.51, 2.0, 3.0}) {
            auto ref = seminorm_from_profiles(profiles, w.empty() ? std::span<const double>(unit) : w, p);
            auto a = kernels::seminorm_from_events(ev, w, p);
            auto b = index.seminorm(w, p);
            EXPECT_EQ(a.value, ref.value);
            EXPECT_EQ(a.argmax_lambda, ref.argmax_lambda);
            EXPECT_EQ(b.value, ref.value);
            EXPECT_EQ(b.argmax_lambda, ref.argmax_lambda);
        }
    }
}

TEST(JumpEvents, EmptyAndConstant) {
    std::vector<double> v(30, 1.5);
    auto ev = kernels::collect_jump_events(v, 3, Exec::serial);
    EXPECT_TRUE(ev.empty());
    kernels::JumpEventIndex index(ev);
    EXPECT_EQ(index.seminorm({}, 2.0).value, 0.0);
    EXPECT_EQ(kernels::seminorm_from_events(ev, {}, 2.0).value, 0.0);
}
