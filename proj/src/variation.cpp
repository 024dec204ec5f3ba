#include "jumpkit/variation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "jumpkit/errors.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit {

namespace {

template <class T>
int jump_count_impl(std::span<const T> v, double lambda) {
    require(lambda > 0, "jump_count needs lambda > 0");
    const std::size_t n = v.size();
    // best[j]: most lambda-jumps in a chain ending at j
    std::vector<int> best(n, 0);
    int answer = 0;
    for (std::size_t j = 1; j < n; ++j) {
        int b = 0;
        for (std::size_t i = 0; i < j; ++i)
            if (best[i] + 1 > b && std::abs(v[j] - v[i]) >= lambda) b = best[i] + 1;
        best[j] = b;
        answer = std::max(answer, b);
    }
    return answer;
}

template <class T>
JumpProfile breakpoints_impl(std::span<const T> v) {
    std::vector<double> cand;
    for (std::size_t j = 1; j < v.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            double m = std::abs(v[j] - v[i]);
            if (m > 0) cand.push_back(m);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<int> counts(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) counts[i] = jump_count_impl(v, cand[i]);

    std::vector<Breakpoint> bps;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int next = i + 1 < cand.size() ? counts[i + 1] : 0;
        if (counts[i] > next) bps.push_back({cand[i], counts[i]});
    }
    return JumpProfile(std::move(bps));
}

}  // namespace

int jump_count(std::span<const cplx> values, double lambda) { return jump_count_impl(values, lambda); }
int jump_count(std::span<const double> values, double lambda) { return jump_count_impl(values, lambda); }
int jump_count(const SampledPath& path, double lambda) { return jump_count_impl(path.values(), lambda); }

double variation(std::span<const cplx> v, double r) {
    require(r > 0, "variation needs r > 0");
    require(!v.empty(), "variation of an empty path");
    const std::size_t n = v.size();
    if (std::isinf(r)) {
        double m = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) m = std::max(m, std::abs(v[j] - v[i]));
        return m;
    }
    std::vector<double> best(n, 0.0);
    double answer = 0;
    for (std::size_t j = 1; j < n; ++j) {
        double b = 0;
        for (std::size_t i = 0; i < j; ++i) b = std::max(b, best[i] + std::pow(std::abs(v[j] - v[i]), r));
        best[j] = b;
        answer = std::max(answer, b);
    }
    return std::pow(answer, 1.0 / r);
}

double variation(const SampledPath& path, double r) { return variation(path.values(), r); }

JumpProfile jump_breakpoints(std::span<const cplx> values) { return breakpoints_impl(values); }
JumpProfile jump_breakpoints(std::span<const double> values) { return breakpoints_impl(values); }
JumpProfile jump_breakpoints(const SampledPath& path) { return breakpoints_impl(path.values()); }

SeminormResult seminorm_from_profiles(std::span<const JumpProfile> profiles,
                                      std::span<const double> weights, double p) {
    require(p > 1 && std::isfinite(p), "jump seminorm needs 1 < p < infinity");
    require(!profiles.empty() && profiles.size() == weights.size(), "profiles and weights mismatch");

    // Passing below magnitude b_i lifts N from c_{i+1} to c_i, adding w (c_i^{p/2} - c_{i+1}^{p/2}).
    struct Event {
        double magnitude;
        std::size_t atom;
        double increment;
    };
    std::vector<Event> events;
    for (std::size_t x = 0; x < profiles.size(); ++x) {
        const auto& bps = profiles[x].breakpoints();
        for (std::size_t i = 0; i < bps.size(); ++i) {
            double hi = std::pow(double(bps[i].count), p / 2);
            double lo = i + 1 < bps.size() ? std::pow(double(bps[i + 1].count), p / 2) : 0.0;
            events.push_back({bps[i].magnitude, x, weights[x] * (hi - lo)});
        }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return a.magnitude != b.magnitude ? a.magnitude > b.magnitude : a.atom < b.atom;
    });

    SeminormResult out;
    CompensatedSum s;
    for (std::size_t i = 0; i < events.size(); ++i) {
        s.add(events[i].increment);
        if (i + 1 < events.size() && events[i + 1].magnitude == events[i].magnitude) continue;
        double val = events[i].magnitude * std::pow(s.value(), 1.0 / p);
        if (val > out.value) {
            out.value = val;
            out.argmax_lambda = events[i].magnitude;
        }
    }
    return out;
}

SeminormResult jump_seminorm_detail(const FieldOfPaths& field, double p) {
    require(field.size() > 0, "jump seminorm of an empty field");
    std::vector<JumpProfile> profiles;
    std::vector<double> weights;
    for (const auto& a : field.atoms()) {
        profiles.push_back(jump_breakpoints(a.path));
        weights.push_back(a.weight);
    }
    return seminorm_from_profiles(profiles, weights, p);
}

double jump_seminorm(const FieldOfPaths& field, double p) { return jump_seminorm_detail(field, p).value; }

LewkoResult lewko_bound(const SampledPath& path, double r) {
    require(r >= 1 && std::isfinite(r), "lewko_bound needs 1 <= r < infinity");
    const auto& t = path.times();
    const std::size_t n1 = t.size();
    require(n1 >= 2, "dyadic grid needs at least two points");
    require(t[0].numerator() == 0, "dyadic grid must start at 0");
    const std::size_t cells = n1 - 1;
    require((cells & (cells - 1)) == 0, "dyadic grid must have 2^n + 1 points");
    const DyadicTime h = t[1];
    require(h.is_power_of_two(), "dyadic grid spacing must be a power of two");
    for (std::size_t u = 0; u < n1; ++u)
        require(t[u] == DyadicTime(static_cast<std::int64_t>(u) * h.numerator(), h.exponent()),
                "times do not form a full dyadic grid");

    auto g = path.values();
    LewkoResult out{variation(g, r), 0.0};
    CompensatedSum rhs;
    for (std::size_t step = 1; step <= cells; step *= 2) {
        CompensatedSum level;
        for (std::size_t m = 0; m + step <= cells; m += step) level.add(std::pow(std::abs(g[m + step] - g[m]), r));
        rhs.add(std::pow(level.value(), 1.0 / r));
    }
    out.rhs = std::pow(2.0, 1.0 - 1.0 / r) * rhs.value();
    return out;
}

namespace {

struct SplitCounts {
    SampledPath dyadic;
    std::vector<SampledPath> blocks;
};

SplitCounts split_path(const SampledPath& path) {
    SplitCounts s{path.restrict_to([](const DyadicTime& t) { return t.is_power_of_two(); }), {}};
    const auto& t = path.times();
    std::size_t i = 0;
    while (i < t.size() && !t[i].is_positive()) ++i;
    while (i < t.size()) {
        int k = t[i].floor_log2();
        s.blocks.push_back(path.restrict_to([k](const DyadicTime& u) { return u.is_positive() && u.floor_log2() == k; }));
        while (i < t.size() && t[i].floor_log2() == k) ++i;
    }
    return s;
}

LongShort split_at(const SampledPath& path, const SplitCounts& s, double lambda) {
    long blocks = 0;
    for (const auto& b : s.blocks) blocks += jump_count(b, lambda);
    return {lambda * std::sqrt(double(jump_count(s.dyadic, lambda / 3))),
            lambda * std::sqrt(double(blocks)),
            lambda * std::sqrt(double(jump_count(path, lambda)))};
}

}  // namespace

LongShort long_short_split(const SampledPath& path, double lambda) {
    require(lambda > 0, "long_short_split needs lambda > 0");
    return split_at(path, split_path(path), lambda);
}

double long_short_sup_ratio(const SampledPath& path) {
    auto s = split_path(path);
    auto v = path.values();
    auto dv = s.dyadic.values();
    // The ratio is scale free in lambda and piecewise constant; its steps sit at these values.
    std::vector<double> cand;
    for (std::size_t j = 1; j < v.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (double m = std::abs(v[j] - v[i]); m > 0) cand.push_back(m);
    for (std::size_t j = 1; j < dv.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (double m = std::abs(dv[j] - dv[i]); m > 0) cand.push_back(3 * m);
    double worst = 0;
    for (double l : cand) {
        auto r = split_at(path, s, l);
        if (r.lhs == 0) continue;
        double den = r.long_part + r.short_part;
        if (den == 0) return infinity;
        worst = std::max(worst, r.lhs / den);
    }
    return worst;
}

double long_short_seminorm_ratio(const SampledPath& path) {
    auto s = split_path(path);
    const double lhs = jump_breakpoints(path).sup_scaled();
    if (lhs == 0) return 0.0;
    // sup_lambda lambda N_{lambda/3}^{1/2} = 3 sup_mu mu N_mu^{1/2}
    const double long_part = 3 * jump_breakpoints(s.dyadic).sup_scaled();
    std::vector<JumpProfile> blocks;
    for (const auto& b : s.blocks) blocks.push_back(jump_breakpoints(b));
    std::vector<double> ones(blocks.size(), 1.0);
    const double short_part = blocks.empty() ? 0.0 : seminorm_from_profiles(blocks, ones, 2).value;
    const double den = long_part + short_part;
    return den == 0 ? infinity : lhs / den;
}

double ExponentRecord::max_identity_residual() const {
    double res[] = {
        (1 - theta) - q0 / 2,
        nu * theta - (2 - q1) / 2,
        nu * (1 - theta) - ((2 - q1) / (2 - q0)) * (q0 / 2),
        (1 - nu) - (q1 - q0) / (2 - q0),
        1 / q_theta - (0.5 + (1 - q0 / 2) / q1),
        1 / q_theta - ((1 - theta) / q0 + theta / q1),
    };
    double m = 0;
    for (double r : res) m = std::max(m, std::fabs(r));
    return m;
}

ExponentRecord interpolation_exponents(double q0, double q1) {
    require(1 <= q0 && q0 < q1 && q1 <= 2, "exponents need 1 <= q0 < q1 <= 2");
    ExponentRecord e{q0, q1, (2 - q0) / 2, (2 - q1) / (2 - q0), 0};
    e.q_theta = 1 / (0.5 + (1 - q0 / 2) / q1);
    return e;
}

double bootstrap_fixed_point(double a, double q1, double C, int max_iter) {
    require(a >= 0 && std::isfinite(a), "bootstrap needs a >= 0");
    require(q1 > 1 && q1 <= 2, "bootstrap needs 1 < q1 <= 2");
    require(C > 0 && std::isfinite(C), "bootstrap needs C > 0");
    const double e = (2 - q1) / 2;
    if (e == 0 || a == 0) return C * (1 + a);
    double B = C;
    for (int it = 0; it < max_iter; ++it) {
        double next = C * (1 + a * std::pow(B, e));
        if (std::fabs(next - B) <= 1e-15 * next) return next;
        B = next;
    }
    throw NumericFailure("bootstrap iteration did not converge");
}

double bootstrap_bound_constant(double q1, double C) {
    require(q1 > 1 && q1 <= 2 && C > 0, "bootstrap constant needs 1 < q1 <= 2, C > 0");
    return std::max(2 * C, std::pow(2 * C, 2 / q1));
}

}  // namespace jumpkit
