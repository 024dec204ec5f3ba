#include "jumpkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jumpkit/errors.hpp"
#include "jumpkit/random.hpp"

namespace jumpkit {

double dyadic_root(double x, int m) {
    require(m >= 1, "root order must be positive");
    x = std::fabs(x);
    if (m == 1 || x == 0 || !std::isfinite(x)) return x;
    if (m == 2) return std::sqrt(x);
    // x = mant 2^e with e = q m + r, 0 <= r < m; only q moves under x -> 2^m x
    int e = 0;
    double mant = std::frexp(x, &e);
    int q = e >= 0 ? e / m : -((-e + m - 1) / m);
    int r = e - q * m;
    return std::ldexp(std::pow(std::ldexp(mant, r), 1.0 / m), q);
}

double QuasiNormSpec::operator()(std::span<const double> xi) const {
    require(xi.size() == gamma_.gamma().size(), "frequency has the wrong dimension");
    double m = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        require(std::isfinite(xi[i]), "frequency must be finite");
        m = std::max(m, dyadic_root(xi[i], gamma_.degree(i)));
    }
    return m;
}

double quasi_norm(const QuasiNormSpec& spec, std::span<const double> xi) { return spec(xi); }

double quasi_triangle_constant(const QuasiNormSpec& spec, std::size_t pairs, double lo_exp, double hi_exp,
                               std::uint64_t seed) {
    Rng rng(stream_seed(seed, 0x9b71));
    const std::size_t d = spec.gamma().gamma().size();
    std::vector<double> a(d), b(d), c(d);
    double worst = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
        double ta = std::exp2(uniform(rng, lo_exp, hi_exp)), tb = std::exp2(uniform(rng, lo_exp, hi_exp));
        for (std::size_t j = 0; j < d; ++j) {
            int e = spec.gamma().degree(j);
            a[j] = uniform(rng, -1, 1) * std::pow(ta, e);
            b[j] = uniform(rng, -1, 1) * std::pow(tb, e);
            c[j] = a[j] + b[j];
        }
        double den = spec(a) + spec(b);
        if (den > 0) worst = std::max(worst, spec(c) / den);
    }
    return worst;
}

SingularEnvelope singular_envelope_check(const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                                         const KernelSpec& kernel, double t, double kappa, const FrequencyGrid& grid,
                                         kernels::Exec exec) {
    require(t > 0 && kappa > 0 && kappa < 1, "need t > 0 and 0 < kappa < 1");
    const QuasiNormSpec q(gamma);
    const double e = 1.0 / gamma.max_degree();
    struct Part {
        double high = 0, low = 0;
        std::size_t nh = 0, nl = 0;
    };
    auto parts = kernels::run_shards<Part>(
        grid.size(),
        [&](std::size_t i) {
            Part p;
            const double u = t * q(grid[i]);
            if (u == 0) return p;
            const double D = std::abs(singular_multiplier_difference(gamma, omega_body, kernel, kappa * t, t, grid[i]));
            if (u >= 1) {
                const double v = std::pow(u, -e);
                p.high = D / (v + kernel.omega(v));
                p.nh = 1;
            } else {
                p.low = D / std::pow(u, e);
                p.nl = 1;
            }
            return p;
        },
        exec);
    SingularEnvelope r;
    for (const auto& p : parts) {
        r.high_constant = std::max(r.high_constant, p.high);
        r.low_constant = std::max(r.low_constant, p.low);
        r.high_points += p.nh;
        r.low_points += p.nl;
    }
    return r;
}

BoundaryMeasure boundary_neighborhood_measure(const ConvexBodySpec& body, double s, std::size_t samples,
                                              std::uint64_t seed, kernels::Exec exec) {
    const double diam = body.diameter();
    require(s > 0 && s <= diam, "need 0 < s <= diam");
    require(samples >= 2, "need at least two samples");
    const int k = body.dim();
    std::vector<double> lo, hi;
    body.bounding_box(lo, hi);
    double box_vol = 1;
    for (int a = 0; a < k; ++a) {
        lo[a] -= s;
        hi[a] += s;
        box_vol *= hi[a] - lo[a];
    }
    constexpr std::size_t shard_size = 1u << 16;
    const std::size_t shards = (samples + shard_size - 1) / shard_size;
    struct Shard {
        std::size_t hits = 0, n = 0;
        bool exact = true;
    };
    auto parts = kernels::run_shards<Shard>(
        shards,
        [&](std::size_t sh) {
            Rng rng(stream_seed(seed, 0xb0d7, sh));
            Shard r;
            r.n = std::min(shard_size, samples - sh * shard_size);
            std::vector<double> x(k);
            for (std::size_t i = 0; i < r.n; ++i) {
                for (int a = 0; a < k; ++a) x[a] = uniform(rng, lo[a], hi[a]);
                auto dist = body.boundary_distance(x);
                r.exact = r.exact && dist.exact;
                if (dist.value < s) ++r.hits;
            }
            return r;
        },
        exec);
    std::size_t hits = 0;
    bool exact = true;
    for (const auto& p : parts) {
        hits += p.hits;
        exact = exact && p.exact;
    }
    const double f = double(hits) / double(samples);
    BoundaryMeasure m;
    m.estimate = box_vol * f;
    m.stderr_ = box_vol * std::sqrt(f * (1 - f) / double(samples - 1));
    m.ratio = m.estimate / (s * std::pow(diam, k - 1));
    m.samples = samples;
    m.exact_distance = exact;
    return m;
}

}  // namespace jumpkit

namespace jumpkit {

std::optional<double> exact_boundary_neighborhood(const ConvexBodySpec& body, double s) {
    using std::numbers::pi;
    require(s > 0, "s must be positive");
    const int d = body.dim();
    if (body.kind() == ConvexBodySpec::Kind::lq_ball && body.q() == 2) {
        if (s > 1) return std::nullopt;
        return body.volume() * (std::pow(1 + s, d) - std::pow(1 - s, d));
    }
    std::vector<double> sides;
    if (body.kind() == ConvexBodySpec::Kind::box) {
        for (double w : body.half_widths()) sides.push_back(2 * w);
    } else if (std::isinf(body.q())) {
        sides.assign(d, 2.0);
    } else if (body.q() == 1 && d == 2) {
        sides.assign(2, std::sqrt(2.0));
    } else {
        return std::nullopt;
    }
    const double inradius = *std::min_element(sides.begin(), sides.end()) / 2;
    if (s > inradius || (d != 2 && d != 3)) return std::nullopt;
    if (d == 2) {
        // outer parallel body minus the inner one; the outer corners are quarter discs
        const double a = sides[0], b = sides[1];
        return 2 * (2 * (a + b)) * s + (pi - 4) * s * s;
    }
    const double a = sides[0], b = sides[1], c = sides[2];
    const double V = a * b * c, S = 2 * (a * b + b * c + a * c), E = 4 * (a + b + c);
    const double outer = S * s + pi / 4 * E * s * s + 4 * pi / 3 * s * s * s;
    const double inner = V - (a - 2 * s) * (b - 2 * s) * (c - 2 * s);
    return outer + inner;
}

}  // namespace jumpkit
