#include "jumpkit/fourier.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "jumpkit/errors.hpp"
#include "jumpkit/kernels.hpp"
#include "jumpkit/random.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit {

using std::numbers::pi;

double euclidean_norm(std::span<const double> xi) {
    double s = 0;
    for (double x : xi) s += x * x;
    return std::sqrt(s);
}

double sin_norm(std::span<const double> xi) {
    double s = 0;
    for (double x : xi) {
        double v = std::sin(pi * x);
        s += v * v;
    }
    return std::sqrt(s);
}

namespace {

double flavored_norm(std::span<const double> xi, PoissonFlavor flavor) {
    if (flavor == PoissonFlavor::discrete) {
        for (double x : xi) require(x >= -0.5 && x < 0.5, "discrete Poisson symbol needs xi in [-1/2, 1/2)^d");
        return sin_norm(xi);
    }
    return euclidean_norm(xi);
}

}  // namespace

double poisson_symbol(double t, std::span<const double> xi, PoissonFlavor flavor) {
    require(t > 0 && std::isfinite(t), "Poisson symbol needs t > 0");
    return std::exp(-2 * pi * t * flavored_norm(xi, flavor));
}

double littlewood_paley_symbol(int k, std::span<const double> xi, PoissonFlavor flavor) {
    // e^{-a} - e^{-2a} = e^{-a} (1 - e^{-a}), without the cancellation at small a
    double a = 2 * pi * std::ldexp(flavored_norm(xi, flavor), k);
    return -std::exp(-a) * std::expm1(-a);
}

double lp_envelope(int k, std::span<const double> xi) {
    double s = std::ldexp(euclidean_norm(xi), k);
    if (s == 0) return 0;
    return std::min(s, 1 / s);
}

Multiplier SymbolFamily::at(double param) const {
    auto e = eval;
    return Multiplier{dim, [e, param](std::span<const double> xi) { return e(param, xi); }};
}

SymbolFamily poisson_family(PoissonFlavor flavor) {
    return {flavor == PoissonFlavor::continuous ? "poisson-continuous" : "poisson-discrete", 0, 1.0,
            [flavor](double t, std::span<const double> xi) { return cplx(poisson_symbol(t, xi, flavor)); }};
}

SymbolFamily littlewood_paley_family(PoissonFlavor flavor) {
    return {"littlewood-paley", 0, 0.0, [flavor](double k, std::span<const double> xi) {
                return cplx(littlewood_paley_symbol(static_cast<int>(k), xi, flavor));
            }};
}

SymbolFamily envelope_family() {
    return {"custom", 0, 0.0,
            [](double k, std::span<const double> xi) { return cplx(lp_envelope(static_cast<int>(k), xi)); }};
}

SymbolFamily cube_family() {
    return {"cube", 0, 1.0, [](double t, std::span<const double> xi) {
                double v = 1;
                for (double x : xi) {
                    double a = 2 * pi * t * x;
                    v *= a == 0 ? 1.0 : std::sin(a) / a;
                }
                return cplx(v);
            }};
}

SymbolFamily euclidean_ball_family(int d) {
    require(d >= 1, "ball dimension must be positive");
    const double nu = d / 2.0;
    const double c = std::tgamma(nu + 1);
    return {"lq-ball", d, 1.0, [nu, c](double t, std::span<const double> xi) {
                double r = pi * t * euclidean_norm(xi);
                if (r < 1e-8) return cplx(1.0);
                return cplx(c * std::pow(r, -nu) * std::cyl_bessel_j(nu, 2 * r));
            }};
}

McValue lq_ball_symbol_mc(double q, std::span<const double> xi, std::size_t samples, std::uint64_t seed) {
    require(q >= 1, "l^q ball needs q >= 1");
    require(samples >= 2, "Monte Carlo needs at least two samples");
    const std::size_t d = xi.size();
    Rng rng(stream_seed(seed, 0x6c71));
    std::gamma_distribution<double> gam(std::isinf(q) ? 1.0 : 1.0 / q, 1.0);
    std::exponential_distribution<double> ex(1.0);
    std::vector<double> x(d);
    CompensatedSum s1, s2;
    for (std::size_t n = 0; n < samples; ++n) {
        if (std::isinf(q)) {
            for (auto& v : x) v = uniform(rng, -1, 1);
        } else {
            // X_i with density ~ exp(-|x|^q), W ~ Exp(1): X / (|X|_q^q + W)^{1/q} is uniform on the ball.
            double norm_q = 0;
            for (auto& v : x) {
                double g = gam(rng);
                v = (uniform01(rng) < 0.5 ? -1 : 1) * std::pow(g, 1 / q);
                norm_q += g;
            }
            double scale = std::pow(norm_q + ex(rng), -1 / q);
            for (auto& v : x) v *= scale;
        }
        double ph = 0;
        for (std::size_t i = 0; i < d; ++i) ph += xi[i] * x[i];
        double c = std::cos(2 * pi * ph);
        s1.add(c);
        s2.add(c * c);
    }
    double m = s1.value() / samples;
    double var = std::max(0.0, s2.value() / samples - m * m) * samples / (samples - 1);
    return {m, std::sqrt(var / samples)};
}

FrequencyGrid log_radial_grid(int d, std::size_t n, double lo_exp, double hi_exp, std::uint64_t seed) {
    require(d >= 1 && n >= 1 && lo_exp <= hi_exp, "bad frequency grid request");
    Rng rng(stream_seed(seed, 0x1f2e));
    std::normal_distribution<double> nd;
    FrequencyGrid g(n, std::vector<double>(d));
    for (std::size_t i = 0; i < n; ++i) {
        double e = n == 1 ? lo_exp : lo_exp + (hi_exp - lo_exp) * double(i) / double(n - 1);
        double r = std::exp2(e);
        double norm = 0;
        do {
            norm = 0;
            for (auto& v : g[i]) {
                v = nd(rng);
                norm += v * v;
            }
        } while (norm == 0);
        norm = std::sqrt(norm);
        for (auto& v : g[i]) v *= r / norm;
    }
    return g;
}

FrequencyGrid torus_grid(int d, std::size_t n, std::uint64_t seed) {
    require(d >= 1 && n >= 1, "bad frequency grid request");
    Rng rng(stream_seed(seed, 0x70a5));
    FrequencyGrid g(n, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 2 == 0) {
            for (auto& v : g[i]) v = uniform(rng, -0.5, 0.5);
            continue;
        }
        std::size_t support = 1 + static_cast<std::size_t>(uniform01(rng) * d);
        double mag = std::exp2(uniform(rng, -12, -1));
        for (std::size_t s = 0; s < support; ++s) {
            std::size_t a = static_cast<std::size_t>(uniform01(rng) * d);
            double v = mag * uniform(rng, 0.25, 1.0) * (uniform01(rng) < 0.5 ? -1 : 1);
            g[i][a] = std::clamp(v, -0.5, 0.5 - 1e-12);
        }
    }
    return g;
}

OffDiagonalReport off_diagonal_decay(const SymbolFamily& mk, const SymbolFamily& sk, int j, int k_lo, int k_hi,
                                     const FrequencyGrid& grid, const OffDiagonalOptions& opt) {
    require(!grid.empty() && k_lo <= k_hi, "off-diagonal decay needs a nonempty grid and range");
    for (const auto& xi : grid) require(euclidean_norm(xi) > 0, "frequency grid must exclude 0");
    auto best = kernels::grid_max(
        grid.size(),
        [&](std::size_t i) {
            CompensatedSum s;
            for (int k = k_lo; k <= k_hi; ++k) s.add(std::norm(mk(k, grid[i]) * sk(k + j, grid[i])));
            return std::sqrt(s.value());
        },
        kernels::Exec::parallel);
    auto tail = kernels::grid_max(
        grid.size(),
        [&](std::size_t i) {
            const double c = opt.envelope_m * opt.envelope_s;
            CompensatedSum s;
            for (int r = 1; r <= opt.tail_terms; ++r)
                for (int k : {k_lo - r, k_hi + r}) {
                    double v = c * lp_envelope(k, grid[i]) * lp_envelope(k + j, grid[i]);
                    s.add(v * v);
                }
            return std::sqrt(s.value());
        },
        kernels::Exec::parallel);
    return {best.value, tail.value, best.index};
}

EnvelopeReport symbol_envelope_check(const SymbolFamily& family, const ModulusOfContinuity& omega,
                                     const QuasiNorm& quasi_norm, std::span<const double> t_grid,
                                     const FrequencyGrid& grid, double constant) {
    EnvelopeReport r;
    for (double t : t_grid) {
        for (const auto& xi : grid) {
            double s = t * quasi_norm(xi);
            if (s == 0) continue;
            if (s <= 1) {
                double num = std::abs(family(t, xi) - family.at_zero);
                double den = omega(s);
                ++r.low_points;
                if (num > 0) r.max_low_ratio = std::max(r.max_low_ratio, den > 0 ? num / den : std::numeric_limits<double>::infinity());
            }
            if (s >= 1) {
                double num = std::abs(family(t, xi));
                double den = omega(1 / s);
                ++r.high_points;
                if (num > 0) r.max_high_ratio = std::max(r.max_high_ratio, den > 0 ? num / den : std::numeric_limits<double>::infinity());
            }
        }
    }
    r.passes = r.max_low_ratio <= constant && r.max_high_ratio <= constant;
    return r;
}

double symbol_lipschitz_constant(const SymbolFamily& family, std::span<const double> t_grid,
                                 std::span<const double> h_grid, const FrequencyGrid& grid) {
    double worst = 0;
    for (double t : t_grid)
        for (double h : h_grid)
            for (const auto& xi : grid)
                worst = std::max(worst, std::abs(family(t + h, xi) - family(t, xi)) * t / h);
    return worst;
}

}  // namespace jumpkit
