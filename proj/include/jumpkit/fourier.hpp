#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "jumpkit/lattice.hpp"
#include "jumpkit/modulus.hpp"

namespace jumpkit {

enum class PoissonFlavor { continuous, discrete };

double euclidean_norm(std::span<const double> xi);
// (sum_j sin^2(pi xi_j))^{1/2}
double sin_norm(std::span<const double> xi);

double poisson_symbol(double t, std::span<const double> xi, PoissonFlavor flavor);
// p_{2^k} - p_{2^{k+1}}
double littlewood_paley_symbol(int k, std::span<const double> xi, PoissonFlavor flavor);
// min(s, 1/s) with s = 2^k |xi|
double lp_envelope(int k, std::span<const double> xi);

// A parameterized multiplier: t, k or N depending on the flavor.
struct SymbolFamily {
    std::string flavor;  // poisson-continuous | poisson-discrete | littlewood-paley | cube | lq-ball | custom
    int dim = 0;         // 0 accepts any dimension
    cplx at_zero = 1.0;
    std::function<cplx(double param, std::span<const double> xi)> eval;

    cplx operator()(double param, std::span<const double> xi) const { return eval(param, xi); }
    Multiplier at(double param) const;
};

SymbolFamily poisson_family(PoissonFlavor flavor);
SymbolFamily littlewood_paley_family(PoissonFlavor flavor);
SymbolFamily envelope_family();
// Normalized indicator symbol of t[-1,1]^d: prod_j sin(2 pi t xi_j) / (2 pi t xi_j).
SymbolFamily cube_family();
// Normalized indicator symbol of the Euclidean ball of radius t via Bessel functions.
SymbolFamily euclidean_ball_family(int d);

struct McValue {
    double value;
    double stderr_;
};
// Symbol of the normalized l^q unit ball by Monte Carlo over uniform ball samples.
McValue lq_ball_symbol_mc(double q, std::span<const double> xi, std::size_t samples, std::uint64_t seed);

using FrequencyGrid = std::vector<std::vector<double>>;
// Magnitudes log-uniform in [2^lo, 2^hi], uniformly random directions.
FrequencyGrid log_radial_grid(int d, std::size_t n, double lo_exp, double hi_exp, std::uint64_t seed);
// Points of [-1/2, 1/2)^d: half uniform, half sparse low-frequency with log-spaced magnitudes.
FrequencyGrid torus_grid(int d, std::size_t n, std::uint64_t seed);

struct OffDiagonalReport {
    double a_j = 0;
    double tail_bound = 0;  // envelope bound on the k outside the range
    std::size_t argmax = 0;
};

struct OffDiagonalOptions {
    double envelope_m = 1.0;  // |M_k| <= envelope_m * min(s, 1/s)
    double envelope_s = 1.0;  // |S_k| <= envelope_s * min(s, 1/s)
    int tail_terms = 400;
};

// sup over the grid of (sum_{k in [k_lo, k_hi]} |M_k(xi) S_{k+j}(xi)|^2)^{1/2}.
OffDiagonalReport off_diagonal_decay(const SymbolFamily& mk, const SymbolFamily& sk, int j, int k_lo, int k_hi,
                                     const FrequencyGrid& grid, const OffDiagonalOptions& opt = {});

struct EnvelopeReport {
    double max_low_ratio = 0;   // |mu_t(xi) - mu_t(0)| / omega(t q(xi)) where t q <= 1
    double max_high_ratio = 0;  // |mu_t(xi)| / omega(1 / (t q(xi))) where t q >= 1
    std::size_t low_points = 0;
    std::size_t high_points = 0;
    bool passes = false;  // both ratios <= constant
};

using QuasiNorm = std::function<double(std::span<const double>)>;

EnvelopeReport symbol_envelope_check(const SymbolFamily& family, const ModulusOfContinuity& omega,
                                     const QuasiNorm& quasi_norm, std::span<const double> t_grid,
                                     const FrequencyGrid& grid, double constant);

// max of |mu_{t+h}(xi) - mu_t(xi)| t / h over the (t, h, xi) grid.
double symbol_lipschitz_constant(const SymbolFamily& family, std::span<const double> t_grid,
                                 std::span<const double> h_grid, const FrequencyGrid& grid);

}  // namespace jumpkit
