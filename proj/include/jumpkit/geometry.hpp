#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jumpkit/convex_body.hpp"
#include "jumpkit/fourier.hpp"
#include "jumpkit/kernels.hpp"
#include "jumpkit/radon.hpp"

namespace jumpkit {

// xi -> max_gamma |xi_gamma|^{1/|gamma|}
class QuasiNormSpec {
public:
    explicit QuasiNormSpec(CanonicalMapSpec gamma) : gamma_(std::move(gamma)) {}
    const CanonicalMapSpec& gamma() const { return gamma_; }
    double operator()(std::span<const double> xi) const;

private:
    CanonicalMapSpec gamma_;
};

double quasi_norm(const QuasiNormSpec& spec, std::span<const double> xi);

// |x|^{1/m}, computed so that scaling x by 2^m scales the result by exactly 2.
double dyadic_root(double x, int m);

// Smallest C with q(xi + eta) <= C (q(xi) + q(eta)) over random pairs at scales 2^[lo, hi].
double quasi_triangle_constant(const QuasiNormSpec& spec, std::size_t pairs, double lo_exp, double hi_exp,
                               std::uint64_t seed);

// Constants in the two envelopes of D(xi) = |Psi_t(xi) - Psi_{kappa t}(xi)| with u = t q(xi), e = 1 / max degree:
// D <= C_high (u^-e + omega_K(u^-e)) for u >= 1 and D <= C_low u^e for u < 1.
struct SingularEnvelope {
    double high_constant = 0, low_constant = 0;
    std::size_t high_points = 0, low_points = 0;
};
SingularEnvelope singular_envelope_check(const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                                         const KernelSpec& kernel, double t, double kappa, const FrequencyGrid& grid,
                                         kernels::Exec exec = kernels::Exec::parallel);

struct BoundaryMeasure {
    double estimate;
    double stderr_;
    double ratio;  // estimate / (s diam^{k-1})
    std::size_t samples;
    bool exact_distance;
};

// Monte Carlo measure of {x : dist(x, boundary) < s} from uniform samples of the s-padded bounding box.
BoundaryMeasure boundary_neighborhood_measure(const ConvexBodySpec& body, double s, std::size_t samples,
                                              std::uint64_t seed, kernels::Exec exec = kernels::Exec::parallel);

// Exact |{x : dist(x, boundary) < s}| where plane or solid geometry gives it: Euclidean balls,
// boxes in two and three dimensions (l^inf balls included) and the planar l^1 ball.
// Returns nullopt for other bodies or when s exceeds the inradius.
std::optional<double> exact_boundary_neighborhood(const ConvexBodySpec& body, double s);

}  // namespace jumpkit
