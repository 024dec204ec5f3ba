#pragma once

#include <limits>
#include <span>

#include "jumpkit/sampled_path.hpp"

namespace jumpkit {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Longest chain of increasing sample indices whose consecutive moves all have modulus >= lambda.
int jump_count(std::span<const cplx> values, double lambda);
int jump_count(std::span<const double> values, double lambda);
int jump_count(const SampledPath& path, double lambda);

// r-variation; r may be infinity.
double variation(std::span<const cplx> values, double r);
double variation(const SampledPath& path, double r);

JumpProfile jump_breakpoints(std::span<const cplx> values);
JumpProfile jump_breakpoints(std::span<const double> values);
JumpProfile jump_breakpoints(const SampledPath& path);

struct SeminormResult {
    double value = 0;
    double argmax_lambda = 0;  // 0 when every path is constant
};

// sup_lambda lambda * (sum_x w_x N_lambda(x)^{p/2})^{1/p}, exact over the breakpoint set.
SeminormResult seminorm_from_profiles(std::span<const JumpProfile> profiles,
                                      std::span<const double> weights, double p);
SeminormResult jump_seminorm_detail(const FieldOfPaths& field, double p);
double jump_seminorm(const FieldOfPaths& field, double p);

struct LewkoResult {
    double lhs;
    double rhs;
};
LewkoResult lewko_bound(const SampledPath& path, double r);

struct LongShort {
    double long_part;
    double short_part;
    double lhs;
};
LongShort long_short_split(const SampledPath& path, double lambda);
// sup over lambda of lhs / (long + short); infinity if lhs > 0 while both parts vanish.
double long_short_sup_ratio(const SampledPath& path);
// The same comparison after the sup over lambda is taken on each side separately:
// sup lhs / (sup long + sup short). Finite whenever the path contains the dyadic times it spans.
double long_short_seminorm_ratio(const SampledPath& path);

struct ExponentRecord {
    double q0, q1, theta, nu, q_theta;
    // Largest absolute residual over the identities tied to theta, nu and q_theta.
    double max_identity_residual() const;
};
ExponentRecord interpolation_exponents(double q0, double q1);

// Fixed point of B = C (1 + a B^{(2 - q1)/2}) reached from B = C.
double bootstrap_fixed_point(double a, double q1, double C, int max_iter = 10000);
// C' with B <= C' (1 + a^{2/q1}).
double bootstrap_bound_constant(double q1, double C);

}  // namespace jumpkit
