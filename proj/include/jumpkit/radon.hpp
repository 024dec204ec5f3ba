#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "jumpkit/convex_body.hpp"
#include "jumpkit/lattice.hpp"
#include "jumpkit/modulus.hpp"

namespace jumpkit {

// The monomial map y -> (y^gamma)_{gamma in Gamma}, Gamma sorted lexicographically.
class CanonicalMapSpec {
public:
    CanonicalMapSpec(int k, std::vector<std::vector<int>> gamma);
    // Gamma = {1, 2, ..., degree} for k = 1.
    static CanonicalMapSpec moment_curve(int degree);

    int source_dim() const { return k_; }
    int target_dim() const { return static_cast<int>(gamma_.size()); }
    const std::vector<std::vector<int>>& gamma() const { return gamma_; }
    int degree(std::size_t i) const { return deg_[i]; }
    int max_degree() const;

    void apply(std::span<const double> y, std::span<double> out) const;
    // (t^{|gamma|} xi_gamma)
    std::vector<double> dilate(double t, std::span<const double> xi) const;

private:
    int k_;
    std::vector<std::vector<int>> gamma_;
    std::vector<int> deg_;
};

struct KernelSpec {
    int k = 1;
    std::string name;
    std::function<cplx(std::span<const double>)> eval;
    double size_constant = 1;
    ModulusOfContinuity omega = ModulusOfContinuity::zero();
    bool odd = false;                      // analytic cancellation certificate on symmetric bodies
    double cancellation_tolerance = 1e-9;  // used when no analytic certificate applies

    static KernelSpec hilbert();    // 1/y on R \ {0}
    static KernelSpec riesz_2d();   // x_1 / |x|^3 on R^2 \ {0}
    static KernelSpec zero(int k);
};

struct KernelValidation {
    double size_ratio = 0;             // max |K(x)| |x|^k / C_K on the sample grid
    double cancellation_residual = 0;  // max |int_{Omega_R \ Omega_r} K| over test annuli
    bool analytic_cancellation = false;
    bool ok = false;
};
KernelValidation validate_kernel(const KernelSpec& kernel, const ConvexBodySpec& omega_body,
                                 std::size_t samples = 4096, std::uint64_t seed = 1);

struct SmoothnessReport {
    double size_ratio = 0;       // max |K(x)| |x|^k / C_K
    double pointwise_ratio = 0;  // max |K(x) - K(x+y)| / (omega(|y|/|x|) |x|^{-k}), |y| <= |x|/2
    double annular_ratio = 0;    // max int_{R<=|x|<=2R} |K(x) - K(x+y)| dx / omega(t), |y| <= R t / 2
    double annulus_volume = 0;   // |{1 <= |x| <= 2}|, the factor linking the two forms
    bool pointwise_holds = false;
    bool annular_holds = false;
    bool implication_consistent = false;  // pointwise bound => annular bound with factor annulus_volume
};
SmoothnessReport kernel_smoothness_check(const KernelSpec& kernel, std::size_t sample_budget, std::uint64_t seed = 1);

struct RadonOptions {
    double tol = 1e-8;
    int min_panels = 2;
    int max_panels = 512;
    int rule = 8;
    double r_max = 0;  // outer truncation for singular transforms
};

struct RadonResult {
    LatticeField field;
    int panels;
    double error_estimate;
    bool warning;  // estimated error above tol at the panel cap
};

// |Omega_t|^{-1} int_{Omega_t} f(x - P(y)) dy with multilinear lattice interpolation.
RadonResult radon_average(const LatticeField& field, const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                          double t, const RadonOptions& opt = {});
// int_{|y| <= r_max, y not in Omega_t} f(x - P(y)) K(y) dy
RadonResult radon_singular(const LatticeField& field, const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                           double t, const KernelSpec& kernel, const RadonOptions& opt);
// int_{Omega_outer \ Omega_inner} f(x - P(y)) K(y) dy, the block increments of the truncations.
RadonResult radon_singular_shell(const LatticeField& field, const CanonicalMapSpec& gamma,
                                 const ConvexBodySpec& omega_body, double inner, double outer,
                                 const KernelSpec& kernel, const RadonOptions& opt = {});

// One-parameter (k = 1) multipliers by oscillatory quadrature.
cplx radon_multiplier(const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body, double t,
                      std::span<const double> xi);
// Psi_t(xi) - Psi_s(xi) for s <= t, i.e. minus the integral of e^{-2 pi i xi.P(y)} K(y) over Omega_t \ Omega_s.
cplx singular_multiplier_difference(const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                                    const KernelSpec& kernel, double s, double t, std::span<const double> xi);

}  // namespace jumpkit
