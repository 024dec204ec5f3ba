#pragma once

#include <string>
#include <vector>

namespace jumpkit {

// Piecewise-linear amplitude on R (k = 1), or a tensor product of two of them (k = 2).
class AmplitudeSpec {
public:
    struct Piece {
        double x0, x1, v0, v1;  // linear from (x0, v0) to (x1, v1)
    };

    static AmplitudeSpec zero(int k = 1);
    static AmplitudeSpec indicator(double lo, double hi);
    static AmplitudeSpec hat(double lo, double hi);  // peak 1 at the midpoint
    static AmplitudeSpec step_table(std::vector<double> breaks, std::vector<double> values);
    static AmplitudeSpec sampled(double lo, double hi, std::vector<double> samples);
    static AmplitudeSpec box(double lo0, double hi0, double lo1, double hi1);
    static AmplitudeSpec tensor_hat(double lo0, double hi0, double lo1, double hi1);

    int dim() const { return static_cast<int>(factors_.size()); }
    const std::string& kind() const { return kind_; }
    bool is_zero() const;

    double value(const double* x) const;
    // Support bounding box along an axis.
    double lo(int axis) const;
    double hi(int axis) const;
    std::vector<double> knots(int axis) const;

    double l1_norm() const;
    // int_a^b |psi| (k = 1)
    double abs_integral(double a, double b) const;
    // int_a^b |psi(x) - psi(x - y)| dx (k = 1), exact
    double shift_difference(double y, double a, double b) const;
    // int_{R^k} |psi(x) - psi(x - v)| dx; exact for k = 1 and boxes, panel quadrature for tensor hats
    double shift_difference(const double* v) const;
    bool shift_difference_exact() const;

    // psi(c x): knots divided by c.
    AmplitudeSpec rescaled(double c) const;

    // One factor along an axis.
    double factor_value(int axis, double x) const;

private:
    std::string kind_;
    std::vector<std::vector<Piece>> factors_;
};

// Real polynomial sum_alpha c_alpha x^alpha in k <= 2 variables.
class PhaseSpec {
public:
    struct Term {
        std::vector<int> alpha;
        double coeff;
    };

    // lambda x^k / k! on (a, b), so that phi^{(k)} = lambda.
    static PhaseSpec monomial(double lambda, int k, double a, double b);
    // 1-d polynomial with a declared lower bound lambda for |phi^{(k)}| on (a, b), checked on a grid.
    static PhaseSpec polynomial_1d(std::vector<double> coeffs, int k, double lambda, double a, double b);
    static PhaseSpec polynomial(int vars, std::vector<Term> terms);

    int vars() const { return vars_; }
    int degree() const;
    const std::vector<Term>& terms() const { return terms_; }
    double lambda() const { return lambda_; }
    int order() const { return order_; }
    double a() const { return a_; }
    double b() const { return b_; }

    double value(const double* x) const;
    double partial(int axis, const double* x) const;
    // Upper bound of |d phi / d x_axis| over the box [lo, hi].
    double partial_bound(int axis, const double* lo, const double* hi) const;
    // Lambda = sum_{|alpha| >= 1} R^{|alpha|} |c_alpha|
    double big_lambda(double R) const;
    bool separable() const;
    // P(R x), the rescaled polynomial
    PhaseSpec rescaled(double R) const;

private:
    int vars_ = 1;
    std::vector<Term> terms_;
    double lambda_ = 0, a_ = 0, b_ = 0;
    int order_ = 0;
};

struct VdcOneDim {
    double lhs = 0, rhs_window = 0, rhs_smoothness = 0;
    double lhs_error = 0;
    double ratio() const;  // lhs / (rhs_window + rhs_smoothness), 0 when both sides vanish
};
VdcOneDim vdc_1d(const PhaseSpec& phase, const AmplitudeSpec& psi);

struct VdcMultiDim {
    double lhs = 0, rhs = 0, Lambda = 0;
    double lhs_error = 0;
    bool rhs_exact = true;
    double ratio() const;
};
VdcMultiDim vdc_multidim(const PhaseSpec& phase, const AmplitudeSpec& psi, double R, int directions = 64,
                         int radii = 16);

// |int e^{i phi} psi| over the amplitude's support (k <= 2).
double oscillatory_lhs(const PhaseSpec& phase, const AmplitudeSpec& psi, double* error = nullptr);

}  // namespace jumpkit
