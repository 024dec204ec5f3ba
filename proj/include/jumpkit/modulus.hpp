#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace jumpkit {

class ModulusOfContinuity {
public:
    static ModulusOfContinuity zero();
    static ModulusOfContinuity power(double theta, double scale = 1.0);  // scale * t^theta
    // Piecewise linear through (0,0) and the given knots, constant after the last knot.
    static ModulusOfContinuity table(std::vector<double> t, std::vector<double> w);
    static ModulusOfContinuity custom(std::function<double(double)> f, std::string label);

    ModulusOfContinuity raised(double theta) const;    // omega(t)^theta
    ModulusOfContinuity composed(double theta) const;  // omega(t^theta)
    ModulusOfContinuity plus(const ModulusOfContinuity& other) const;
    ModulusOfContinuity scaled(double c) const;

    double operator()(double t) const { return t <= 0 ? 0.0 : f_(t); }
    const std::string& form() const { return form_; }
    // Exponent and scale when form() == "power".
    double theta() const { return theta_; }
    double scale() const { return scale_; }

private:
    ModulusOfContinuity(std::function<double(double)> f, std::string form) : f_(std::move(f)), form_(std::move(form)) {}
    std::function<double(double)> f_;
    std::string form_;
    double theta_ = 0, scale_ = 0;
};

struct ModulusCheck {
    bool vanishes_at_zero;
    bool nondecreasing;
    bool subadditive;
    double worst_excess;  // max of omega(t+s) - omega(t) - omega(s) over the grid
};

// Grid check of omega(0) = 0, monotonicity and subadditivity on a log grid of [lo, hi].
ModulusCheck check_modulus(const ModulusOfContinuity& w, double lo = 1e-6, double hi = 1e3, int points = 200);

struct DiniResult {
    double dini = 0;
    double log_dini = 0;
    double dyadic_dini = 0;      // sum_{j>=0} omega(2^-j)
    double dyadic_log_dini = 0;  // sum_{j>=1} j omega(2^-j)
    bool dini_divergent = false;
    bool log_dini_divergent = false;
};

DiniResult dini_norms(const ModulusOfContinuity& w);

}  // namespace jumpkit
