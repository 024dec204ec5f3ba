#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace jumpkit {

using cplx = std::complex<double>;

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> x, w;
};
// n in {8, 10, 16, 20, 30}
const GaussRule& gauss_rule(int n);

template <class F>
auto gauss_panel(F&& f, double a, double b, const GaussRule& g) {
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    decltype(f(m)) s{};
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(m + h * g.x[i]);
    return s * h;
}

struct OscillatoryOptions {
    double max_increment = 0.7853981633974483;  // phase change allowed per panel
    double tol = 1e-9;                          // absolute change between panel halvings
    int rule = 20;
    int max_halvings = 6;
    std::size_t max_panels = 1u << 24;
};

struct OscillatoryResult {
    cplx value;
    double error;
    std::size_t panels;
};

// int_a^b f over panels that respect the cuts and keep increment_bound(l, r) <= max_increment,
// then halves every panel until two successive sums agree to tol. Throws NumericFailure otherwise.
OscillatoryResult integrate_oscillatory(const std::function<cplx(double)>& f,
                                        const std::function<double(double, double)>& increment_bound,
                                        std::vector<double> cuts, const OscillatoryOptions& opt = {});

}  // namespace jumpkit
