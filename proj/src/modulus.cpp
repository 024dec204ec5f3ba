#include "jumpkit/modulus.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "jumpkit/errors.hpp"

namespace jumpkit {

ModulusOfContinuity ModulusOfContinuity::zero() {
    ModulusOfContinuity m([](double) { return 0.0; }, "power");
    m.theta_ = 1;
    return m;
}

ModulusOfContinuity ModulusOfContinuity::power(double theta, double scale) {
    require(theta > 0 && theta <= 1, "power modulus needs 0 < theta <= 1");
    require(scale >= 0 && std::isfinite(scale), "power modulus needs a finite nonnegative scale");
    ModulusOfContinuity m([theta, scale](double t) { return scale * std::pow(t, theta); }, "power");
    m.theta_ = theta;
    m.scale_ = scale;
    return m;
}

ModulusOfContinuity ModulusOfContinuity::table(std::vector<double> t, std::vector<double> w) {
    require(!t.empty() && t.size() == w.size(), "modulus table needs matching nonempty knots");
    for (std::size_t i = 0; i < t.size(); ++i) {
        require(t[i] > 0 && w[i] >= 0, "modulus table knots must be positive");
        if (i > 0) require(t[i] > t[i - 1], "modulus table knots must increase");
    }
    t.insert(t.begin(), 0.0);
    w.insert(w.begin(), 0.0);
    return ModulusOfContinuity(
        [t = std::move(t), w = std::move(w)](double x) {
            if (x >= t.back()) return w.back();
            auto it = std::upper_bound(t.begin(), t.end(), x);
            std::size_t i = static_cast<std::size_t>(it - t.begin());
            double a = (x - t[i - 1]) / (t[i] - t[i - 1]);
            return w[i - 1] + a * (w[i] - w[i - 1]);
        },
        "table");
}

ModulusOfContinuity ModulusOfContinuity::custom(std::function<double(double)> f, std::string label) {
    return ModulusOfContinuity(std::move(f), "composite:" + label);
}

ModulusOfContinuity ModulusOfContinuity::raised(double theta) const {
    require(theta > 0 && theta <= 1, "exponent must lie in (0, 1]");
    auto f = f_;
    return ModulusOfContinuity([f, theta](double t) { return std::pow(f(t), theta); }, "composite");
}

ModulusOfContinuity ModulusOfContinuity::composed(double theta) const {
    require(theta > 0 && theta <= 1, "exponent must lie in (0, 1]");
    auto f = f_;
    return ModulusOfContinuity([f, theta](double t) { return f(std::pow(t, theta)); }, "composite");
}

ModulusOfContinuity ModulusOfContinuity::plus(const ModulusOfContinuity& other) const {
    auto f = f_, g = other.f_;
    return ModulusOfContinuity([f, g](double t) { return f(t) + g(t); }, "composite");
}

ModulusOfContinuity ModulusOfContinuity::scaled(double c) const {
    require(c >= 0, "modulus scale must be nonnegative");
    auto f = f_;
    ModulusOfContinuity m([f, c](double t) { return c * f(t); }, form_);
    m.theta_ = theta_;
    m.scale_ = scale_ * c;
    return m;
}

ModulusCheck check_modulus(const ModulusOfContinuity& w, double lo, double hi, int points) {
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = lo * std::pow(hi / lo, double(i) / (points - 1));
    ModulusCheck c{w(0.0) == 0.0, true, true, -std::numeric_limits<double>::infinity()};
    for (int i = 1; i < points; ++i)
        if (w(g[i]) < w(g[i - 1])) c.nondecreasing = false;
    for (int i = 0; i < points; ++i)
        for (int j = i; j < points; ++j) {
            double ex = w(g[i] + g[j]) - w(g[i]) - w(g[j]);
            c.worst_excess = std::max(c.worst_excess, ex);
            if (ex > 1e-12 * (1 + w(g[i] + g[j]))) c.subadditive = false;
        }
    return c;
}

namespace {

struct PanelSums {
    double total = 0;
    bool divergent = false;
};

// int_0^inf g(u) du over panels [0,1], [1,2], [2,4], ... with a geometric tail estimate.
template <class G>
PanelSums geometric_panels(G g) {
    using boost::math::quadrature::gauss_kronrod;
    PanelSums s;
    std::vector<double> c;
    double a = 0, b = 1;
    // e^{-u} underflows past u ~ 745, where omega(0) = 0 takes over.
    while (a < 1024) {
        double err = 0;
        double v = gauss_kronrod<double, 61>::integrate(g, a, b, 15, 1e-14, &err);
        c.push_back(v);
        s.total += v;
        a = b;
        b *= 2;
    }
    // Panels [256,512] and [128,256] decide whether the integrand's mass has run out.
    double last = c[9], prev = c[8];
    if (last > 1e-9 * std::max(s.total, 1e-300) && prev > 0 && last / prev > 0.7) s.divergent = true;
    return s;
}

}  // namespace

DiniResult dini_norms(const ModulusOfContinuity& w) {
    DiniResult r;
    auto d = geometric_panels([&](double u) { return w(std::exp(-u)); });
    auto l = geometric_panels([&](double u) { return u * w(std::exp(-u)); });
    r.dini = d.total;
    r.dini_divergent = d.divergent;
    r.log_dini = l.total;
    r.log_dini_divergent = l.divergent;
    for (int j = 0; j <= 1074; ++j) {
        double v = w(std::ldexp(1.0, -j));
        r.dyadic_dini += v;
        r.dyadic_log_dini += j * v;
    }
    if (r.dini_divergent) r.dini = std::numeric_limits<double>::infinity();
    if (r.log_dini_divergent) r.log_dini = std::numeric_limits<double>::infinity();
    return r;
}

}  // namespace jumpkit
