#include "jumpkit/radon.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jumpkit/errors.hpp"
#include "jumpkit/quadrature.hpp"
#include "jumpkit/random.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit {

using std::numbers::pi;

CanonicalMapSpec::CanonicalMapSpec(int k, std::vector<std::vector<int>> gamma) : k_(k), gamma_(std::move(gamma)) {
    require(k >= 1, "source dimension must be positive");
    require(!gamma_.empty(), "Gamma must be nonempty");
    std::sort(gamma_.begin(), gamma_.end());
    require(std::adjacent_find(gamma_.begin(), gamma_.end()) == gamma_.end(), "Gamma has repeated multi-indices");
    for (const auto& g : gamma_) {
        require(static_cast<int>(g.size()) == k, "multi-index length differs from k");
        int s = 0;
        for (int e : g) {
            require(e >= 0, "multi-index entries must be nonnegative");
            s += e;
        }
        require(s >= 1, "multi-indices must have degree >= 1");
        deg_.push_back(s);
    }
}

CanonicalMapSpec CanonicalMapSpec::moment_curve(int degree) {
    std::vector<std::vector<int>> g;
    for (int j = 1; j <= degree; ++j) g.push_back({j});
    return CanonicalMapSpec(1, g);
}

int CanonicalMapSpec::max_degree() const { return *std::max_element(deg_.begin(), deg_.end()); }

void CanonicalMapSpec::apply(std::span<const double> y, std::span<double> out) const {
    for (std::size_t i = 0; i < gamma_.size(); ++i) {
        double v = 1;
        for (int a = 0; a < k_; ++a)
            for (int e = 0; e < gamma_[i][a]; ++e) v *= y[a];
        out[i] = v;
    }
}

std::vector<double> CanonicalMapSpec::dilate(double t, std::span<const double> xi) const {
    std::vector<double> out(xi.begin(), xi.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= std::pow(t, deg_[i]);
    return out;
}

KernelSpec KernelSpec::hilbert() {
    KernelSpec K;
    K.k = 1;
    K.name = "hilbert";
    K.eval = [](std::span<const double> y) { return cplx(1.0 / y[0]); };
    K.size_constant = 1;
    K.omega = ModulusOfContinuity::power(1.0, 2.0);
    K.odd = true;
    return K;
}

KernelSpec KernelSpec::riesz_2d() {
    KernelSpec K;
    K.k = 2;
    K.name = "riesz-x1";
    K.eval = [](std::span<const double> y) {
        double r = std::hypot(y[0], y[1]);
        return cplx(y[0] / (r * r * r));
    };
    K.size_constant = 1;
    // |grad K| <= 2 |x|^{-3}, and |x + sy| >= |x|/2 on the segment
    K.omega = ModulusOfContinuity::power(1.0, 16.0);
    K.odd = true;
    return K;
}

KernelSpec KernelSpec::zero(int k) {
    KernelSpec K;
    K.k = k;
    K.name = "zero";
    K.eval = [](std::span<const double>) { return cplx(0.0); };
    K.odd = true;
    return K;
}

namespace {

struct Node {
    std::vector<double> y;
    double w;
};

// Endpoints of the 1-d body (lo < 0 < hi required for truncations).
std::pair<double, double> interval_of(const ConvexBodySpec& b) {
    require(b.dim() == 1, "expected a 1-d body");
    if (b.kind() == ConvexBodySpec::Kind::box) return {b.center()[0] - b.half_widths()[0], b.center()[0] + b.half_widths()[0]};
    return {-1.0, 1.0};
}

void push_interval(std::vector<Node>& nodes, double a, double b, int panels, const GaussRule& g,
                   const std::function<double(double)>& weight) {
    for (int p = 0; p < panels; ++p) {
        double l = a + (b - a) * p / panels, r = a + (b - a) * (p + 1) / panels;
        double m = 0.5 * (l + r), h = 0.5 * (r - l);
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            double y = m + h * g.x[i];
            nodes.push_back({{y}, g.w[i] * h * weight(y)});
        }
    }
}

// [a, b] with 0 < a split at a 2^j so each piece is within a dyadic shell.
void push_dyadic(std::vector<Node>& nodes, double a, double b, int panels, const GaussRule& g,
                 const std::function<double(double)>& weight) {
    double l = a;
    while (l < b) {
        double r = std::min(2 * l, b);
        if (b - r < 1e-12 * b) r = b;
        push_interval(nodes, l, r, panels, g, weight);
        l = r;
    }
}

std::vector<Node> average_nodes(const ConvexBodySpec& body, double t, int panels, const GaussRule& g) {
    std::vector<Node> nodes;
    auto one = [](double) { return 1.0; };
    if (body.dim() == 1) {
        auto [lo, hi] = interval_of(body);
        if (lo < 0 && hi > 0) {
            push_interval(nodes, t * lo, 0, panels, g, one);
            push_interval(nodes, 0, t * hi, panels, g, one);
        } else {
            push_interval(nodes, t * lo, t * hi, 2 * panels, g, one);
        }
    } else {
        require(body.dim() == 2, "Radon quadrature supports k <= 2");
        std::vector<Node> theta;
        push_interval(theta, 0, 2 * pi, 4 * panels, g, one);
        for (const auto& th : theta) {
            double u[2] = {std::cos(th.y[0]), std::sin(th.y[0])};
            double R = t * body.radial(u);
            std::vector<Node> rad;
            push_interval(rad, 0, R, panels, g, [](double r) { return r; });
            for (const auto& rn : rad) nodes.push_back({{rn.y[0] * u[0], rn.y[0] * u[1]}, th.w * rn.w});
        }
    }
    CompensatedSum s;
    for (const auto& n : nodes) s.add(n.w);
    const double total = s.value();
    for (auto& n : nodes) n.w /= total;
    return nodes;
}

// Nodes on {inner rho <= |y| <= outer}, where outer is outer_scale * rho or the fixed radius r_max.
std::vector<Node> shell_nodes(const ConvexBodySpec& body, double inner, double outer_scale, double r_max,
                              const KernelSpec& K, int panels, const GaussRule& g) {
    std::vector<Node> nodes;
    if (body.dim() == 1) {
        auto [lo, hi] = interval_of(body);
        require(lo < 0 && hi > 0, "singular transforms need 0 inside Omega");
        auto kw = [&](double y) {
            double v[1] = {y};
            return K.eval(v).real();
        };
        double pos_hi = r_max > 0 ? r_max : outer_scale * hi;
        double neg_lo = r_max > 0 ? r_max : -outer_scale * lo;
        require(pos_hi > inner * hi && neg_lo > -inner * lo, "outer truncation must exceed Omega_t");
        push_dyadic(nodes, inner * hi, pos_hi, panels, g, kw);
        std::vector<Node> neg;
        push_dyadic(neg, -inner * lo, neg_lo, panels, g, [&](double y) { return kw(-y); });
        for (auto& n : neg) {
            n.y[0] = -n.y[0];
            nodes.push_back(n);
        }
        return nodes;
    }
    require(body.dim() == 2, "Radon quadrature supports k <= 2");
    std::vector<Node> theta;
    push_interval(theta, 0, 2 * pi, 8 * panels, g, [](double) { return 1.0; });
    for (const auto& th : theta) {
        double u[2] = {std::cos(th.y[0]), std::sin(th.y[0])};
        double rho = body.radial(u);
        double a = inner * rho, b = r_max > 0 ? r_max : outer_scale * rho;
        require(b > a, "outer truncation must exceed Omega_t");
        std::vector<Node> rad;
        push_dyadic(rad, a, b, panels, g, [&](double r) {
            double y[2] = {r * u[0], r * u[1]};
            return r * K.eval(y).real();
        });
        for (const auto& rn : rad) nodes.push_back({{rn.y[0] * u[0], rn.y[0] * u[1]}, th.w * rn.w});
    }
    return nodes;
}

// Lattice stencil W with (W * f)(x) = sum_n w_n f(x - P(y_n)), f read by multilinear interpolation.
LatticeField stencil_of(const std::vector<Node>& nodes, const CanonicalMapSpec& gamma, int M, double h) {
    const int d = gamma.target_dim();
    LatticeField W(d, M, h);
    std::vector<double> p(d);
    std::vector<int> base(d), c(d);
    std::vector<double> frac(d);
    for (const auto& n : nodes) {
        gamma.apply(n.y, p);
        // f(x - p): index offset -p/h split into integer part and fraction
        for (int a = 0; a < d; ++a) {
            double u = -p[a] / h;
            double f = std::floor(u);
            base[a] = static_cast<int>(std::fmod(f, double(M)));
            frac[a] = u - f;
        }
        for (int corner = 0; corner < (1 << d); ++corner) {
            double w = n.w;
            for (int a = 0; a < d; ++a) {
                bool up = (corner >> a) & 1;
                w *= up ? frac[a] : 1 - frac[a];
                c[a] = base[a] + (up ? 1 : 0);
            }
            if (w == 0) continue;
            // out(x) picks f(x + c), so the convolution kernel sits at -c
            for (int a = 0; a < d; ++a) c[a] = -c[a];
            W[W.index(c)] += w;
        }
    }
    return W;
}

LatticeField convolve(const LatticeField& f, const LatticeField& W) {
    auto a = dft_forward(f);
    auto b = dft_forward(W);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return dft_inverse(std::move(a), f.dim(), f.side(), f.spacing());
}

double max_diff(const LatticeField& a, const LatticeField& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

RadonResult refine(const LatticeField& field, const CanonicalMapSpec& gamma, const RadonOptions& opt,
                   const std::function<std::vector<Node>(int)>& nodes_for) {
    require(gamma.target_dim() == field.dim(), "field dimension must equal |Gamma|");
    require(gamma.target_dim() <= 3, "Radon quadrature supports |Gamma| <= 3");
    const GaussRule& g = gauss_rule(opt.rule);
    (void)g;
    int panels = opt.min_panels;
    LatticeField prev = convolve(field, stencil_of(nodes_for(panels), gamma, field.side(), field.spacing()));
    double err = std::numeric_limits<double>::infinity();
    while (panels * 2 <= opt.max_panels) {
        panels *= 2;
        LatticeField next = convolve(field, stencil_of(nodes_for(panels), gamma, field.side(), field.spacing()));
        err = max_diff(prev, next);
        prev = std::move(next);
        if (err < opt.tol) return {std::move(prev), panels, err, false};
    }
    return {std::move(prev), panels, err, true};
}

}  // namespace

RadonResult radon_average(const LatticeField& field, const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                          double t, const RadonOptions& opt) {
    require(t > 0, "Radon average needs t > 0");
    require(omega_body.dim() == gamma.source_dim(), "Omega lives in the wrong dimension");
    const GaussRule& g = gauss_rule(opt.rule);
    return refine(field, gamma, opt, [&](int panels) { return average_nodes(omega_body, t, panels, g); });
}

RadonResult radon_singular(const LatticeField& field, const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                           double t, const KernelSpec& kernel, const RadonOptions& opt) {
    require(t > 0, "singular Radon transform needs t > 0");
    require(opt.r_max > 0, "singular Radon transform needs an outer truncation radius");
    require(omega_body.dim() == gamma.source_dim() && kernel.k == gamma.source_dim(), "kernel, Omega and Gamma disagree on k");
    auto v = validate_kernel(kernel, omega_body);
    require(v.ok, "kernel fails the size or cancellation check");
    const GaussRule& g = gauss_rule(opt.rule);
    return refine(field, gamma, opt,
                  [&](int panels) { return shell_nodes(omega_body, t, 0, opt.r_max, kernel, panels, g); });
}

RadonResult radon_singular_shell(const LatticeField& field, const CanonicalMapSpec& gamma,
                                 const ConvexBodySpec& omega_body, double inner, double outer,
                                 const KernelSpec& kernel, const RadonOptions& opt) {
    require(0 < inner && inner < outer, "shell needs 0 < inner < outer");
    require(omega_body.dim() == gamma.source_dim() && kernel.k == gamma.source_dim(), "kernel, Omega and Gamma disagree on k");
    const GaussRule& g = gauss_rule(opt.rule);
    return refine(field, gamma, opt,
                  [&](int panels) { return shell_nodes(omega_body, inner, outer, 0, kernel, panels, g); });
}

namespace {

double phase_increment(const CanonicalMapSpec& gamma, std::span<const double> xi, double l, double r) {
    double m = std::max(std::fabs(l), std::fabs(r)), s = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        int e = gamma.degree(i);
        s += std::fabs(xi[i]) * e * std::pow(m, e - 1);
    }
    return 2 * pi * s * (r - l);
}

cplx character(const CanonicalMapSpec& gamma, std::span<const double> xi, double y) {
    double ph = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) ph += xi[i] * std::pow(y, gamma.degree(i));
    return std::polar(1.0, -2 * pi * ph);
}

}  // namespace

cplx radon_multiplier(const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body, double t,
                      std::span<const double> xi) {
    require(gamma.source_dim() == 1, "quadrature multipliers are implemented for k = 1");
    require(xi.size() == gamma.gamma().size(), "frequency has the wrong dimension");
    require(t > 0, "t must be positive");
    auto [lo, hi] = interval_of(omega_body);
    std::vector<double> cuts{t * lo, t * hi};
    if (lo < 0 && hi > 0) cuts.push_back(0);
    OscillatoryOptions opt;
    opt.max_increment = pi;
    auto r = integrate_oscillatory([&](double y) { return character(gamma, xi, y); },
                                   [&](double l, double rr) { return phase_increment(gamma, xi, l, rr); }, cuts, opt);
    return r.value / (t * (hi - lo));
}

cplx singular_multiplier_difference(const CanonicalMapSpec& gamma, const ConvexBodySpec& omega_body,
                                    const KernelSpec& kernel, double s, double t, std::span<const double> xi) {
    require(gamma.source_dim() == 1 && kernel.k == 1, "quadrature multipliers are implemented for k = 1");
    require(xi.size() == gamma.gamma().size(), "frequency has the wrong dimension");
    require(0 < s && s <= t, "need 0 < s <= t");
    if (s == t) return 0.0;
    auto [lo, hi] = interval_of(omega_body);
    require(lo < 0 && hi > 0, "singular multipliers need 0 inside Omega");
    OscillatoryOptions opt;
    opt.max_increment = pi;
    auto f = [&](double y) {
        double v[1] = {y};
        return character(gamma, xi, y) * kernel.eval(v);
    };
    auto inc = [&](double l, double r) { return phase_increment(gamma, xi, l, r); };
    cplx pos = integrate_oscillatory(f, inc, {s * hi, t * hi}, opt).value;
    cplx neg = integrate_oscillatory(f, inc, {t * lo, s * lo}, opt).value;
    return -(pos + neg);
}

KernelValidation validate_kernel(const KernelSpec& kernel, const ConvexBodySpec& omega_body, std::size_t samples,
                                 std::uint64_t seed) {
    require(kernel.eval != nullptr, "kernel has no evaluator");
    require(omega_body.dim() == kernel.k, "kernel and Omega dimensions differ");
    KernelValidation v;
    Rng rng(stream_seed(seed, 0x5123));
    std::normal_distribution<double> nd;
    std::vector<double> x(kernel.k);
    for (std::size_t i = 0; i < samples; ++i) {
        double r = std::exp2(uniform(rng, -20, 20)), n = 0;
        for (auto& c : x) {
            c = nd(rng);
            n += c * c;
        }
        n = std::sqrt(n);
        for (auto& c : x) c *= r / n;
        double ratio = std::abs(kernel.eval(x)) * std::pow(r, kernel.k);
        v.size_ratio = std::max(v.size_ratio, kernel.size_constant > 0 ? ratio / kernel.size_constant : ratio);
    }
    v.analytic_cancellation = kernel.odd && omega_body.symmetric();
    if (!v.analytic_cancellation) {
        const GaussRule& g = gauss_rule(16);
        for (auto [r, R] : {std::pair{0.5, 1.0}, std::pair{1.0, 2.0}, std::pair{0.1, 10.0}}) {
            CompensatedSum s;
            for (const auto& n : shell_nodes(omega_body, r, R, 0, kernel, 8, g)) s.add(n.w);
            v.cancellation_residual = std::max(v.cancellation_residual, std::fabs(s.value()));
        }
    }
    v.ok = v.size_ratio <= 1 + 1e-12 && (v.analytic_cancellation || v.cancellation_residual <= kernel.cancellation_tolerance);
    return v;
}

SmoothnessReport kernel_smoothness_check(const KernelSpec& kernel, std::size_t sample_budget, std::uint64_t seed) {
    require(kernel.k == 1 || kernel.k == 2, "smoothness check supports k <= 2");
    const int k = kernel.k;
    SmoothnessReport rep;
    rep.annulus_volume = k == 1 ? 2.0 : 3 * pi;
    Rng rng(stream_seed(seed, 0x5307));
    std::normal_distribution<double> nd;
    auto random_dir = [&](std::vector<double>& u) {
        double n = 0;
        do {
            n = 0;
            for (auto& c : u) {
                c = nd(rng);
                n += c * c;
            }
        } while (n == 0);
        n = std::sqrt(n);
        for (auto& c : u) c /= n;
    };
    std::vector<double> x(k), y(k), xy(k), u(k);
    const std::size_t point_samples = sample_budget / 2;
    for (std::size_t i = 0; i < point_samples; ++i) {
        double r = std::exp2(uniform(rng, -10, 10));
        random_dir(u);
        for (int a = 0; a < k; ++a) x[a] = r * u[a];
        double size = std::abs(kernel.eval(x)) * std::pow(r, k);
        rep.size_ratio = std::max(rep.size_ratio, kernel.size_constant > 0 ? size / kernel.size_constant : size);
        double ry = r * 0.5 * uniform01(rng);
        random_dir(u);
        for (int a = 0; a < k; ++a) {
            y[a] = ry * u[a];
            xy[a] = x[a] + y[a];
        }
        double num = std::abs(kernel.eval(x) - kernel.eval(xy));
        double den = kernel.omega(ry / r) * std::pow(r, -k);
        if (num > 0) rep.pointwise_ratio = std::max(rep.pointwise_ratio, den > 0 ? num / den : std::numeric_limits<double>::infinity());
    }

    // annular form: a few (R, t, y) triples, each integral by quadrature
    const std::size_t triples = std::max<std::size_t>(1, (sample_budget - point_samples) / 2048);
    const GaussRule& g = gauss_rule(16);
    for (std::size_t i = 0; i < triples; ++i) {
        double R = std::exp2(uniform(rng, -3, 3));
        double t = std::exp2(uniform(rng, -8, 0));
        random_dir(u);
        double ry = R * t / 2 * std::sqrt(uniform01(rng));
        for (int a = 0; a < k; ++a) y[a] = ry * u[a];
        auto diff = [&](std::span<const double> p) {
            std::vector<double> q(p.begin(), p.end());
            for (int a = 0; a < k; ++a) q[a] += y[a];
            return std::abs(kernel.eval(p) - kernel.eval(q));
        };
        CompensatedSum s;
        if (k == 1) {
            for (double sign : {-1.0, 1.0}) {
                s.add(gauss_panel([&](double r) {
                          double p[1] = {sign * r};
                          return diff(p);
                      }, R, 2 * R, g) * 1.0);
            }
        } else {
            const int nth = 64;
            for (int j = 0; j < nth; ++j) {
                double a0 = 2 * pi * j / nth, a1 = 2 * pi * (j + 1) / nth;
                s.add(gauss_panel([&](double th) {
                          return gauss_panel([&](double r) {
                              double p[2] = {r * std::cos(th), r * std::sin(th)};
                              return r * diff(p);
                          }, R, 2 * R, g);
                      }, a0, a1, g));
            }
        }
        double den = kernel.omega(t);
        if (s.value() > 0) rep.annular_ratio = std::max(rep.annular_ratio, den > 0 ? s.value() / den : std::numeric_limits<double>::infinity());
    }
    rep.pointwise_holds = rep.pointwise_ratio <= 1 + 1e-12;
    rep.annular_holds = rep.annular_ratio <= rep.annulus_volume * (1 + 1e-9);
    rep.implication_consistent = !rep.pointwise_holds || rep.annular_ratio <= rep.annulus_volume * rep.pointwise_ratio * (1 + 1e-9) + 1e-300;
    return rep;
}

}  // namespace jumpkit
