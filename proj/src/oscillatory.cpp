#include "jumpkit/oscillatory.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jumpkit/errors.hpp"
#include "jumpkit/quadrature.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit {

using std::numbers::pi;
using Piece = AmplitudeSpec::Piece;

namespace {

double eval_pieces(const std::vector<Piece>& f, double x, bool from_left) {
    for (const auto& p : f) {
        bool in = from_left ? (p.x0 < x && x <= p.x1) : (p.x0 <= x && x < p.x1);
        if (in) return p.v0 + (p.v1 - p.v0) * (x - p.x0) / (p.x1 - p.x0);
    }
    return 0.0;
}

// int_a^b |alpha f(x) - beta f(x - y)| dx, exact for piecewise-linear f.
double abs_combo(const std::vector<Piece>& f, double alpha, double beta, double y, double a, double b) {
    if (!(b > a)) return 0.0;
    std::vector<double> k{a, b};
    for (const auto& p : f)
        for (double x : {p.x0, p.x1})
            for (double z : {x, x + y})
                if (z > a && z < b) k.push_back(z);
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    CompensatedSum s;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        double u = k[i], v = k[i + 1], L = v - u;
        double gu = alpha * eval_pieces(f, u, false) - beta * eval_pieces(f, u - y, false);
        double gv = alpha * eval_pieces(f, v, true) - beta * eval_pieces(f, v - y, true);
        if (gu * gv >= 0)
            s.add(L * (std::fabs(gu) + std::fabs(gv)) / 2);
        else
            s.add(L * (gu * gu + gv * gv) / (2 * (std::fabs(gu) + std::fabs(gv))));
    }
    return s.value();
}

double pieces_lo(const std::vector<Piece>& f) { return f.empty() ? 0.0 : f.front().x0; }
double pieces_hi(const std::vector<Piece>& f) { return f.empty() ? 0.0 : f.back().x1; }

void check_pieces(const std::vector<Piece>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        require(f[i].x1 > f[i].x0, "amplitude pieces must have positive length");
        require(std::isfinite(f[i].v0) && std::isfinite(f[i].v1), "amplitude values must be finite");
        if (i > 0) require(f[i].x0 >= f[i - 1].x1, "amplitude pieces must be sorted and disjoint");
    }
}

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

AmplitudeSpec AmplitudeSpec::zero(int k) {
    require(k == 1 || k == 2, "amplitudes support k <= 2");
    AmplitudeSpec a;
    a.kind_ = "zero";
    a.factors_.assign(k, {});
    return a;
}

AmplitudeSpec AmplitudeSpec::indicator(double lo, double hi) {
    require(lo < hi, "indicator needs lo < hi");
    AmplitudeSpec a;
    a.kind_ = "indicator";
    a.factors_ = {{{lo, hi, 1.0, 1.0}}};
    return a;
}

AmplitudeSpec AmplitudeSpec::hat(double lo, double hi) {
    require(lo < hi, "hat needs lo < hi");
    double m = 0.5 * (lo + hi);
    AmplitudeSpec a;
    a.kind_ = "hat";
    a.factors_ = {{{lo, m, 0.0, 1.0}, {m, hi, 1.0, 0.0}}};
    return a;
}

AmplitudeSpec AmplitudeSpec::step_table(std::vector<double> breaks, std::vector<double> values) {
    require(breaks.size() >= 2 && values.size() + 1 == breaks.size(), "step table needs n+1 breaks for n values");
    AmplitudeSpec a;
    a.kind_ = "step-table";
    std::vector<Piece> f;
    for (std::size_t i = 0; i < values.size(); ++i) f.push_back({breaks[i], breaks[i + 1], values[i], values[i]});
    check_pieces(f);
    a.factors_ = {f};
    return a;
}

AmplitudeSpec AmplitudeSpec::sampled(double lo, double hi, std::vector<double> samples) {
    require(lo < hi && samples.size() >= 2, "sampled amplitude needs lo < hi and two samples");
    AmplitudeSpec a;
    a.kind_ = "sampled";
    std::vector<Piece> f;
    const double n = double(samples.size() - 1);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        f.push_back({lo + (hi - lo) * i / n, lo + (hi - lo) * (i + 1) / n, samples[i], samples[i + 1]});
    check_pieces(f);
    a.factors_ = {f};
    return a;
}

AmplitudeSpec AmplitudeSpec::box(double lo0, double hi0, double lo1, double hi1) {
    require(lo0 < hi0 && lo1 < hi1, "box needs lo < hi on both axes");
    AmplitudeSpec a;
    a.kind_ = "indicator";
    a.factors_ = {{{lo0, hi0, 1.0, 1.0}}, {{lo1, hi1, 1.0, 1.0}}};
    return a;
}

AmplitudeSpec AmplitudeSpec::tensor_hat(double lo0, double hi0, double lo1, double hi1) {
    AmplitudeSpec a;
    a.kind_ = "hat";
    a.factors_ = {hat(lo0, hi0).factors_[0], hat(lo1, hi1).factors_[0]};
    return a;
}

bool AmplitudeSpec::is_zero() const {
    for (const auto& f : factors_) {
        bool z = true;
        for (const auto& p : f)
            if (p.v0 != 0 || p.v1 != 0) z = false;
        if (z) return true;
    }
    return false;
}

double AmplitudeSpec::factor_value(int axis, double x) const { return eval_pieces(factors_[axis], x, false); }

double AmplitudeSpec::value(const double* x) const {
    double v = 1;
    for (int a = 0; a < dim(); ++a) v *= factor_value(a, x[a]);
    return v;
}

double AmplitudeSpec::lo(int axis) const { return pieces_lo(factors_[axis]); }
double AmplitudeSpec::hi(int axis) const { return pieces_hi(factors_[axis]); }

std::vector<double> AmplitudeSpec::knots(int axis) const {
    std::vector<double> k;
    for (const auto& p : factors_[axis]) {
        k.push_back(p.x0);
        k.push_back(p.x1);
    }
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
}

double AmplitudeSpec::l1_norm() const {
    double v = 1;
    for (const auto& f : factors_) v *= abs_combo(f, 1, 0, 0, pieces_lo(f), pieces_hi(f));
    return v;
}

double AmplitudeSpec::abs_integral(double a, double b) const {
    require(dim() == 1, "abs_integral is for k = 1");
    return abs_combo(factors_[0], 1, 0, 0, a, b);
}

double AmplitudeSpec::shift_difference(double y, double a, double b) const {
    require(dim() == 1, "interval shift difference is for k = 1");
    return abs_combo(factors_[0], 1, 1, y, a, b);
}

bool AmplitudeSpec::shift_difference_exact() const { return dim() == 1 || kind_ != "hat"; }

double AmplitudeSpec::shift_difference(const double* v) const {
    if (dim() == 1) {
        const auto& f = factors_[0];
        return abs_combo(f, 1, 1, v[0], std::min(pieces_lo(f), pieces_lo(f) + v[0]),
                         std::max(pieces_hi(f), pieces_hi(f) + v[0]));
    }
    if (is_zero()) return 0.0;
    if (kind_ == "indicator") {
        double area = 1, overlap = 1;
        for (int a = 0; a < 2; ++a) {
            double L = hi(a) - lo(a);
            area *= L;
            overlap *= std::max(0.0, L - std::fabs(v[a]));
        }
        return 2 * (area - overlap);
    }
    // tensor amplitude: exact inner integral in x_1, panel quadrature in x_0
    const auto& f0 = factors_[0];
    const auto& f1 = factors_[1];
    std::vector<double> cuts;
    for (double k : knots(0)) {
        cuts.push_back(k);
        cuts.push_back(k + v[0]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const GaussRule& g = gauss_rule(16);
    const double ylo = std::min(pieces_lo(f1), pieces_lo(f1) + v[1]);
    const double yhi = std::max(pieces_hi(f1), pieces_hi(f1) + v[1]);
    CompensatedSum s;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const int panels = 8;
        for (int p = 0; p < panels; ++p) {
            double l = cuts[i] + (cuts[i + 1] - cuts[i]) * p / panels;
            double r = cuts[i] + (cuts[i + 1] - cuts[i]) * (p + 1) / panels;
            s.add(gauss_panel(
                [&](double x0) {
                    double a = eval_pieces(f0, x0, false), b = eval_pieces(f0, x0 - v[0], false);
                    return abs_combo(f1, a, b, v[1], ylo, yhi);
                },
                l, r, g));
        }
    }
    return s.value();
}

AmplitudeSpec AmplitudeSpec::rescaled(double c) const {
    require(c > 0, "rescale factor must be positive");
    AmplitudeSpec a = *this;
    for (auto& f : a.factors_)
        for (auto& p : f) {
            p.x0 /= c;
            p.x1 /= c;
        }
    return a;
}

PhaseSpec PhaseSpec::monomial(double lambda, int k, double a, double b) {
    require(lambda > 0 && std::isfinite(lambda), "monomial phase needs lambda > 0");
    require(k >= 1, "derivative order must be >= 1");
    require(a < b, "phase domain needs a < b");
    PhaseSpec p;
    p.vars_ = 1;
    p.terms_ = {{{k}, lambda / factorial(k)}};
    p.lambda_ = lambda;
    p.order_ = k;
    p.a_ = a;
    p.b_ = b;
    return p;
}

PhaseSpec PhaseSpec::polynomial_1d(std::vector<double> coeffs, int k, double lambda, double a, double b) {
    require(lambda > 0 && k >= 1 && a < b, "1-d phase needs lambda > 0, k >= 1, a < b");
    PhaseSpec p;
    p.vars_ = 1;
    for (std::size_t j = 1; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) p.terms_.push_back({{static_cast<int>(j)}, coeffs[j]});
    p.lambda_ = lambda;
    p.order_ = k;
    p.a_ = a;
    p.b_ = b;
    auto deriv = [&](int order, double x) {
        double s = 0;
        for (const auto& t : p.terms_) {
            int e = t.alpha[0];
            if (e < order) continue;
            double c = t.coeff;
            for (int i = 0; i < order; ++i) c *= e - i;
            s += c * std::pow(x, e - order);
        }
        return s;
    };
    double sign2 = 0;
    for (int i = 0; i <= 256; ++i) {
        double x = a + (b - a) * i / 256.0;
        require(std::fabs(deriv(k, x)) >= lambda * (1 - 1e-12), "phase violates |phi^(k)| >= lambda");
        if (k == 1) {
            double s2 = deriv(2, x);
            if (s2 != 0) {
                require(sign2 == 0 || (s2 > 0) == (sign2 > 0), "k = 1 needs a monotone phi'");
                sign2 = s2;
            }
        }
    }
    return p;
}

PhaseSpec PhaseSpec::polynomial(int vars, std::vector<Term> terms) {
    require(vars == 1 || vars == 2, "phases support k <= 2 variables");
    PhaseSpec p;
    p.vars_ = vars;
    for (auto& t : terms) {
        require(static_cast<int>(t.alpha.size()) == vars, "multi-index length differs from k");
        int s = 0;
        for (int e : t.alpha) {
            require(e >= 0, "multi-index entries must be nonnegative");
            s += e;
        }
        require(std::isfinite(t.coeff), "coefficients must be finite");
        if (s >= 1 && t.coeff != 0) p.terms_.push_back(t);
    }
    return p;
}

int PhaseSpec::degree() const {
    int d = 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (int e : t.alpha) s += e;
        d = std::max(d, s);
    }
    return d;
}

double PhaseSpec::value(const double* x) const {
    double s = 0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (int a = 0; a < vars_; ++a) v *= std::pow(x[a], t.alpha[a]);
        s += v;
    }
    return s;
}

double PhaseSpec::partial(int axis, const double* x) const {
    double s = 0;
    for (const auto& t : terms_) {
        if (t.alpha[axis] == 0) continue;
        double v = t.coeff * t.alpha[axis];
        for (int a = 0; a < vars_; ++a) v *= std::pow(x[a], t.alpha[a] - (a == axis ? 1 : 0));
        s += v;
    }
    return s;
}

double PhaseSpec::partial_bound(int axis, const double* lo, const double* hi) const {
    double s = 0;
    for (const auto& t : terms_) {
        if (t.alpha[axis] == 0) continue;
        double v = std::fabs(t.coeff) * t.alpha[axis];
        for (int a = 0; a < vars_; ++a)
            v *= std::pow(std::max(std::fabs(lo[a]), std::fabs(hi[a])), t.alpha[a] - (a == axis ? 1 : 0));
        s += v;
    }
    return s;
}

double PhaseSpec::big_lambda(double R) const {
    double s = 0;
    for (const auto& t : terms_) {
        int deg = 0;
        for (int e : t.alpha) deg += e;
        s += std::pow(R, deg) * std::fabs(t.coeff);
    }
    return s;
}

bool PhaseSpec::separable() const {
    for (const auto& t : terms_) {
        int nz = 0;
        for (int e : t.alpha) nz += e > 0;
        if (nz > 1) return false;
    }
    return true;
}

PhaseSpec PhaseSpec::rescaled(double R) const {
    PhaseSpec p = *this;
    for (auto& t : p.terms_) {
        int deg = 0;
        for (int e : t.alpha) deg += e;
        t.coeff *= std::pow(R, deg);
    }
    return p;
}

namespace {

constexpr double lhs_tol = 1e-12;

cplx integral_1d(const PhaseSpec& phase, int axis, const AmplitudeSpec& psi, int psi_axis, double a, double b,
                 double* err) {
    if (!(b > a)) return 0.0;
    std::vector<double> cuts{a, b};
    for (double k : psi.knots(psi_axis))
        if (k > a && k < b) cuts.push_back(k);
    // restrict the phase to x_axis with other variables at 0
    auto phi = [&](double x) {
        double p[2] = {0, 0};
        p[axis] = x;
        return phase.value(p);
    };
    auto inc = [&](double l, double r) {
        double lo[2] = {0, 0}, hi[2] = {0, 0};
        lo[axis] = l;
        hi[axis] = r;
        return phase.partial_bound(axis, lo, hi) * (r - l);
    };
    OscillatoryOptions opt;
    opt.tol = lhs_tol;
    auto res = integrate_oscillatory([&](double x) { return std::polar(1.0, phi(x)) * psi.factor_value(psi_axis, x); },
                                     inc, cuts, opt);
    if (err) *err += res.error;
    return res.value;
}

double lhs_on(const PhaseSpec& phase, const AmplitudeSpec& psi, double a, double b, double* error) {
    double err = 0;
    double v = std::abs(integral_1d(phase, 0, psi, 0, a, b, &err));
    if (error) *error = err;
    return v;
}

}  // namespace

double oscillatory_lhs(const PhaseSpec& phase, const AmplitudeSpec& psi, double* error) {
    require(phase.vars() == psi.dim(), "phase and amplitude dimensions differ");
    if (psi.is_zero()) {
        if (error) *error = 0;
        return 0.0;
    }
    if (psi.dim() == 1) return lhs_on(phase, psi, psi.lo(0), psi.hi(0), error);
    double err = 0;
    if (phase.separable()) {
        PhaseSpec p0 = PhaseSpec::polynomial(2, {}), p1 = PhaseSpec::polynomial(2, {});
        std::vector<PhaseSpec::Term> t0, t1;
        for (const auto& t : phase.terms()) (t.alpha[0] > 0 ? t0 : t1).push_back(t);
        p0 = PhaseSpec::polynomial(2, t0);
        p1 = PhaseSpec::polynomial(2, t1);
        cplx i0 = integral_1d(p0, 0, psi, 0, psi.lo(0), psi.hi(0), &err);
        cplx i1 = integral_1d(p1, 1, psi, 1, psi.lo(1), psi.hi(1), &err);
        if (error) *error = err * (std::abs(i0) + std::abs(i1) + 1);
        return std::abs(i0 * i1);
    }
    // iterated quadrature: inner oscillatory integral in x_1 for every outer node in x_0
    std::vector<double> cuts{psi.lo(0), psi.hi(0)};
    for (double k : psi.knots(0)) cuts.push_back(k);
    const double lo[2] = {psi.lo(0), psi.lo(1)}, hi[2] = {psi.hi(0), psi.hi(1)};
    auto inner = [&](double x0) {
        std::vector<double> c1{psi.lo(1), psi.hi(1)};
        for (double k : psi.knots(1)) c1.push_back(k);
        auto inc = [&](double l, double r) {
            double a[2] = {x0, l}, b[2] = {x0, r};
            return phase.partial_bound(1, a, b) * (r - l);
        };
        OscillatoryOptions opt;
        opt.tol = lhs_tol;
        auto res = integrate_oscillatory(
            [&](double x1) {
                double x[2] = {x0, x1};
                return std::polar(1.0, phase.value(x)) * psi.factor_value(1, x1);
            },
            inc, c1, opt);
        return res.value * psi.factor_value(0, x0);
    };
    OscillatoryOptions opt;
    opt.tol = lhs_tol;
    auto res = integrate_oscillatory(
        inner, [&](double l, double r) {
            double a[2] = {l, lo[1]}, b[2] = {r, hi[1]};
            return phase.partial_bound(0, a, b) * (r - l);
        },
        cuts, opt);
    if (error) *error = res.error;
    return std::abs(res.value);
}

double VdcOneDim::ratio() const {
    double den = rhs_window + rhs_smoothness;
    return den > 0 ? lhs / den : (lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
}

double VdcMultiDim::ratio() const {
    return rhs > 0 ? lhs / rhs : (lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
}

VdcOneDim vdc_1d(const PhaseSpec& phase, const AmplitudeSpec& psi) {
    require(phase.vars() == 1 && psi.dim() == 1, "vdc_1d needs a 1-d phase and amplitude");
    require(phase.order() >= 1 && phase.lambda() > 0, "phase carries no derivative lower bound");
    const double a = phase.a(), b = phase.b();
    VdcOneDim r;
    if (psi.is_zero()) return r;
    const double delta = std::pow(phase.lambda(), -1.0 / phase.order());

    r.lhs = lhs_on(phase, psi, std::max(a, psi.lo(0)), std::min(b, psi.hi(0)), &r.lhs_error);
    if (r.lhs > psi.abs_integral(a, b) + 1e-10) throw NumericFailure("oscillatory integral exceeds int |psi|");

    double w = std::numeric_limits<double>::infinity();
    const int grid = 129;
    for (int i = 0; i <= grid; ++i) {
        double x = a + (b - a) * i / grid;
        w = std::min(w, psi.abs_integral(x - delta, x + delta));
    }
    r.rhs_window = w;

    std::vector<double> cuts{-delta, 0.0, delta};
    auto kn = psi.knots(0);
    for (double xi : kn) {
        for (double e : {a, b}) {
            cuts.push_back(e - xi);
            cuts.push_back(xi - e);
        }
        for (double xj : kn) cuts.push_back(xi - xj);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    CompensatedSum s;
    using boost::math::quadrature::gauss_kronrod;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double l = std::max(cuts[i], -delta), h = std::min(cuts[i + 1], delta);
        if (!(h > l)) continue;
        s.add(gauss_kronrod<double, 31>::integrate([&](double y) { return psi.shift_difference(y, a, b); }, l, h, 10,
                                                   1e-13));
    }
    r.rhs_smoothness = s.value() / delta;
    return r;
}

VdcMultiDim vdc_multidim(const PhaseSpec& phase, const AmplitudeSpec& psi, double R, int directions, int radii) {
    require(phase.vars() == psi.dim(), "phase and amplitude dimensions differ");
    require(psi.dim() <= 2, "vdc_multidim supports k <= 2");
    require(R > 0 && std::isfinite(R), "R must be positive");
    VdcMultiDim r;
    r.Lambda = phase.big_lambda(R);
    require(r.Lambda > 0, "Lambda must be positive");
    // support within the closed ball B(0, R/2)
    const int k = psi.dim();
    for (int corner = 0; corner < (1 << k); ++corner) {
        double s = 0;
        for (int a = 0; a < k; ++a) {
            double x = (corner >> a) & 1 ? psi.hi(a) : psi.lo(a);
            s += x * x;
        }
        if (!psi.is_zero()) require(std::sqrt(s) <= R / 2 * (1 + 1e-12), "amplitude support leaves B(0, R/2)");
    }
    if (psi.is_zero()) return r;
    r.lhs = oscillatory_lhs(phase, psi, &r.lhs_error);
    if (r.lhs > psi.l1_norm() + 1e-10) throw NumericFailure("oscillatory integral exceeds int |psi|");
    const double rho = R * std::pow(r.Lambda, -1.0 / phase.degree());
    r.rhs_exact = psi.shift_difference_exact();
    double best = 0;
    const int ndir = k == 1 ? 2 : directions;
    for (int j = 0; j < ndir; ++j) {
        double u[2];
        if (k == 1) {
            u[0] = j == 0 ? 1 : -1;
        } else {
            u[0] = std::cos(2 * pi * j / ndir);
            u[1] = std::sin(2 * pi * j / ndir);
        }
        for (int i = 1; i <= radii; ++i) {
            double v[2] = {rho * i / radii * u[0], k == 2 ? rho * i / radii * u[1] : 0.0};
            best = std::max(best, psi.shift_difference(v));
        }
    }
    r.rhs = best;
    return r;
}

}  // namespace jumpkit
