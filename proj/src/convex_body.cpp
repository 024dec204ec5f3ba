#include "jumpkit/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "jumpkit/errors.hpp"

namespace jumpkit {

double lq_norm(std::span<const double> x, double q) {
    if (std::isinf(q)) {
        double m = 0;
        for (double v : x) m = std::max(m, std::fabs(v));
        return m;
    }
    if (q == 2) {
        double s = 0;
        for (double v : x) s += v * v;
        return std::sqrt(s);
    }
    if (q == 1) {
        double s = 0;
        for (double v : x) s += std::fabs(v);
        return s;
    }
    // scale by the max entry to avoid overflow
    double m = 0;
    for (double v : x) m = std::max(m, std::fabs(v));
    if (m == 0) return 0;
    double s = 0;
    for (double v : x) s += std::pow(std::fabs(v) / m, q);
    return m * std::pow(s, 1 / q);
}

ConvexBodySpec ConvexBodySpec::lq_ball(int d, double q) {
    require(d >= 1, "body dimension must be positive");
    require(q >= 1, "l^q ball needs q >= 1");
    ConvexBodySpec b;
    b.kind_ = Kind::lq_ball;
    b.d_ = d;
    b.q_ = q;
    b.c_.assign(d, 0.0);
    return b;
}

ConvexBodySpec ConvexBodySpec::box(std::vector<double> half_widths, std::vector<double> center) {
    require(!half_widths.empty(), "box needs at least one axis");
    for (double w : half_widths) require(w > 0 && std::isfinite(w), "box half-widths must be positive");
    if (center.empty()) center.assign(half_widths.size(), 0.0);
    require(center.size() == half_widths.size(), "box center has the wrong dimension");
    ConvexBodySpec b;
    b.kind_ = Kind::box;
    b.d_ = static_cast<int>(half_widths.size());
    b.q_ = std::numeric_limits<double>::infinity();
    b.w_ = std::move(half_widths);
    b.c_ = std::move(center);
    return b;
}

bool ConvexBodySpec::symmetric() const {
    return std::all_of(c_.begin(), c_.end(), [](double v) { return v == 0; });
}

std::string ConvexBodySpec::label() const {
    std::ostringstream os;
    if (kind_ == Kind::lq_ball) {
        os << "l" << (std::isinf(q_) ? std::string("inf") : (std::ostringstream() << q_).str()) << "-ball";
    } else {
        os << "box";
        for (double w : w_) os << ":" << w;
        if (!symmetric()) {
            os << "@";
            for (double c : c_) os << ":" << c;
        }
    }
    os << "-d" << d_;
    return os.str();
}

bool ConvexBodySpec::contains(std::span<const double> x) const {
    if (kind_ == Kind::lq_ball) return lq_norm(x, q_) < 1;
    for (int i = 0; i < d_; ++i)
        if (std::fabs(x[i] - c_[i]) >= w_[i]) return false;
    return true;
}

double ConvexBodySpec::volume() const {
    if (kind_ == Kind::box) {
        double v = 1;
        for (double w : w_) v *= 2 * w;
        return v;
    }
    if (std::isinf(q_)) return std::ldexp(1.0, d_);
    return std::exp(d_ * std::log(2 * std::tgamma(1 + 1 / q_)) - std::lgamma(1 + d_ / q_));
}

double ConvexBodySpec::circumradius() const {
    if (kind_ == Kind::box) {
        double s = 0;
        for (int i = 0; i < d_; ++i) {
            double m = std::fabs(c_[i]) + w_[i];
            s += m * m;
        }
        return std::sqrt(s);
    }
    if (q_ <= 2) return 1.0;
    if (std::isinf(q_)) return std::sqrt(double(d_));
    return std::pow(double(d_), 0.5 - 1 / q_);
}

double ConvexBodySpec::diameter() const {
    if (kind_ == Kind::box) {
        double s = 0;
        for (double w : w_) s += 4 * w * w;
        return std::sqrt(s);
    }
    return 2 * circumradius();
}

double ConvexBodySpec::radial(std::span<const double> u) const {
    if (kind_ == Kind::lq_ball) return 1 / lq_norm(u, q_);
    double t = std::numeric_limits<double>::infinity();
    for (int i = 0; i < d_; ++i) {
        require(std::fabs(c_[i]) < w_[i], "radial function needs the origin inside the body");
        if (u[i] > 0) t = std::min(t, (c_[i] + w_[i]) / u[i]);
        if (u[i] < 0) t = std::min(t, (c_[i] - w_[i]) / u[i]);
    }
    return t;
}

namespace {

// Euclidean projection onto the unit l^1 ball (sort-based).
double distance_to_l1_ball(std::span<const double> x) {
    std::vector<double> u(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) u[i] = std::fabs(x[i]);
    std::vector<double> s = u;
    std::sort(s.begin(), s.end(), std::greater<>());
    double cum = 0, theta = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        cum += s[j];
        double th = (cum - 1) / double(j + 1);
        if (s[j] - th > 0) theta = th;
    }
    double d2 = 0;
    for (double v : u) {
        double diff = v - std::max(v - theta, 0.0);
        d2 += diff * diff;
    }
    return std::sqrt(d2);
}

double box_distance(std::span<const double> x, std::span<const double> c, std::span<const double> w) {
    bool inside = true;
    double out2 = 0, in = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
        double a = std::fabs(x[i] - c[i]) - w[i];
        if (a >= 0) inside = false;
        out2 += a > 0 ? a * a : 0.0;
        in = std::min(in, -a);
    }
    return inside ? in : std::sqrt(out2);
}

}  // namespace

ConvexBodySpec::Distance ConvexBodySpec::boundary_distance(std::span<const double> x) const {
    if (kind_ == Kind::box) return {box_distance(x, c_, w_), true};
    if (std::isinf(q_)) {
        std::vector<double> ones(d_, 1.0);
        return {box_distance(x, c_, ones), true};
    }
    double n = lq_norm(x, q_);
    if (q_ == 2) return {std::fabs(n - 1), true};
    if (q_ == 1) {
        if (n < 1) return {(1 - n) / std::sqrt(double(d_)), true};
        return {distance_to_l1_ball(x), true};
    }
    double e = lq_norm(x, 2);
    if (n == 0) return {std::min(1.0, std::pow(double(d_), 0.5 - 1 / q_)), false};
    return {e * std::fabs(1 / n - 1), false};
}

void ConvexBodySpec::bounding_box(std::vector<double>& lo, std::vector<double>& hi) const {
    lo.resize(d_);
    hi.resize(d_);
    for (int i = 0; i < d_; ++i) {
        double w = kind_ == Kind::box ? w_[i] : 1.0;
        lo[i] = c_[i] - w;
        hi[i] = c_[i] + w;
    }
}

}  // namespace jumpkit
