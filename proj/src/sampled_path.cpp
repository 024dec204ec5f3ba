#include "jumpkit/sampled_path.hpp"

#include <algorithm>
#include <cmath>

#include "jumpkit/errors.hpp"

namespace jumpkit {

SampledPath::SampledPath(std::vector<DyadicTime> times, std::vector<cplx> values)
    : times_(std::move(times)), values_(std::move(values)) {
    require(!values_.empty(), "path must have at least one sample");
    require(times_.size() == values_.size(), "times and values differ in length");
    require(times_.front().numerator() >= 0, "path times must be nonnegative");
    for (std::size_t i = 1; i < times_.size(); ++i)
        require(times_[i - 1] < times_[i], "path times must be strictly increasing");
    for (const auto& v : values_)
        require(std::isfinite(v.real()) && std::isfinite(v.imag()), "path values must be finite");
}

SampledPath SampledPath::on_integers(std::vector<cplx> values) {
    std::vector<DyadicTime> t;
    t.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) t.emplace_back(static_cast<std::int64_t>(i + 1));
    return SampledPath(std::move(t), std::move(values));
}

SampledPath SampledPath::on_integers(const std::vector<double>& values) {
    return on_integers(std::vector<cplx>(values.begin(), values.end()));
}

SampledPath SampledPath::restrict_to(const std::function<bool(const DyadicTime&)>& keep) const {
    SampledPath out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (keep(times_[i])) {
            out.times_.push_back(times_[i]);
            out.values_.push_back(values_[i]);
        }
    }
    return out;
}

JumpProfile::JumpProfile(std::vector<Breakpoint> breakpoints) : bps_(std::move(breakpoints)) {
    for (std::size_t i = 0; i < bps_.size(); ++i) {
        require(bps_[i].magnitude > 0 && bps_[i].count > 0, "breakpoints must be positive");
        if (i > 0)
            require(bps_[i - 1].magnitude < bps_[i].magnitude && bps_[i - 1].count > bps_[i].count,
                    "breakpoints must increase in magnitude and decrease in count");
    }
}

int JumpProfile::count_at(double lambda) const {
    auto it = std::lower_bound(bps_.begin(), bps_.end(), lambda,
                               [](const Breakpoint& b, double l) { return b.magnitude < l; });
    return it == bps_.end() ? 0 : it->count;
}

double JumpProfile::sup_scaled() const {
    double best = 0;
    for (const auto& b : bps_) best = std::max(best, b.magnitude * std::sqrt(double(b.count)));
    return best;
}

FieldOfPaths::FieldOfPaths(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) {
        require(a.weight > 0 && std::isfinite(a.weight), "atom weights must be positive and finite");
        require(a.path.times() == atoms_.front().path.times(), "atoms must share one time grid");
    }
}

}  // namespace jumpkit
