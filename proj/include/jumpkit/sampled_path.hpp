#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "jumpkit/dyadic.hpp"

namespace jumpkit {

using cplx = std::complex<double>;

// Values of f(t) along a strictly increasing grid of nonnegative dyadic times.
class SampledPath {
public:
    SampledPath(std::vector<DyadicTime> times, std::vector<cplx> values);

    // Times 1, 2, ..., n.
    static SampledPath on_integers(std::vector<cplx> values);
    static SampledPath on_integers(const std::vector<double>& values);

    std::size_t size() const { return values_.size(); }
    const std::vector<DyadicTime>& times() const { return times_; }
    std::span<const cplx> values() const { return values_; }

    SampledPath restrict_to(const std::function<bool(const DyadicTime&)>& keep) const;

private:
    SampledPath() = default;
    std::vector<DyadicTime> times_;
    std::vector<cplx> values_;
};

struct Breakpoint {
    double magnitude;
    int count;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// The step function lambda -> N_lambda, stored at its right-closed breakpoints.
class JumpProfile {
public:
    JumpProfile() = default;
    explicit JumpProfile(std::vector<Breakpoint> breakpoints);

    const std::vector<Breakpoint>& breakpoints() const { return bps_; }
    bool empty() const { return bps_.empty(); }

    int count_at(double lambda) const;
    // sup over lambda of lambda * N_lambda^{1/2}.
    double sup_scaled() const;

    friend bool operator==(const JumpProfile&, const JumpProfile&) = default;

private:
    std::vector<Breakpoint> bps_;
};

struct Atom {
    double weight;
    SampledPath path;
};

class FieldOfPaths {
public:
    explicit FieldOfPaths(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

private:
    std::vector<Atom> atoms_;
};

}  // namespace jumpkit
