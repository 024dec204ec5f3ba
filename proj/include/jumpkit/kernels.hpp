#pragma once

// Hot loops with a serial reference and an OpenMP variant. Both variants partition work into
// the same fixed blocks and combine block results in block order, so outputs are bitwise equal.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jumpkit/sampled_path.hpp"
#include "jumpkit/variation.hpp"

namespace jumpkit::kernels {

enum class Exec { serial, parallel };

inline constexpr std::size_t block_size = 4096;

// Periodic centered moving average of width 2*radius+1 along one axis of a row-major M^d array.
template <class T>
void box_filter_axis(std::span<const T> in, std::span<T> out, int d, int M, int axis, int radius, Exec exec);

// Sum of |v|^p over blocks of block_size with compensated partial sums.
double blocked_pow_sum(std::span<const double> v, double p, Exec exec);

struct JumpEvent {
    double magnitude;
    std::uint32_t point;
    std::uint16_t hi;  // N just at and below this magnitude
    std::uint16_t lo;  // N just above it
};

// Breakpoint events for npoints real paths of length len stored row-major.
std::vector<JumpEvent> collect_jump_events(std::span<const double> values, std::size_t len, Exec exec);

// Orders events by magnitude descending, then point ascending (stable radix sort).
void sort_jump_events(std::vector<JumpEvent>& events);
// Same seminorm as seminorm_from_profiles; sorts the events in place. Empty weights means unit weights.
SeminormResult seminorm_from_events(std::vector<JumpEvent>& events, std::span<const double> weights, double p);

// Events grouped by the leading bits of their magnitude. Buckets are sorted on first use, so a
// seminorm scan that stops early never sorts the small-magnitude tail. Results match seminorm_from_events.
class JumpEventIndex {
public:
    explicit JumpEventIndex(std::vector<JumpEvent> events);
    SeminormResult seminorm(std::span<const double> weights, double p);
    std::size_t size() const { return events_.size(); }

private:
    std::vector<JumpEvent> events_;
    std::vector<std::size_t> start_;  // bucket b holds events_[start_[b], start_[b+1])
    std::vector<char> sorted_;
};

struct MaxResult {
    double value = 0;
    std::size_t index = 0;
};

// max_i f(i) over [0, n); ties resolve to the smallest index.
template <class F>
MaxResult grid_max(std::size_t n, F&& f, Exec exec) {
    const std::size_t nb = (n + block_size - 1) / block_size;
    std::vector<MaxResult> part(nb);
    auto run_block = [&](std::size_t b) {
        MaxResult m{-infinity, b * block_size};
        for (std::size_t i = b * block_size; i < std::min(n, (b + 1) * block_size); ++i) {
            double v = f(i);
            if (v > m.value) m = {v, i};
        }
        part[b] = m;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t b = 0; b < nb; ++b) run_block(b);
    } else {
        for (std::size_t b = 0; b < nb; ++b) run_block(b);
    }
    MaxResult best{-infinity, 0};
    for (const auto& m : part)
        if (m.value > best.value) best = m;
    return best;
}

// Runs f(shard) for every shard; results are stored by shard index.
template <class R, class F>
std::vector<R> run_shards(std::size_t shards, F&& f, Exec exec) {
    std::vector<R> out(shards);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t s = 0; s < shards; ++s) out[s] = f(s);
    } else {
        for (std::size_t s = 0; s < shards; ++s) out[s] = f(s);
    }
    return out;
}

}  // namespace jumpkit::kernels
