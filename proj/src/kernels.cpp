#include "jumpkit/kernels.hpp"

#include <bit>
#include <cmath>

#include "jumpkit/errors.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit::kernels {

template <class T>
void box_filter_axis(std::span<const T> in, std::span<T> out, int d, int M, int axis, int radius, Exec exec) {
    require(axis >= 0 && axis < d, "axis out of range");
    require(2 * radius + 1 <= M, "window wider than the period");
    std::size_t stride = 1;
    for (int a = axis + 1; a < d; ++a) stride *= static_cast<std::size_t>(M);
    const std::size_t total = in.size();
    const double inv = 1.0 / (2 * radius + 1);

    if (stride == 1) {
        const std::size_t lines = total / static_cast<std::size_t>(M);
        auto run_line = [&](std::size_t line, std::vector<T>& buf) {
            std::size_t base = line * M;
            for (int i = 0; i < M; ++i) buf[i] = in[base + i];
            T s{};
            for (int o = -radius; o <= radius; ++o) s += buf[(o + M) % M];
            for (int i = 0; i < M; ++i) {
                out[base + i] = s * inv;
                s += buf[(i + radius + 1) % M];
                s -= buf[(i - radius + M) % M];
            }
        };
        if (exec == Exec::parallel) {
#pragma omp parallel
            {
                std::vector<T> buf(M);
#pragma omp for schedule(static)
                for (std::size_t l = 0; l < lines; ++l) run_line(l, buf);
            }
        } else {
            std::vector<T> buf(M);
            for (std::size_t l = 0; l < lines; ++l) run_line(l, buf);
        }
        return;
    }

    // Strided axis: the same sliding sums, carried for a contiguous chunk of lines at once.
    const std::size_t chunk = std::min<std::size_t>(stride, 1024);
    const std::size_t chunks_per_outer = (stride + chunk - 1) / chunk;
    const std::size_t outers = total / (stride * M);
    const std::size_t items = outers * chunks_per_outer;
    auto run_item = [&](std::size_t item, std::vector<T>& acc) {
        std::size_t outer = item / chunks_per_outer, c0 = (item % chunks_per_outer) * chunk;
        std::size_t len = std::min(chunk, stride - c0);
        const T* row0 = in.data() + outer * stride * M + c0;
        T* out0 = out.data() + outer * stride * M + c0;
        auto row = [&](int i) { return row0 + static_cast<std::size_t>(i) * stride; };
        std::fill(acc.begin(), acc.begin() + len, T{});
        for (int o = -radius; o <= radius; ++o) {
            const T* r = row((o + M) % M);
            for (std::size_t k = 0; k < len; ++k) acc[k] += r[k];
        }
        for (int i = 0; i < M; ++i) {
            T* dst = out0 + static_cast<std::size_t>(i) * stride;
            const T* add = row((i + radius + 1) % M);
            const T* sub = row((i - radius + M) % M);
            for (std::size_t k = 0; k < len; ++k) {
                dst[k] = acc[k] * inv;
                acc[k] += add[k];
                acc[k] -= sub[k];
            }
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            std::vector<T> acc(chunk);
#pragma omp for schedule(static)
            for (std::size_t it = 0; it < items; ++it) run_item(it, acc);
        }
    } else {
        std::vector<T> acc(chunk);
        for (std::size_t it = 0; it < items; ++it) run_item(it, acc);
    }
}

template void box_filter_axis<double>(std::span<const double>, std::span<double>, int, int, int, int, Exec);
template void box_filter_axis<cplx>(std::span<const cplx>, std::span<cplx>, int, int, int, int, Exec);

double blocked_pow_sum(std::span<const double> v, double p, Exec exec) {
    const std::size_t n = v.size();
    const std::size_t nb = (n + block_size - 1) / block_size;
    std::vector<CompensatedSum> part(nb);
    auto run_block = [&](std::size_t b) {
        CompensatedSum s;
        for (std::size_t i = b * block_size; i < std::min(n, (b + 1) * block_size); ++i)
            s.add(p == 2 ? v[i] * v[i] : std::pow(std::fabs(v[i]), p));
        part[b] = s;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::size_t b = 0; b < nb; ++b) run_block(b);
    } else {
        for (std::size_t b = 0; b < nb; ++b) run_block(b);
    }
    CompensatedSum total;
    for (const auto& s : part) total.add(s);
    return total.value();
}

namespace {

constexpr std::size_t short_len = 8;

// Allocation-free version of jump_breakpoints for paths of at most short_len points.
void short_path_events(const double* v, std::size_t n, std::uint32_t point, std::vector<JumpEvent>& out) {
    double cand[short_len * (short_len - 1) / 2];
    std::size_t nc = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            double m = std::fabs(v[j] - v[i]);
            if (m > 0) cand[nc++] = m;
        }
    std::sort(cand, cand + nc);
    nc = static_cast<std::size_t>(std::unique(cand, cand + nc) - cand);
    int counts[short_len * (short_len - 1) / 2];
    for (std::size_t c = 0; c < nc; ++c) {
        int best[short_len] = {0};
        int answer = 0;
        for (std::size_t j = 1; j < n; ++j) {
            int b = 0;
            for (std::size_t i = 0; i < j; ++i)
                if (best[i] + 1 > b && std::fabs(v[j] - v[i]) >= cand[c]) b = best[i] + 1;
            best[j] = b;
            answer = std::max(answer, b);
        }
        counts[c] = answer;
    }
    // breakpoints in increasing magnitude, each paired with the count just above it
    bool any = false;
    for (std::size_t c = 0; c < nc; ++c) {
        int next = c + 1 < nc ? counts[c + 1] : 0;
        if (counts[c] > next) {
            if (any) out.back().lo = static_cast<std::uint16_t>(counts[c]);
            out.push_back({cand[c], point, static_cast<std::uint16_t>(counts[c]), 0});
            any = true;
        }
    }
}

void events_for_block(std::span<const double> values, std::size_t len, std::size_t first, std::size_t last,
                      std::vector<JumpEvent>& out) {
    if (len <= short_len) {
        for (std::size_t x = first; x < last; ++x)
            short_path_events(values.data() + x * len, len, static_cast<std::uint32_t>(x), out);
        return;
    }
    for (std::size_t x = first; x < last; ++x) {
        auto prof = jump_breakpoints(values.subspan(x * len, len));
        const auto& bps = prof.breakpoints();
        for (std::size_t i = 0; i < bps.size(); ++i) {
            auto lo = i + 1 < bps.size() ? bps[i + 1].count : 0;
            out.push_back({bps[i].magnitude, static_cast<std::uint32_t>(x), static_cast<std::uint16_t>(bps[i].count),
                           static_cast<std::uint16_t>(lo)});
        }
    }
}

}  // namespace

std::vector<JumpEvent> collect_jump_events(std::span<const double> values, std::size_t len, Exec exec) {
    require(len >= 1 && values.size() % len == 0, "values are not a whole number of paths");
    require(len < 65536, "paths too long for event encoding");
    const std::size_t n = values.size() / len;
    require(n < (std::size_t(1) << 32), "too many paths for event encoding");
    const std::size_t nb = (n + block_size - 1) / block_size;
    std::vector<std::vector<JumpEvent>> part(nb);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::size_t b = 0; b < nb; ++b)
            events_for_block(values, len, b * block_size, std::min(n, (b + 1) * block_size), part[b]);
    } else {
        for (std::size_t b = 0; b < nb; ++b)
            events_for_block(values, len, b * block_size, std::min(n, (b + 1) * block_size), part[b]);
    }
    std::size_t total = 0;
    for (const auto& p : part) total += p.size();
    std::vector<JumpEvent> out;
    out.reserve(total);
    for (auto& p : part) {
        out.insert(out.end(), p.begin(), p.end());
        std::vector<JumpEvent>().swap(p);
    }
    return out;
}

namespace {

// Stable LSD radix sort by a 64-bit key, 16 bits per pass.
template <class Key>
void radix_sort(std::vector<JumpEvent>& ev, Key key, int passes) {
    std::vector<JumpEvent> tmp(ev.size());
    std::vector<std::size_t> count(65537);
    for (int pass = 0; pass < passes; ++pass) {
        const int shift = 16 * pass;
        std::fill(count.begin(), count.end(), 0);
        for (const auto& e : ev) ++count[((key(e) >> shift) & 0xffff) + 1];
        for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
        for (const auto& e : ev) tmp[count[(key(e) >> shift) & 0xffff]++] = e;
        ev.swap(tmp);
    }
}

}  // namespace

void sort_jump_events(std::vector<JumpEvent>& events) {
    auto before = [](const JumpEvent& a, const JumpEvent& b) {
        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
        return a.point < b.point;
    };
    if (std::is_sorted(events.begin(), events.end(), before)) return;
    if (events.size() < 4096) {
        std::sort(events.begin(), events.end(), before);
        return;
    }
    bool by_point = std::is_sorted(events.begin(), events.end(),
                                   [](const JumpEvent& a, const JumpEvent& b) { return a.point < b.point; });
    if (!by_point) radix_sort(events, [](const JumpEvent& e) { return std::uint64_t(e.point); }, 2);
    // magnitudes are positive, so their bit patterns order like the values; complement for descending
    radix_sort(events, [](const JumpEvent& e) { return ~std::bit_cast<std::uint64_t>(e.magnitude); }, 4);
}

namespace {

bool event_before(const JumpEvent& a, const JumpEvent& b) {
    if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
    return a.point < b.point;
}

// Per-event increment of the weighted count sum, with c^{p/2} cached for the small counts that occur.
struct Increment {
    std::span<const double> weights;
    double p;
    std::vector<double> powc;
    double operator()(const JumpEvent& e) {
        return (weights.empty() ? 1.0 : weights[e.point]) * (pw(e.hi) - pw(e.lo));
    }
    double pw(unsigned c) {
        while (powc.size() <= c) powc.push_back(std::pow(double(powc.size()), p / 2));
        return powc[c];
    }
};

// Sup of lambda * S(lambda)^{1/p} over sorted runs, largest magnitudes first. next_range() returns
// the next run (empty when done); runs never split a group of equal magnitudes. Evaluation stops
// once lambda * cap drops below the best value, cap being an upper bound for S^{1/p}.
template <class NextRange>
SeminormResult scan_events(NextRange next_range, Increment& increment, double cap) {
    SeminormResult out;
    CompensatedSum s;
    for (std::span<const JumpEvent> r = next_range(); !r.empty(); r = next_range()) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            const auto& e = r[i];
            s.add(increment(e));
            if (i + 1 < r.size() && r[i + 1].magnitude == e.magnitude) continue;
            if (e.magnitude * cap < out.value) return out;
            double val = e.magnitude * std::pow(s.value(), 1.0 / increment.p);
            if (val > out.value) {
                out.value = val;
                out.argmax_lambda = e.magnitude;
            }
        }
    }
    return out;
}

constexpr int bucket_shift = 48;
constexpr std::size_t bucket_count = std::size_t(1) << (64 - bucket_shift);

std::size_t bucket_of(double m) { return static_cast<std::size_t>(std::bit_cast<std::uint64_t>(m) >> bucket_shift); }
double bucket_edge(std::size_t b) { return std::bit_cast<double>(static_cast<std::uint64_t>(b) << bucket_shift); }

}  // namespace

SeminormResult seminorm_from_events(std::vector<JumpEvent>& events, std::span<const double> weights, double p) {
    require(p > 1 && std::isfinite(p), "jump seminorm needs 1 < p < infinity");
    sort_jump_events(events);
    Increment inc{weights, p, {}};
    CompensatedSum total;
    for (const auto& e : events) total.add(inc(e));
    bool done = false;
    return scan_events(
        [&]() -> std::span<const JumpEvent> {
            if (done) return {};
            done = true;
            return events;
        },
        inc, std::pow(total.value(), 1.0 / p) * (1 + 1e-12));
}

JumpEventIndex::JumpEventIndex(std::vector<JumpEvent> events) {
    start_.assign(bucket_count + 1, 0);
    for (const auto& e : events) {
        require(e.magnitude > 0 && e.magnitude < infinity, "jump events need finite positive magnitudes");
        ++start_[bucket_of(e.magnitude) + 1];
    }
    for (std::size_t b = 1; b <= bucket_count; ++b) start_[b] += start_[b - 1];
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    events_.resize(events.size());
    for (const auto& e : events) events_[fill[bucket_of(e.magnitude)]++] = e;
    sorted_.assign(bucket_count, 0);
}

SeminormResult JumpEventIndex::seminorm(std::span<const double> weights, double p) {
    require(p > 1 && std::isfinite(p), "jump seminorm needs 1 < p < infinity");
    Increment inc{weights, p, {}};
    std::vector<CompensatedSum> part(bucket_count);
    for (const auto& e : events_) part[bucket_of(e.magnitude)].add(inc(e));

    // S after each bucket, in scan order. Bucket b then ranges between
    // edge(b) * S_b^{1/p} (its last event) and edge(b+1) * S_b^{1/p}; buckets whose upper value is
    // below the best lower value cannot hold the maximum and are never sorted.
    constexpr double slack = 1e-9;
    std::vector<double> after(bucket_count, 0.0);
    CompensatedSum run;
    double lower = 0;
    for (std::size_t b = bucket_count; b-- > 0;) {
        if (start_[b] == start_[b + 1]) continue;
        run.add(part[b].value());
        after[b] = run.value();
        lower = std::max(lower, bucket_edge(b) * std::pow(after[b], 1.0 / p) * (1 - slack));
    }
    std::size_t last = bucket_count;
    for (std::size_t b = 0; b < bucket_count; ++b) {
        if (start_[b] == start_[b + 1]) continue;
        double edge = b + 1 < bucket_count ? bucket_edge(b + 1) : infinity;
        if (edge * std::pow(after[b], 1.0 / p) * (1 + slack) >= lower) {
            last = b;
            break;
        }
    }

    std::size_t b = bucket_count;
    return scan_events(
        [&]() -> std::span<const JumpEvent> {
            while (b > last) {
                --b;
                auto first = events_.begin() + start_[b], end = events_.begin() + start_[b + 1];
                if (first == end) continue;
                if (!sorted_[b]) {
                    std::sort(first, end, event_before);
                    sorted_[b] = 1;
                }
                return {&*first, static_cast<std::size_t>(end - first)};
            }
            return {};
        },
        inc, std::pow(run.value(), 1.0 / p) * (1 + 1e-12));
}

}  // namespace jumpkit::kernels
