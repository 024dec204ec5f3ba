#include "jumpkit/averaging.hpp"

#include <cmath>
#include <numbers>

#include "jumpkit/errors.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit {

using std::numbers::pi;

LatticeField sampled_indicator(const ConvexBodySpec& body, double t, int M, double spacing) {
    require(t > 0 && std::isfinite(t), "averaging scale must be positive");
    const int d = body.dim();
    require(t * body.circumradius() < M * spacing / 2, "tG does not fit in half the period; the average would alias");
    LatticeField k(d, M, spacing);
    std::vector<int> c(d);
    std::vector<double> y(d);
    std::size_t count = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        k.centered_coords(i, c);
        for (int a = 0; a < d; ++a) y[a] = c[a] * spacing / t;
        if (body.contains(y)) {
            k[i] = 1.0;
            ++count;
        }
    }
    require(count > 0, "tG contains no lattice point");
    for (auto& v : k.values()) v /= double(count);
    return k;
}

double indicator_discretization_bound(const ConvexBodySpec& body, double t, int M, double spacing) {
    const int d = body.dim();
    LatticeField k = sampled_indicator(body, t, M, spacing);
    const double band = spacing * std::sqrt(double(d)) / 2;
    std::vector<int> c(d);
    std::vector<double> y(d);
    double near = 0, total = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        k.centered_coords(i, c);
        for (int a = 0; a < d; ++a) y[a] = c[a] * spacing / t;
        bool in = k[i].real() > 0;
        // distances scale with t
        bool close = body.boundary_distance(y).value * t < band;
        if (in) total += 1;
        if (close) near += 1;
    }
    return near / total;
}

LatticeField avg_convex(const LatticeField& field, const ConvexBodySpec& body, double t) {
    require(body.dim() == field.dim(), "body and field dimensions differ");
    LatticeField k = sampled_indicator(body, t, field.side(), field.spacing());
    auto fk = dft_forward(k);
    auto ff = dft_forward(field);
    for (std::size_t i = 0; i < ff.size(); ++i) ff[i] *= fk[i];
    return dft_inverse(std::move(ff), field.dim(), field.side(), field.spacing());
}

namespace {

template <class T>
void cube_passes(std::span<const T> in, std::span<T> out, int d, int M, int N, kernels::Exec exec) {
    require(N >= 1, "cube radius must be positive");
    require(2 * N + 1 <= M, "cube wider than the lattice period");
    std::vector<T> tmp(in.size());
    std::span<const T> src = in;
    for (int axis = 0; axis < d; ++axis) {
        // alternate buffers so the last pass lands in out
        bool to_out = ((d - 1 - axis) % 2) == 0;
        std::span<T> dst = to_out ? out : std::span<T>(tmp);
        kernels::box_filter_axis<T>(src, dst, d, M, axis, N, exec);
        src = dst;
    }
}

}  // namespace

LatticeField avg_discrete_cube(const LatticeField& field, int N, kernels::Exec exec) {
    LatticeField out(field.dim(), field.side(), field.spacing(), 64);
    cube_passes<cplx>(field.values(), out.values(), field.dim(), field.side(), N, exec);
    return out;
}

void avg_discrete_cube_real(std::span<const double> in, std::span<double> out, int d, int M, int N,
                            kernels::Exec exec) {
    require(in.size() == out.size(), "input and output sizes differ");
    cube_passes<double>(in, out, d, M, N, exec);
}

double discrete_symbol(int N, std::span<const double> xi) {
    require(N >= 0, "cube radius must be nonnegative");
    const double n = 2 * N + 1;
    double v = 1;
    for (double x : xi) {
        double s = std::sin(pi * x);
        if (s == 0) continue;
        v *= std::sin(n * pi * x) / (n * s);
    }
    return v;
}

SymbolFamily discrete_cube_family() {
    return {"cube", 0, 1.0, [](double N, std::span<const double> xi) {
                return cplx(discrete_symbol(static_cast<int>(N), xi));
            }};
}

DiscreteSymbolConstants discrete_symbol_constants(int n_max, const FrequencyGrid& grid, kernels::Exec exec) {
    require(n_max >= 1 && !grid.empty(), "need a nonempty (N, xi) grid");
    struct Row {
        double decay, near_zero, lipschitz;
    };
    auto per_point = [&](std::size_t i) {
        const auto& xi = grid[i];
        const double r = euclidean_norm(xi);
        std::vector<double> m(n_max + 1);
        Row row{0, 0, 0};
        for (int N = 1; N <= n_max; ++N) {
            m[N] = discrete_symbol(N, xi);
            if (r > 0) {
                row.decay = std::max(row.decay, std::fabs(m[N]) * N * r);
                row.near_zero = std::max(row.near_zero, std::fabs(m[N] - 1) / (N * r));
            }
        }
        for (int a = 1; a <= n_max; ++a)
            for (int b = a + 1; b <= n_max; ++b)
                row.lipschitz = std::max(row.lipschitz, std::fabs(m[a] - m[b]) * a / double(b - a));
        return row;
    };
    auto rows = kernels::run_shards<Row>(grid.size(), per_point, exec);
    DiscreteSymbolConstants c;
    for (const auto& r : rows) {
        c.decay = std::max(c.decay, r.decay);
        c.near_zero = std::max(c.near_zero, r.near_zero);
        c.lipschitz = std::max(c.lipschitz, r.lipschitz);
    }
    return c;
}

}  // namespace jumpkit
