#include "jumpkit/lattice.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "jumpkit/errors.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit {

namespace {

std::size_t checked_size(int d, int M, int budget_bits) {
    require(d >= 1 && M >= 1, "lattice needs d >= 1 and M >= 1");
    require(d * std::log2(double(M)) <= budget_bits + 1e-9, "lattice exceeds the memory budget");
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(M);
    return n;
}

// FFTW planning is not thread safe.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

void run_dft(std::vector<cplx>& data, int d, int M, int sign) {
    std::vector<int> dims(d, M);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(plan_mutex());
        plan = fftw_plan_dft(d, dims.data(), p, p, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw NumericFailure("FFTW could not plan the transform");
    fftw_execute(plan);
    std::lock_guard lock(plan_mutex());
    fftw_destroy_plan(plan);
}

}  // namespace

LatticeField::LatticeField(int d, int M, double spacing, int budget_bits)
    : d_(d), M_(M), h_(spacing), values_(checked_size(d, M, budget_bits)) {
    require(spacing > 0 && std::isfinite(spacing), "lattice spacing must be positive");
}

LatticeField::LatticeField(int d, int M, std::vector<cplx> values, double spacing, int budget_bits)
    : d_(d), M_(M), h_(spacing), values_(std::move(values)) {
    require(values_.size() == checked_size(d, M, budget_bits), "value count does not match M^d");
    require(spacing > 0 && std::isfinite(spacing), "lattice spacing must be positive");
}

std::size_t LatticeField::index(std::span<const int> c) const {
    std::size_t i = 0;
    for (int a = 0; a < d_; ++a) i = i * M_ + static_cast<std::size_t>(((c[a] % M_) + M_) % M_);
    return i;
}

void LatticeField::coords(std::size_t index, std::span<int> out) const {
    for (int a = d_ - 1; a >= 0; --a) {
        out[a] = static_cast<int>(index % M_);
        index /= M_;
    }
}

void LatticeField::centered_coords(std::size_t index, std::span<int> out) const {
    coords(index, out);
    for (int a = 0; a < d_; ++a)
        if (out[a] >= (M_ + 1) / 2) out[a] -= M_;
}

cplx LatticeField::mean() const {
    CompensatedSum re, im;
    for (const auto& v : values_) {
        re.add(v.real());
        im.add(v.imag());
    }
    return cplx(re.value(), im.value()) / double(values_.size());
}

LatticeField LatticeField::shifted(std::span<const int> shift) const {
    LatticeField g(d_, M_, h_, 64);
    std::vector<int> c(d_);
    for (std::size_t i = 0; i < size(); ++i) {
        coords(i, c);
        for (int a = 0; a < d_; ++a) c[a] += shift[a];
        g.values_[index(c)] = values_[i];
    }
    return g;
}

std::vector<cplx> dft_forward(const LatticeField& f) {
    std::vector<cplx> data(f.values().begin(), f.values().end());
    run_dft(data, f.dim(), f.side(), FFTW_FORWARD);
    return data;
}

LatticeField dft_inverse(std::vector<cplx> spectrum, int d, int M, double spacing) {
    run_dft(spectrum, d, M, FFTW_BACKWARD);
    const double scale = 1.0 / double(spectrum.size());
    for (auto& v : spectrum) v *= scale;
    return LatticeField(d, M, std::move(spectrum), spacing, 64);
}

double lattice_frequency(int m, int M, double spacing) {
    int w = m >= (M + 1) / 2 ? m - M : m;
    return w / (M * spacing);
}

LatticeField apply_multiplier(const LatticeField& field, const Multiplier& symbol) {
    require(symbol.dim == 0 || symbol.dim == field.dim(), "multiplier dimension does not match the field");
    auto spec = dft_forward(field);
    const int d = field.dim(), M = field.side();
    std::vector<int> c(d);
    std::vector<double> xi(d);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        field.coords(i, c);
        for (int a = 0; a < d; ++a) xi[a] = lattice_frequency(c[a], M, field.spacing());
        spec[i] *= symbol.eval(xi);
    }
    return dft_inverse(std::move(spec), d, M, field.spacing());
}

}  // namespace jumpkit
