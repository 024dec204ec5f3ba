#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace jumpkit {

using cplx = std::complex<double>;

// Complex values on the periodic lattice Z_M^d with physical spacing h, row-major (axis 0 slowest).
class LatticeField {
public:
    static constexpr int default_budget_bits = 26;

    LatticeField(int d, int M, double spacing = 1.0, int budget_bits = default_budget_bits);
    LatticeField(int d, int M, std::vector<cplx> values, double spacing = 1.0,
                 int budget_bits = default_budget_bits);

    int dim() const { return d_; }
    int side() const { return M_; }
    double spacing() const { return h_; }
    std::size_t size() const { return values_.size(); }

    std::span<cplx> values() { return values_; }
    std::span<const cplx> values() const { return values_; }
    cplx& operator[](std::size_t i) { return values_[i]; }
    const cplx& operator[](std::size_t i) const { return values_[i]; }

    std::size_t index(std::span<const int> coords) const;  // coords reduced mod M
    void coords(std::size_t index, std::span<int> out) const;
    // Signed representative of each coordinate in [-M/2, M/2).
    void centered_coords(std::size_t index, std::span<int> out) const;

    cplx mean() const;
    // Lattice translate g(x) = f(x - shift).
    LatticeField shifted(std::span<const int> shift) const;

private:
    int d_, M_;
    double h_;
    std::vector<cplx> values_;
};

// Forward transform uses e^{-2 pi i x.xi}; inverse is normalized by M^d.
std::vector<cplx> dft_forward(const LatticeField& f);
LatticeField dft_inverse(std::vector<cplx> spectrum, int d, int M, double spacing);

// Frequency of DFT index m on an axis: wrapped m / (M h).
double lattice_frequency(int m, int M, double spacing);

struct Multiplier {
    int dim = 0;  // 0 accepts any dimension
    std::function<cplx(std::span<const double>)> eval;
};

// inverse-DFT(symbol * DFT(field)), the symbol sampled at the lattice frequencies.
LatticeField apply_multiplier(const LatticeField& field, const Multiplier& symbol);

}  // namespace jumpkit
