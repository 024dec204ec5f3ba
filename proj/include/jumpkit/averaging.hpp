#pragma once

#include <span>
#include <vector>

#include "jumpkit/convex_body.hpp"
#include "jumpkit/fourier.hpp"
#include "jumpkit/kernels.hpp"
#include "jumpkit/lattice.hpp"

namespace jumpkit {

// Average of f over x - tG on the lattice: convolution with the mass-one sampled indicator of tG
// (cell-center membership), applied through the DFT.
LatticeField avg_convex(const LatticeField& field, const ConvexBodySpec& body, double t);
// The mass-one sampled indicator of tG as a field (the kernel avg_convex convolves with).
LatticeField sampled_indicator(const ConvexBodySpec& body, double t, int M, double spacing);
// Fraction of the sampled indicator's mass on cells within h sqrt(d) / 2 of the boundary of tG:
// the size of the O(h) discretization error next to comparisons with the continuous average.
double indicator_discretization_bound(const ConvexBodySpec& body, double t, int M, double spacing);

// Periodic average over the (2N+1)^d cube centered at each point.
LatticeField avg_discrete_cube(const LatticeField& field, int N, kernels::Exec exec = kernels::Exec::parallel);
// Real-valued variant on raw row-major storage, used by the dimension sweep.
void avg_discrete_cube_real(std::span<const double> in, std::span<double> out, int d, int M, int N,
                            kernels::Exec exec = kernels::Exec::parallel);

// prod_j sin((2N+1) pi xi_j) / ((2N+1) sin(pi xi_j))
double discrete_symbol(int N, std::span<const double> xi);
SymbolFamily discrete_cube_family();

struct DiscreteSymbolConstants {
    double decay = 0;      // sup |m_N| N |xi|
    double near_zero = 0;  // sup |m_N - 1| / (N |xi|)
    double lipschitz = 0;  // sup |m_N1 - m_N2| / (|N1 - N2| max(1/N1, 1/N2))
};

// Measured constants of the three multiplier bounds over N in [1, n_max] and the given torus grid.
DiscreteSymbolConstants discrete_symbol_constants(int n_max, const FrequencyGrid& grid,
                                                  kernels::Exec exec = kernels::Exec::parallel);

}  // namespace jumpkit
