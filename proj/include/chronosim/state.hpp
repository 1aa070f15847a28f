#pragma once

#include <complex>
#include <vector>

#include "chronosim/types.hpp"

namespace chronosim {

using Complex = std::complex<double>;

// N-particle wave function sampled on a uniform periodic grid, together with
// the simulation time and the time direction the state belongs to. States are
// plain values: copy freely, move cheaply, no shared mutable anything.
struct WaveFunction {
    GridSpec grid;
    std::vector<Complex> amplitudes;  // length grid.size(), row-major
    double time = 0.0;
    Direction direction = Direction::forward;
};

// sqrt( sum |amp|^2 * dx^N ). Throws invalid_state_error on non-finite input.
double norm(const WaveFunction& psi);

// Rescale to unit norm. Throws degenerate_state_error when norm is zero.
WaveFunction normalize(const WaveFunction& psi);
void normalize_in_place(WaveFunction& psi);

// <psi|phi> = sum conj(psi_k) phi_k * dx^N. Grids must match exactly.
Complex inner_product(const WaveFunction& psi, const WaveFunction& phi);

// |<psi|phi>|^2 after normalizing both sides; phase-insensitive, in [0,1].
double fidelity(const WaveFunction& psi, const WaveFunction& phi);

// Marginal position density of one particle (1-based index), normalized so
// that sum(density)*dx = 1.
std::vector<double> position_density(const WaveFunction& psi, int particle);

// Potential energy values V(x_1..x_N) evaluated per flattened grid index.
// Harmonic: sum_i m omega^2 x_i^2 / 2. Tabulated: per-axis table summed over
// particles.
std::vector<double> potential_on_grid(const GridSpec& grid, const ModelParams& params);

// <psi|H|psi> with H = sum_i p_i^2/(2m) + V; kinetic term evaluated
// spectrally on the periodic grid. Expects a normalized state.
double expected_energy(const WaveFunction& psi, const ModelParams& params);

// Mass of all single-particle marginals within `points` grid cells of the
// periodic wrap seam. Used as the boundary-leak guard: spectral propagation
// wraps around, so mass at the seam means the box is too small.
double seam_mass(const WaveFunction& psi, int points = 5);
inline constexpr double kSeamMassThreshold = 1e-6;

// Mean and variance of the marginal position density of one particle.
struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};
Moments position_moments(const WaveFunction& psi, int particle);

// Product of per-axis Gaussian packets exp(-(x-c)^2/(4 sigma^2) + i k x),
// normalized on the grid; sigma is the standard deviation of the position
// density along that axis.
struct PacketSpec {
    double center = 0.0;
    double sigma = 1.0;
    double momentum = 0.0;
};
WaveFunction gaussian_packet(const GridSpec& grid, const std::vector<PacketSpec>& axes,
                             double time = 0.0, Direction direction = Direction::forward);
WaveFunction gaussian_packet(const GridSpec& grid, double center, double sigma,
                             double momentum = 0.0, double time = 0.0,
                             Direction direction = Direction::forward);

}  // namespace chronosim
