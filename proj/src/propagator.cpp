#include "chronosim/propagator.hpp"

#include <cmath>
#include <vector>

#include "chronosim/fft.hpp"

namespace chronosim {
namespace {

std::vector<int> dims_of(const GridSpec& g) {
    return std::vector<int>(static_cast<std::size_t>(g.num_particles), g.num_points);
}

// exp(-i V h / (2 hbar)) per grid point, or empty for a free particle.
std::vector<Complex> potential_phase(const GridSpec& grid, const ModelParams& params, double h) {
    if (params.potential.kind == PotentialSpec::Kind::free) return {};
    const auto v = potential_on_grid(grid, params);
    std::vector<Complex> phase(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        phase[i] = std::polar(1.0, -v[i] * h / (2.0 * params.hbar));
    return phase;
}

// exp(-i hbar k^2 h / (2 m)) per spectral point.
std::vector<Complex> kinetic_phase(const GridSpec& grid, const ModelParams& params, double h) {
    const auto k = fft::wavenumbers(grid.num_points, grid.dx);
    std::vector<Complex> phase(grid.size());
    for (std::size_t idx = 0; idx < phase.size(); ++idx) {
        std::size_t rest = idx;
        double ksq = 0.0;
        for (int a = 0; a < grid.num_particles; ++a) {
            const int kk = static_cast<int>(rest % static_cast<std::size_t>(grid.num_points));
            rest /= static_cast<std::size_t>(grid.num_points);
            ksq += k[static_cast<std::size_t>(kk)] * k[static_cast<std::size_t>(kk)];
        }
        phase[idx] = std::polar(1.0, -params.hbar * ksq * h / (2.0 * params.mass));
    }
    return phase;
}

void forward_steps(WaveFunction& psi, double dt, const ModelParams& params, double h_max) {
    const auto dims = dims_of(psi.grid);
    const int nsub = std::max(1, static_cast<int>(std::ceil(dt / h_max)));
    const double h = dt / nsub;

    const auto vphase = potential_phase(psi.grid, params, h);
    const auto kphase = kinetic_phase(psi.grid, params, h);
    auto& amp = psi.amplitudes;

    for (int s = 0; s < nsub; ++s) {
        if (!vphase.empty())
            for (std::size_t i = 0; i < amp.size(); ++i) amp[i] *= vphase[i];
        fft::forward(amp, dims);
        for (std::size_t i = 0; i < amp.size(); ++i) amp[i] *= kphase[i];
        fft::backward(amp, dims);
        if (!vphase.empty())
            for (std::size_t i = 0; i < amp.size(); ++i) amp[i] *= vphase[i];
    }
}

}  // namespace

WaveFunction evolve(const WaveFunction& psi, double dt, const ModelParams& params,
                    Direction direction, double h_max) {
    if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be > 0");
    if (!(h_max > 0.0)) throw std::invalid_argument("evolve: h_max must be > 0");
    params.validate();
    psi.grid.validate();

    WaveFunction out = psi;
    if (direction == Direction::forward) {
        forward_steps(out, dt, params, h_max);
        out.time += dt;
    } else {
        for (Complex& c : out.amplitudes) c = std::conj(c);
        forward_steps(out, dt, params, h_max);
        for (Complex& c : out.amplitudes) c = std::conj(c);
        out.time -= dt;
    }
    return out;
}

WaveFunction evolve(const WaveFunction& psi, double dt, const ModelParams& params, double h_max) {
    return evolve(psi, dt, params, psi.direction, h_max);
}

}  // namespace chronosim
