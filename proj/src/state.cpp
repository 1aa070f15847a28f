#include "chronosim/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chronosim/fft.hpp"

namespace chronosim {
namespace {

void check_finite(const WaveFunction& psi) {
    for (const Complex& c : psi.amplitudes) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw invalid_state_error("wave function has non-finite amplitudes");
    }
}

std::vector<int> dims_of(const GridSpec& g) {
    return std::vector<int>(static_cast<std::size_t>(g.num_particles), g.num_points);
}

// Row-major axis stride: axis N-1 is fastest.
std::size_t axis_stride(const GridSpec& g, int axis) {
    std::size_t s = 1;
    for (int a = g.num_particles - 1; a > axis; --a) s *= static_cast<std::size_t>(g.num_points);
    return s;
}

int check_particle(const GridSpec& g, int particle) {
    if (particle < 1 || particle > g.num_particles)
        throw std::invalid_argument("particle index out of range [1, N]");
    return particle - 1;
}

}  // namespace

double norm(const WaveFunction& psi) {
    check_finite(psi);
    double s = 0.0;
    for (const Complex& c : psi.amplitudes) s += std::norm(c);
    return std::sqrt(s * psi.grid.cell_volume());
}

void normalize_in_place(WaveFunction& psi) {
    const double n = norm(psi);
    if (n == 0.0) throw degenerate_state_error("cannot normalize a zero state");
    const double inv = 1.0 / n;
    for (Complex& c : psi.amplitudes) c *= inv;
}

WaveFunction normalize(const WaveFunction& psi) {
    WaveFunction out = psi;
    normalize_in_place(out);
    return out;
}

Complex inner_product(const WaveFunction& psi, const WaveFunction& phi) {
    if (psi.grid != phi.grid)
        throw incompatible_grid_error("inner_product: grids do not match");
    Complex s = 0.0;
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
        s += std::conj(psi.amplitudes[i]) * phi.amplitudes[i];
    return s * psi.grid.cell_volume();
}

double fidelity(const WaveFunction& psi, const WaveFunction& phi) {
    const double np = norm(psi), nq = norm(phi);
    if (np == 0.0 || nq == 0.0) throw degenerate_state_error("fidelity of a zero state");
    const Complex ov = inner_product(psi, phi);
    return std::norm(ov) / (np * np * nq * nq);
}

std::vector<double> position_density(const WaveFunction& psi, int particle) {
    const int axis = check_particle(psi.grid, particle);
    const int n = psi.grid.num_points;
    const std::size_t stride = axis_stride(psi.grid, axis);

    std::vector<double> density(static_cast<std::size_t>(n), 0.0);
    for (std::size_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
        const int k = static_cast<int>((idx / stride) % static_cast<std::size_t>(n));
        density[static_cast<std::size_t>(k)] += std::norm(psi.amplitudes[idx]);
    }
    double mass = std::accumulate(density.begin(), density.end(), 0.0) * psi.grid.dx;
    if (mass == 0.0) throw degenerate_state_error("position_density of a zero state");
    for (double& d : density) d /= mass;
    return density;
}

std::vector<double> potential_on_grid(const GridSpec& grid, const ModelParams& params) {
    grid.validate();
    const auto& pot = params.potential;
    std::vector<double> axis_values(static_cast<std::size_t>(grid.num_points), 0.0);
    switch (pot.kind) {
        case PotentialSpec::Kind::free:
            break;
        case PotentialSpec::Kind::harmonic:
            for (int k = 0; k < grid.num_points; ++k) {
                const double x = grid.coord(k);
                axis_values[static_cast<std::size_t>(k)] =
                    0.5 * params.mass * pot.omega * pot.omega * x * x;
            }
            break;
        case PotentialSpec::Kind::tabulated:
            if (static_cast<int>(pot.values.size()) != grid.num_points)
                throw std::invalid_argument("tabulated potential length does not match grid");
            for (double v : pot.values)
                if (!std::isfinite(v)) throw std::invalid_argument("tabulated potential has non-finite value");
            axis_values = pot.values;
            break;
    }

    std::vector<double> full(grid.size(), 0.0);
    if (pot.kind == PotentialSpec::Kind::free) return full;
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
        std::size_t rest = idx;
        double v = 0.0;
        for (int a = grid.num_particles - 1; a >= 0; --a) {
            const int k = static_cast<int>(rest % static_cast<std::size_t>(grid.num_points));
            rest /= static_cast<std::size_t>(grid.num_points);
            v += axis_values[static_cast<std::size_t>(k)];
        }
        full[idx] = v;
    }
    return full;
}

double expected_energy(const WaveFunction& psi, const ModelParams& params) {
    check_finite(psi);
    params.validate();
    const GridSpec& g = psi.grid;

    // Kinetic part in the spectral basis: sum_i (hbar k_i)^2 / 2m.
    std::vector<Complex> spec = psi.amplitudes;
    fft::forward(spec, dims_of(g));
    const auto k = fft::wavenumbers(g.num_points, g.dx);

    double kinetic = 0.0, weight = 0.0;
    for (std::size_t idx = 0; idx < spec.size(); ++idx) {
        const double w = std::norm(spec[idx]);
        std::size_t rest = idx;
        double ksq = 0.0;
        for (int a = g.num_particles - 1; a >= 0; --a) {
            const int kk = static_cast<int>(rest % static_cast<std::size_t>(g.num_points));
            rest /= static_cast<std::size_t>(g.num_points);
            ksq += k[static_cast<std::size_t>(kk)] * k[static_cast<std::size_t>(kk)];
        }
        kinetic += w * ksq;
        weight += w;
    }
    if (weight == 0.0) throw degenerate_state_error("expected_energy of a zero state");
    kinetic *= params.hbar * params.hbar / (2.0 * params.mass) / weight;

    double potential = 0.0;
    if (params.potential.kind != PotentialSpec::Kind::free) {
        const auto v = potential_on_grid(g, params);
        double wsum = 0.0;
        for (std::size_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
            const double w = std::norm(psi.amplitudes[idx]);
            potential += w * v[idx];
            wsum += w;
        }
        potential /= wsum;
    }
    return kinetic + potential;
}

double seam_mass(const WaveFunction& psi, int points) {
    const int n = psi.grid.num_points;
    const int w = std::min(points, n / 2);
    double worst = 0.0;
    for (int p = 1; p <= psi.grid.num_particles; ++p) {
        const auto density = position_density(psi, p);
        double m = 0.0;
        for (int k = 0; k < w; ++k) m += density[static_cast<std::size_t>(k)];
        for (int k = n - w; k < n; ++k) m += density[static_cast<std::size_t>(k)];
        worst = std::max(worst, m * psi.grid.dx);
    }
    return worst;
}

Moments position_moments(const WaveFunction& psi, int particle) {
    const auto density = position_density(psi, particle);
    const GridSpec& g = psi.grid;
    double mean = 0.0;
    for (int k = 0; k < g.num_points; ++k) mean += g.coord(k) * density[static_cast<std::size_t>(k)];
    mean *= g.dx;
    double var = 0.0;
    for (int k = 0; k < g.num_points; ++k) {
        const double d = g.coord(k) - mean;
        var += d * d * density[static_cast<std::size_t>(k)];
    }
    var *= g.dx;
    return {mean, var};
}

WaveFunction gaussian_packet(const GridSpec& grid, const std::vector<PacketSpec>& axes,
                             double time, Direction direction) {
    grid.validate();
    if (static_cast<int>(axes.size()) != grid.num_particles)
        throw std::invalid_argument("gaussian_packet: one PacketSpec per particle required");
    for (const auto& ax : axes)
        if (!(ax.sigma > 0.0)) throw std::invalid_argument("gaussian_packet: sigma must be > 0");

    // Per-axis amplitude profile; sigma is the position-density std deviation,
    // so the amplitude envelope is exp(-(x-c)^2 / (4 sigma^2)).
    std::vector<std::vector<Complex>> profile;
    profile.reserve(axes.size());
    for (const auto& ax : axes) {
        std::vector<Complex> row(static_cast<std::size_t>(grid.num_points));
        for (int k = 0; k < grid.num_points; ++k) {
            const double x = grid.coord(k);
            const double env = std::exp(-(x - ax.center) * (x - ax.center) / (4.0 * ax.sigma * ax.sigma));
            row[static_cast<std::size_t>(k)] = std::polar(env, ax.momentum * x);
        }
        profile.push_back(std::move(row));
    }

    WaveFunction psi;
    psi.grid = grid;
    psi.time = time;
    psi.direction = direction;
    psi.amplitudes.resize(grid.size());
    for (std::size_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
        std::size_t rest = idx;
        Complex v = 1.0;
        for (int a = grid.num_particles - 1; a >= 0; --a) {
            const int k = static_cast<int>(rest % static_cast<std::size_t>(grid.num_points));
            rest /= static_cast<std::size_t>(grid.num_points);
            v *= profile[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
        }
        psi.amplitudes[idx] = v;
    }
    normalize_in_place(psi);
    return psi;
}

WaveFunction gaussian_packet(const GridSpec& grid, double center, double sigma, double momentum,
                             double time, Direction direction) {
    std::vector<PacketSpec> axes(static_cast<std::size_t>(grid.num_particles),
                                 PacketSpec{center, sigma, momentum});
    return gaussian_packet(grid, axes, time, direction);
}

}  // namespace chronosim
