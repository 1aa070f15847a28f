#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chronosim {

// Error vocabulary. Contract violations that a caller can provoke with bad
// data throw one of these; plain programming errors use std exceptions.
struct sim_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_state_error : sim_error {
    using sim_error::sim_error;
};
struct degenerate_state_error : sim_error {
    using sim_error::sim_error;
};
struct incompatible_grid_error : sim_error {
    using sim_error::sim_error;
};
struct degenerate_collapse_error : sim_error {
    using sim_error::sim_error;
};
struct conditioning_error : sim_error {
    using sim_error::sim_error;
};
struct parse_error : sim_error {
    using sim_error::sim_error;
};

enum class Direction { forward, backward };

inline const char* to_string(Direction d) {
    return d == Direction::forward ? "forward" : "backward";
}

// Uniform periodic position grid for N distinguishable particles, one spatial
// dimension each. Axis k holds coordinate x of particle k+1; amplitudes are
// flattened row-major, so particle N is the fastest-varying axis.
struct GridSpec {
    int num_points = 0;     // points per axis, >= 2
    double x_min = 0.0;     // left edge of the axis
    double dx = 0.0;        // spacing, > 0
    int num_particles = 1;  // N

    std::size_t size() const {
        std::size_t s = 1;
        for (int i = 0; i < num_particles; ++i) s *= static_cast<std::size_t>(num_points);
        return s;
    }
    double coord(int k) const { return x_min + k * dx; }
    double length() const { return num_points * dx; }
    // Volume element dx^N.
    double cell_volume() const {
        double v = 1.0;
        for (int i = 0; i < num_particles; ++i) v *= dx;
        return v;
    }
    bool operator==(const GridSpec& o) const = default;

    void validate() const {
        if (num_points < 2) throw std::invalid_argument("GridSpec: num_points must be >= 2");
        if (!(dx > 0.0)) throw std::invalid_argument("GridSpec: dx must be > 0");
        if (num_particles < 1) throw std::invalid_argument("GridSpec: num_particles must be >= 1");
    }
};

struct PotentialSpec {
    enum class Kind { free, harmonic, tabulated };
    Kind kind = Kind::free;
    double omega = 1.0;           // harmonic only
    std::vector<double> values;   // tabulated only, one value per grid point (per axis)

    static PotentialSpec make_free() { return {}; }
    static PotentialSpec make_harmonic(double omega) {
        if (!(omega > 0.0)) throw std::invalid_argument("harmonic potential: omega must be > 0");
        PotentialSpec p;
        p.kind = Kind::harmonic;
        p.omega = omega;
        return p;
    }
    static PotentialSpec make_tabulated(std::vector<double> v) {
        PotentialSpec p;
        p.kind = Kind::tabulated;
        p.values = std::move(v);
        return p;
    }
    bool operator==(const PotentialSpec& o) const = default;
};

// Model parameters in natural units (hbar = mass = 1, localization width a of
// order 1). The physical GRW choices, a = 1e-7 m and a rate of 1e-16 per
// second per particle, are kept as documented constants below; desk-scale
// simulation needs O(1) rates, and the dynamics is scale covariant.
struct ModelParams {
    double a = 1.0;       // localization width, > 0
    double lambda = 1.0;  // collapse rate per particle per unit time, >= 0
    double mass = 1.0;
    double hbar = 1.0;
    PotentialSpec potential;

    void validate() const {
        if (!(a > 0.0)) throw std::invalid_argument("ModelParams: a must be > 0");
        if (!(lambda >= 0.0)) throw std::invalid_argument("ModelParams: lambda must be >= 0");
        if (!(mass > 0.0)) throw std::invalid_argument("ModelParams: mass must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("ModelParams: hbar must be > 0");
    }
};

// Documentation constants: the historical physical parameter choices.
inline constexpr double kGrwPhysicalWidthMeters = 1e-7;
inline constexpr double kGrwPhysicalRatePerSecond = 1e-16;

}  // namespace chronosim
