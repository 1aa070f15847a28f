#pragma once

#include "chronosim/state.hpp"

namespace chronosim {

inline constexpr double kDefaultSubstep = 1e-3;

// Norm-preserving Schrodinger evolution over dt > 0 by split-step Fourier
// integration (Strang splitting: half potential, full kinetic, half
// potential). The step count is ceil(dt / h_max), fixed rather than adaptive
// so that a trajectory is reproducible bit for bit from its inputs.
//
// Backward evolution is conjugate -> forward evolve -> conjugate. With a real
// Hamiltonian this inverts forward evolution over the same dt exactly, which
// is the contract the reverse-replay machinery relies on. The state's time
// advances (forward) or decreases (backward) by dt.
WaveFunction evolve(const WaveFunction& psi, double dt, const ModelParams& params,
                    Direction direction, double h_max = kDefaultSubstep);

// Convenience overload using the state's own direction tag.
WaveFunction evolve(const WaveFunction& psi, double dt, const ModelParams& params,
                    double h_max = kDefaultSubstep);

}  // namespace chronosim
