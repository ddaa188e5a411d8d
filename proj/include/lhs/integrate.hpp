#pragma once

#include "lhs/dynamics.hpp"

#include <optional>

namespace lhs {

struct IntegratorSettings {
    double dt = 1e-3;
    double t_end = 1.0;
    bool renormalize = true;
    std::size_t record_every = 1;
    // Optional early stop, evaluated at sampling instants: stop once the
    // diameter functional falls below this value. <= 0 disables.
    double stop_when_diameter_below = 0.0;
};

struct Sample {
    Ensemble ensemble;
    double sphere_drift_max = 0.0; // max | ||z_j|| - 1 | seen since the previous sample
};

struct Trajectory {
    std::vector<Sample> samples;
};

// One classical RK4 step applied simultaneously to states and gains.
// If renormalize is set, states are projected back to the sphere and the
// pre-projection drift is returned through *drift_max.
Ensemble step_rk4(const Ensemble& e, const ModelParams& p, ModelVariant variant, double dt,
                  bool renormalize = false, double* drift_max = nullptr);

Trajectory simulate(const Ensemble& e0, const ModelParams& p, ModelVariant variant,
                    const IntegratorSettings& settings);

// exp(omega * t) by scaling-and-squaring with a degree-12 Taylor series.
CMat matrix_exponential(const CMat& omega, double t);

// Lemma-style composition: replaces each state w_j(t) by exp(omega t) w_j(t).
// Gains are unchanged.
Trajectory splitting_compose(const Trajectory& w_traj, const CMat& omega);

} // namespace lhs
