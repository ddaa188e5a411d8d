#pragma once

#include "lhs/integrate.hpp"

#include <optional>
#include <string>
#include <utility>

namespace lhs {

struct DiagnosticsRecord {
    double t = 0.0;
    double D = 0.0;     // diameter functional, in [0,2]
    double L_max = 0.0; // max over pairs of the Lyapunov functional
    double kappa_min = 0.0;
    double kappa_max = 0.0;
    double lambda_tilde_max_abs = 0.0;
    double sphere_drift_max = 0.0;
    std::optional<double> envelope;
};

enum class TheoremTag { T31, T32, T33, T34 };

struct HypothesisReport {
    TheoremTag theorem = TheoremTag::T31;
    bool satisfied = false;
    std::vector<std::pair<std::string, double>> margins; // slack of each inequality
    std::pair<std::size_t, std::size_t> witness{0, 0};
    std::optional<double> feasible_kappa; // T32/T34 grid search result
    std::size_t grid_points = 0;
};

// L_ij = ||z_i - z_j||^2 / 2 + (1/4 mu N) sum_k (kappa_ik - kappa_jk)^2
double lyapunov_L(const Ensemble& e, std::size_t i, std::size_t j, double mu);
double lyapunov_L_max(const Ensemble& e, double mu,
                      std::pair<std::size_t, std::size_t>* argmax = nullptr);

// D(Z) = max_ij ||z_i - z_j||^2 / 2; ties broken by smallest (i,j).
std::pair<double, std::pair<std::size_t, std::size_t>> diameter_D(const Ensemble& e);

// Closed-form dL_ij/dt for the SL-pair and perturbed systems (anti-Hebbian law).
double dL_dt_analytic(const Ensemble& e, const ModelParams& p, ModelVariant variant,
                      std::size_t i, std::size_t j);

HypothesisReport check_theorem(const Ensemble& e0, const ModelParams& p, TheoremTag which);

// Explicit decay envelope for the diameter functional from the Riccati
// differential inequality; rate constant 2 kappa_m - kappa_M - 4 |lambda0|.
double riccati_envelope(double D0, double kappa_m, double kappa_M, double lambda0_abs, double t);

// kappa0 e^{-gamma t} + (4 mu / gamma)(1 - e^{-gamma t})
double kappa_upper_bound(double kappa0, double gamma, double mu, double t);

// lambda-tilde(t) = lambda0 e^{-gamma t} in the GammaTilde == 0 regime.
double lambda_tilde_closed_form(double lambda0, double gamma, double t);

// max over samples and pairs of | kappa + 2 lambda - e^{-gamma t}(kappa0 + 2 lambda0) |
double sl_pair_defect(const Trajectory& traj, double gamma);

// Least-squares slope of -log D vs t over the window; returns (rate, r^2).
std::pair<double, double> fit_decay_rate(const std::vector<std::pair<double, double>>& tD,
                                         double t_lo, double t_hi);

// One sampled diagnostics row. The lambda block is interpreted per variant so
// that the column always reports lambda-tilde.
DiagnosticsRecord diagnostics_record(const Sample& s, const ModelParams& p, ModelVariant variant,
                                     std::optional<double> envelope = std::nullopt);

std::string serialize_report(const HypothesisReport& rep);

} // namespace lhs
