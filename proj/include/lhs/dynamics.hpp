#pragma once

#include "lhs/core.hpp"

namespace lhs {

// Time derivatives of states and gain blocks, same shapes as the Ensemble.
struct Derivative {
    std::vector<CVec> dstates;
    RealMat dkappa;
    RealMat dlambda;
};

// Which right-hand side drives the Ensemble. The tag determines which gain
// blocks are active and how the lambda block is interpreted (the Perturbed
// variant stores lambda-tilde there).
enum class ModelVariant {
    FullLHS,
    SLPair,
    Perturbed,
    SubsystemA,
    SubsystemB,
};

Derivative rhs(ModelVariant variant, const Ensemble& e, const ModelParams& p);

Derivative rhs_full(const Ensemble& e, const ModelParams& p);
Derivative rhs_sl_pair(const Ensemble& e, const ModelParams& p);
Derivative rhs_perturbed(const Ensemble& e, const ModelParams& p);
Derivative rhs_subsystem_a(const Ensemble& e, const ModelParams& p);
Derivative rhs_subsystem_b(const Ensemble& e, const ModelParams& p);

// Generalized Stuart-Landau flow; amplitudes are free to evolve.
std::vector<CVec> rhs_stuart_landau(const std::vector<CVec>& states, const CMat& omega,
                                    double kappa);

// Kuramoto model with adaptive couplings. lawHat is built from the configured
// coupling law through the chord map 2|sin(theta/2)|.
struct KuramotoDerivative {
    std::vector<double> dtheta;
    RealMat dkappa;
};
KuramotoDerivative rhs_kuramoto_adaptive(const std::vector<double>& theta,
                                         const std::vector<double>& nu, const RealMat& kappa,
                                         double gamma, double mu, CouplingLaw law);

// Gamma-hat: the coupling law evaluated at the chord of the phase difference.
double gamma_hat(CouplingLaw law, double dtheta);

// Lohe sphere model with adaptive couplings on real unit vectors.
struct LoheSphereDerivative {
    std::vector<std::vector<double>> dx;
    RealMat dkappa;
};
LoheSphereDerivative rhs_lohe_sphere_adaptive(const std::vector<std::vector<double>>& x,
                                              const RealMat& omega, const RealMat& kappa,
                                              double gamma, double mu, CouplingLaw law);

// Serial reference evaluators, kept for testing and benchmarking the
// OpenMP kernels against.
namespace ref {
Derivative rhs_full(const Ensemble& e, const ModelParams& p);
}

} // namespace lhs
