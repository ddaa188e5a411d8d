#pragma once

#include "lhs/core.hpp"

namespace lhs {

// w in C^{d+1}  ->  (Re w^1, ..., Re w^{d+1}, Im w^1, ..., Im w^{d+1})
std::vector<double> embed_real(const CVec& w);

// [[Re O, -Im O], [Im O, Re O]]; input must be skew-hermitian.
RealMat build_omega_tilde(const CMat& omega);

// d = 0 circle parametrization, z_j = e^{i theta_j}.
std::vector<CVec> circle_to_states(const std::vector<double>& theta);
// Inverse map; angles canonicalized to (-pi, pi]. z = 0 is an error.
std::vector<double> states_to_circle(const std::vector<CVec>& states);

// Normalizes near-unit-amplitude Stuart-Landau states onto the sphere.
// Amplitudes must lie within 1e-6 of 1.
std::vector<CVec> sl_restrict(const std::vector<CVec>& states);

// lambda_tilde = kappa / 2 + lambda, entrywise.
RealMat lambda_tilde_convert(const RealMat& kappa, const RealMat& lambda);
// lambda = lambda_tilde - kappa / 2; exact inverse of the above.
RealMat lambda_tilde_invert(const RealMat& kappa, const RealMat& lambda_tilde);

} // namespace lhs
