#include "lhs/reductions.hpp"

#include <cmath>

namespace lhs {

std::vector<double> embed_real(const CVec& w) {
    std::size_t d1 = w.size();
    std::vector<double> out(2 * d1);
    for (std::size_t a = 0; a < d1; ++a) {
        out[a] = w[a].real();
        out[d1 + a] = w[a].imag();
    }
    return out;
}

RealMat build_omega_tilde(const CMat& omega) {
    if (!is_skew_hermitian(omega))
        throw std::invalid_argument("build_omega_tilde: omega is not skew-hermitian");
    std::size_t n = omega.size();
    RealMat out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double re = omega(i, j).real(), im = omega(i, j).imag();
            out(i, j) = re;
            out(i, n + j) = -im;
            out(n + i, j) = im;
            out(n + i, n + j) = re;
        }
    return out;
}

std::vector<CVec> circle_to_states(const std::vector<double>& theta) {
    std::vector<CVec> out(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j)
        out[j] = CVec{std::polar(1.0, theta[j])};
    return out;
}

std::vector<double> states_to_circle(const std::vector<CVec>& states) {
    std::vector<double> out(states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (states[j].size() != 1)
            throw std::invalid_argument("states_to_circle: states must have d = 0");
        cplx z = states[j][0];
        if (std::abs(z) <= 1e-14)
            throw std::invalid_argument("states_to_circle: zero state at particle " +
                                        std::to_string(j));
        double th = std::arg(z); // already in (-pi, pi]
        if (th <= -M_PI) th = M_PI;
        out[j] = th;
    }
    return out;
}

std::vector<CVec> sl_restrict(const std::vector<CVec>& states) {
    std::vector<CVec> out(states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
        double r = norm(states[j]);
        if (std::abs(r - 1.0) > 1e-6)
            throw std::invalid_argument("sl_restrict: amplitude " + std::to_string(r) +
                                        " of particle " + std::to_string(j) +
                                        " outside the unit band");
        out[j] = project_to_sphere(states[j]);
    }
    return out;
}

RealMat lambda_tilde_convert(const RealMat& kappa, const RealMat& lambda) {
    if (kappa.rows() != lambda.rows() || kappa.cols() != lambda.cols())
        throw std::invalid_argument("lambda_tilde_convert: shape mismatch");
    RealMat out = lambda;
    for (std::size_t i = 0; i < out.data().size(); ++i)
        out.data()[i] += 0.5 * kappa.data()[i];
    return out;
}

RealMat lambda_tilde_invert(const RealMat& kappa, const RealMat& lambda_tilde) {
    if (kappa.rows() != lambda_tilde.rows() || kappa.cols() != lambda_tilde.cols())
        throw std::invalid_argument("lambda_tilde_invert: shape mismatch");
    RealMat out = lambda_tilde;
    for (std::size_t i = 0; i < out.data().size(); ++i)
        out.data()[i] -= 0.5 * kappa.data()[i];
    return out;
}

} // namespace lhs
