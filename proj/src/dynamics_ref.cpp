#include "lhs/dynamics.hpp"

namespace lhs::ref {

// Straight-line serial transcription of the full right-hand side, kept as the
// reference the parallel kernels are tested and benchmarked against.
Derivative rhs_full(const Ensemble& e, const ModelParams& p) {
    std::size_t n = e.size(), dim = e.dim();
    Derivative d;
    d.dstates.assign(n, CVec(dim));
    d.dkappa = RealMat::square(n);
    d.dlambda = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);

    for (std::size_t j = 0; j < n; ++j) {
        CVec acc(dim, cplx{});
        if (p.omega.size() == dim)
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b) acc[a] += p.omega(a, b) * e.states[j][b];
        cplx self = hermitian_inner(e.states[j], e.states[j]);
        cplx rot{};
        for (std::size_t k = 0; k < n; ++k) {
            cplx hjk = hermitian_inner(e.states[j], e.states[k]);
            cplx hkj = std::conj(hjk);
            for (std::size_t a = 0; a < dim; ++a)
                acc[a] += invN * e.kappa(j, k) * (self * e.states[k][a] - hkj * e.states[j][a]);
            rot += e.lambda(j, k) * (hjk - hkj);
        }
        rot *= invN;
        for (std::size_t a = 0; a < dim; ++a) acc[a] += rot * e.states[j][a];
        d.dstates[j] = std::move(acc);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            d.dkappa(i, j) = -p.gamma0 * e.kappa(i, j) +
                             p.mu0 * gamma_eval(p.law0, e.states[i], e.states[j]);
            d.dlambda(i, j) = -p.gamma1 * e.lambda(i, j) +
                              p.mu1 * gamma_eval(p.law1, e.states[i], e.states[j]);
        }
    return d;
}

} // namespace lhs::ref
