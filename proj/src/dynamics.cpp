#include "lhs/dynamics.hpp"

#include <cmath>

namespace lhs {

namespace {

bool omega_is_zero(const CMat& m) {
    if (m.size() == 0) return true;
    for (const auto& c : m.data())
        if (c != cplx{}) return false;
    return true;
}

CVec apply_omega(const CMat& m, const CVec& z) {
    CVec out(z.size(), cplx{});
    if (m.size() == 0) return out;
    if (m.size() != z.size())
        throw std::invalid_argument("omega dimension does not match state dimension");
    for (std::size_t i = 0; i < m.size(); ++i) {
        cplx s{};
        for (std::size_t j = 0; j < m.size(); ++j) s += m(i, j) * z[j];
        out[i] = s;
    }
    return out;
}

// Gram matrix h_ij = <z_i, z_j>; lower triangle mirrored by conjugation so
// conjugate symmetry is exact.
CMat gram(const std::vector<CVec>& states) {
    std::size_t n = states.size();
    CMat h(n);
    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i; j < n; ++j) {
            cplx v = hermitian_inner(states[i], states[j]);
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

void check_shapes(const Ensemble& e) {
    std::size_t n = e.size();
    if (n < 1) throw std::invalid_argument("empty ensemble");
    std::size_t dim = e.dim();
    for (const auto& z : e.states)
        if (z.size() != dim) throw std::invalid_argument("ragged state dimensions");
    if (e.kappa.rows() != n || e.kappa.cols() != n)
        throw std::invalid_argument("kappa shape mismatch");
    if (e.lambda.rows() != n || e.lambda.cols() != n)
        throw std::invalid_argument("lambda shape mismatch");
}

void gain_block(const Ensemble& e, double gamma, double mu, CouplingLaw law, const RealMat& g,
                RealMat& dg) {
    std::size_t n = e.size();
    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < n; ++j)
            dg(i, j) = -gamma * g(i, j) + mu * gamma_eval(law, e.states[i], e.states[j]);
    }
}

} // namespace

Derivative rhs_full(const Ensemble& e, const ModelParams& p) {
    check_shapes(e);
    std::size_t n = e.size(), dim = e.dim();
    CMat h = gram(e.states);
    Derivative d;
    d.dstates.assign(n, CVec(dim));
    d.dkappa = RealMat::square(n);
    d.dlambda = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);

    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(n); ++jj) {
        auto j = static_cast<std::size_t>(jj);
        CVec acc = apply_omega(p.omega, e.states[j]);
        cplx self = h(j, j); // evaluated, not assumed 1
        cplx rot{};
        for (std::size_t k = 0; k < n; ++k) {
            cplx hkj = h(k, j);
            double kap = e.kappa(j, k);
            for (std::size_t a = 0; a < dim; ++a)
                acc[a] += invN * kap * (self * e.states[k][a] - hkj * e.states[j][a]);
            rot += e.lambda(j, k) * (h(j, k) - h(k, j));
        }
        rot *= invN;
        for (std::size_t a = 0; a < dim; ++a) acc[a] += rot * e.states[j][a];
        d.dstates[j] = std::move(acc);
    }
    gain_block(e, p.gamma0, p.mu0, p.law0, e.kappa, d.dkappa);
    gain_block(e, p.gamma1, p.mu1, p.law1, e.lambda, d.dlambda);
    return d;
}

Derivative rhs_sl_pair(const Ensemble& e, const ModelParams& p) {
    check_shapes(e);
    if (!omega_is_zero(p.omega))
        throw std::invalid_argument("rhs_sl_pair: variant requires omega = 0");
    std::size_t n = e.size(), dim = e.dim();
    CMat h = gram(e.states);
    Derivative d;
    d.dstates.assign(n, CVec(dim));
    d.dkappa = RealMat::square(n);
    d.dlambda = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);

    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(n); ++jj) {
        auto j = static_cast<std::size_t>(jj);
        CVec acc(dim, cplx{});
        cplx self = h(j, j);
        for (std::size_t k = 0; k < n; ++k) {
            double kap = e.kappa(j, k);
            cplx coef = 0.5 * (h(j, k) + h(k, j));
            for (std::size_t a = 0; a < dim; ++a)
                acc[a] += invN * kap * (self * e.states[k][a] - coef * e.states[j][a]);
        }
        d.dstates[j] = std::move(acc);
    }
    gain_block(e, p.gamma0, p.mu0, p.law0, e.kappa, d.dkappa);
    return d;
}

Derivative rhs_perturbed(const Ensemble& e, const ModelParams& p) {
    check_shapes(e);
    if (!omega_is_zero(p.omega))
        throw std::invalid_argument("rhs_perturbed: variant requires omega = 0");
    if (p.gamma0 != p.gamma1 || p.mu0 != p.mu1)
        throw std::invalid_argument(
            "rhs_perturbed: requires gamma0 == gamma1 and mu0 == mu1");
    std::size_t n = e.size(), dim = e.dim();
    CMat h = gram(e.states);
    Derivative d;
    d.dstates.assign(n, CVec(dim));
    d.dkappa = RealMat::square(n);
    d.dlambda = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);

    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(n); ++jj) {
        auto j = static_cast<std::size_t>(jj);
        CVec acc(dim, cplx{});
        cplx self = h(j, j);
        cplx rot{};
        for (std::size_t k = 0; k < n; ++k) {
            double kap = e.kappa(j, k);
            cplx coef = 0.5 * (h(j, k) + h(k, j));
            for (std::size_t a = 0; a < dim; ++a)
                acc[a] += invN * kap * (self * e.states[k][a] - coef * e.states[j][a]);
            rot += e.lambda(j, k) * (h(j, k) - h(k, j)); // lambda block holds lambda-tilde
        }
        rot *= invN;
        for (std::size_t a = 0; a < dim; ++a) acc[a] += rot * e.states[j][a];
        d.dstates[j] = std::move(acc);
    }
    gain_block(e, p.gamma0, p.mu0, p.law0, e.kappa, d.dkappa);
    // dlambda-tilde = -gamma lt + mu GammaTilde, GammaTilde = Gamma0/2 + Gamma1
    std::size_t nn = n;
    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(nn); ++ii) {
        auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < nn; ++j) {
            double gtilde = 0.5 * gamma_eval(p.law0, e.states[i], e.states[j]) +
                            gamma_eval(p.law1, e.states[i], e.states[j]);
            d.dlambda(i, j) = -p.gamma1 * e.lambda(i, j) + p.mu1 * gtilde;
        }
    }
    return d;
}

Derivative rhs_subsystem_a(const Ensemble& e, const ModelParams& p) {
    check_shapes(e);
    std::size_t n = e.size(), dim = e.dim();
    CMat h = gram(e.states);
    Derivative d;
    d.dstates.assign(n, CVec(dim));
    d.dkappa = RealMat::square(n);
    d.dlambda = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);

    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(n); ++jj) {
        auto j = static_cast<std::size_t>(jj);
        CVec acc = apply_omega(p.omega, e.states[j]);
        cplx self = h(j, j);
        for (std::size_t k = 0; k < n; ++k) {
            double kap = e.kappa(j, k);
            cplx hkj = h(k, j);
            for (std::size_t a = 0; a < dim; ++a)
                acc[a] += invN * kap * (self * e.states[k][a] - hkj * e.states[j][a]);
        }
        d.dstates[j] = std::move(acc);
    }
    gain_block(e, p.gamma0, p.mu0, p.law0, e.kappa, d.dkappa);
    return d;
}

Derivative rhs_subsystem_b(const Ensemble& e, const ModelParams& p) {
    check_shapes(e);
    std::size_t n = e.size(), dim = e.dim();
    CMat h = gram(e.states);
    Derivative d;
    d.dstates.assign(n, CVec(dim));
    d.dkappa = RealMat::square(n);
    d.dlambda = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);

    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(n); ++jj) {
        auto j = static_cast<std::size_t>(jj);
        CVec acc = apply_omega(p.omega, e.states[j]);
        cplx rot{};
        for (std::size_t k = 0; k < n; ++k)
            rot += e.lambda(j, k) * (h(j, k) - h(k, j));
        rot *= invN;
        for (std::size_t a = 0; a < dim; ++a) acc[a] += rot * e.states[j][a];
        d.dstates[j] = std::move(acc);
    }
    gain_block(e, p.gamma1, p.mu1, p.law1, e.lambda, d.dlambda);
    return d;
}

Derivative rhs(ModelVariant variant, const Ensemble& e, const ModelParams& p) {
    switch (variant) {
        case ModelVariant::FullLHS: return rhs_full(e, p);
        case ModelVariant::SLPair: return rhs_sl_pair(e, p);
        case ModelVariant::Perturbed: return rhs_perturbed(e, p);
        case ModelVariant::SubsystemA: return rhs_subsystem_a(e, p);
        case ModelVariant::SubsystemB: return rhs_subsystem_b(e, p);
    }
    throw std::logic_error("rhs: unknown variant");
}

std::vector<CVec> rhs_stuart_landau(const std::vector<CVec>& states, const CMat& omega,
                                    double kappa) {
    std::size_t n = states.size();
    std::vector<CVec> d(n);
    double invN = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const CVec& z = states[j];
        double r2 = 0.0;
        for (const auto& c : z) r2 += std::norm(c);
        CVec acc = apply_omega(omega, z);
        for (std::size_t a = 0; a < z.size(); ++a) acc[a] += (1.0 - r2) * z[a];
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < z.size(); ++a)
                acc[a] += kappa * invN * (states[k][a] - z[a]);
        d[j] = std::move(acc);
    }
    return d;
}

double gamma_hat(CouplingLaw law, double dtheta) {
    double chord2 = 4.0 * std::pow(std::sin(0.5 * dtheta), 2);
    switch (law) {
        case CouplingLaw::Zero: return 0.0;
        case CouplingLaw::AntiHebbian: return chord2;
        case CouplingLaw::Hebbian: return 1.0 - 0.5 * chord2;
        case CouplingLaw::NegHalfAntiHebbian: return -0.5 * chord2;
        case CouplingLaw::NegHalfHebbian: return -0.5 * (1.0 - 0.5 * chord2);
    }
    throw std::logic_error("gamma_hat: unknown law");
}

KuramotoDerivative rhs_kuramoto_adaptive(const std::vector<double>& theta,
                                         const std::vector<double>& nu, const RealMat& kappa,
                                         double gamma, double mu, CouplingLaw law) {
    std::size_t n = theta.size();
    KuramotoDerivative d;
    d.dtheta.assign(n, 0.0);
    d.dkappa = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = nu[j];
        for (std::size_t l = 0; l < n; ++l)
            s += invN * kappa(j, l) * std::sin(theta[l] - theta[j]);
        d.dtheta[j] = s;
        for (std::size_t k = 0; k < n; ++k)
            d.dkappa(j, k) = -gamma * kappa(j, k) + mu * gamma_hat(law, theta[k] - theta[j]);
    }
    return d;
}

LoheSphereDerivative rhs_lohe_sphere_adaptive(const std::vector<std::vector<double>>& x,
                                              const RealMat& omega, const RealMat& kappa,
                                              double gamma, double mu, CouplingLaw law) {
    std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("empty ensemble");
    std::size_t dim = x.front().size();
    for (std::size_t i = 0; i < omega.rows(); ++i)
        for (std::size_t j = 0; j < omega.cols(); ++j)
            if (std::abs(omega(i, j) + omega(j, i)) > 1e-12)
                throw std::invalid_argument("rhs_lohe_sphere_adaptive: omega not antisymmetric");

    auto dot = [dim](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t q = 0; q < dim; ++q) s += a[q] * b[q];
        return s;
    };
    LoheSphereDerivative d;
    d.dx.assign(n, std::vector<double>(dim, 0.0));
    d.dkappa = RealMat::square(n);
    double invN = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> acc(dim, 0.0);
        if (omega.rows() == dim)
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b) acc[a] += omega(a, b) * x[j][b];
        double self = dot(x[j], x[j]);
        for (std::size_t k = 0; k < n; ++k) {
            double xkj = dot(x[k], x[j]);
            for (std::size_t a = 0; a < dim; ++a)
                acc[a] += invN * kappa(j, k) * (self * x[k][a] - xkj * x[j][a]);
        }
        d.dx[j] = std::move(acc);
        for (std::size_t k = 0; k < n; ++k) {
            double dist2 = 0.0;
            for (std::size_t a = 0; a < dim; ++a)
                dist2 += (x[j][a] - x[k][a]) * (x[j][a] - x[k][a]);
            double g;
            switch (law) {
                case CouplingLaw::Zero: g = 0.0; break;
                case CouplingLaw::AntiHebbian: g = dist2; break;
                case CouplingLaw::Hebbian: g = 1.0 - 0.5 * dist2; break;
                case CouplingLaw::NegHalfAntiHebbian: g = -0.5 * dist2; break;
                case CouplingLaw::NegHalfHebbian: g = -0.5 * (1.0 - 0.5 * dist2); break;
                default: throw std::logic_error("unknown law");
            }
            d.dkappa(j, k) = -gamma * kappa(j, k) + mu * g;
        }
    }
    return d;
}

} // namespace lhs
