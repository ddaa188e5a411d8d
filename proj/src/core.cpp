#include "lhs/core.hpp"

#include <cmath>
#include <random>

namespace lhs {

cplx hermitian_inner(const CVec& z, const CVec& w) {
    if (z.size() != w.size())
        throw std::invalid_argument("hermitian_inner: dimension mismatch");
    cplx s{};
    for (std::size_t a = 0; a < z.size(); ++a) s += std::conj(z[a]) * w[a];
    return s;
}

double norm(const CVec& z) {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return std::sqrt(s);
}

double dist_sq(const CVec& z, const CVec& w) {
    if (z.size() != w.size())
        throw std::invalid_argument("dist_sq: dimension mismatch");
    double s = 0.0;
    for (std::size_t a = 0; a < z.size(); ++a) s += std::norm(z[a] - w[a]);
    return s;
}

Correlation correlation(const CVec& zi, const CVec& zj) {
    cplx h = hermitian_inner(zi, zj);
    return {h, h.real(), h.imag()};
}

double gamma_eval(CouplingLaw law, const CVec& z, const CVec& w) {
    switch (law) {
        case CouplingLaw::Zero: return 0.0;
        case CouplingLaw::AntiHebbian: return dist_sq(w, z);
        case CouplingLaw::Hebbian: return 1.0 - 0.5 * dist_sq(w, z);
        case CouplingLaw::NegHalfAntiHebbian: return -0.5 * dist_sq(w, z);
        case CouplingLaw::NegHalfHebbian: return -0.5 * (1.0 - 0.5 * dist_sq(w, z));
    }
    throw std::logic_error("gamma_eval: unknown law");
}

CVec project_to_sphere(const CVec& z, double* drift) {
    double n = norm(z);
    if (n <= 1e-14)
        throw std::domain_error("project_to_sphere: degenerate state (norm <= 1e-14)");
    if (drift) *drift = std::abs(n - 1.0);
    CVec out(z.size());
    for (std::size_t a = 0; a < z.size(); ++a) out[a] = z[a] / n;
    return out;
}

bool is_on_sphere(const CVec& z, double tol) {
    return std::abs(norm(z) - 1.0) <= tol;
}

bool is_skew_hermitian(const CMat& m, double tol) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (std::abs(m(i, j) + std::conj(m(j, i))) > tol) return false;
    return true;
}

void require_finite(const Ensemble& e) {
    for (std::size_t j = 0; j < e.size(); ++j)
        for (const auto& c : e.states[j])
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::runtime_error("non-finite state entry at particle " + std::to_string(j));
    for (double v : e.kappa.data())
        if (!std::isfinite(v)) throw std::runtime_error("non-finite kappa entry");
    for (double v : e.lambda.data())
        if (!std::isfinite(v)) throw std::runtime_error("non-finite lambda entry");
}

namespace {

Ensemble sample_once(const InitRecipe& r, std::mt19937_64& rng) {
    std::size_t dim = r.d + 1;
    CVec base = r.base;
    if (base.empty()) {
        base.assign(dim, cplx{});
        base[0] = 1.0;
    }
    if (base.size() != dim)
        throw std::invalid_argument("sample_initial: base dimension does not match d");
    base = project_to_sphere(base);

    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uk(r.kappa_lo, r.kappa_hi);
    std::uniform_real_distribution<double> ul(r.lambda_lo, r.lambda_hi);

    Ensemble e;
    e.t = 0.0;
    e.states.resize(r.N);
    for (std::size_t j = 0; j < r.N; ++j) {
        if (r.sigma == 0.0) {
            e.states[j] = base;
            continue;
        }
        CVec g(dim);
        for (auto& c : g) c = cplx(gauss(rng), gauss(rng));
        // tangent part: g - <base,g> base
        cplx proj = hermitian_inner(base, g);
        CVec z(dim);
        for (std::size_t a = 0; a < dim; ++a)
            z[a] = base[a] + r.sigma * (g[a] - proj * base[a]);
        e.states[j] = project_to_sphere(z);
    }
    e.kappa = RealMat::square(r.N);
    e.lambda = RealMat::square(r.N);
    for (std::size_t i = 0; i < r.N; ++i)
        for (std::size_t j = 0; j < r.N; ++j)
            e.kappa(i, j) = (r.kappa_lo == r.kappa_hi) ? r.kappa_lo : uk(rng);
    switch (r.lambda_rule) {
        case LambdaRule::Range:
            for (std::size_t i = 0; i < r.N; ++i)
                for (std::size_t j = 0; j < r.N; ++j)
                    e.lambda(i, j) = (r.lambda_lo == r.lambda_hi) ? r.lambda_lo : ul(rng);
            break;
        case LambdaRule::SlPair:
            for (std::size_t i = 0; i < r.N; ++i)
                for (std::size_t j = 0; j < r.N; ++j)
                    e.lambda(i, j) = -0.5 * e.kappa(i, j);
            break;
        case LambdaRule::UniformTilde:
            for (auto& v : e.lambda.data()) v = r.tilde_value;
            break;
    }
    return e;
}

} // namespace

Ensemble sample_initial(const InitRecipe& r, std::uint64_t seed) {
    if (r.N < 1) throw std::invalid_argument("sample_initial: N must be >= 1");
    std::mt19937_64 rng(seed);
    const int budget = 10000;
    for (int attempt = 0; attempt < budget; ++attempt) {
        Ensemble e = sample_once(r, rng);
        if (!r.predicate || r.predicate(e)) return e;
    }
    throw std::runtime_error("sample_initial: rejection budget exhausted; condition '" +
                             (r.predicate_name.empty() ? std::string("unnamed") : r.predicate_name) +
                             "' never satisfied in 10000 attempts");
}

} // namespace lhs
