#include "lhs/integrate.hpp"

#include <cmath>

namespace lhs {

namespace {

void axpy(Ensemble& y, double a, const Derivative& d) {
    std::size_t n = y.size(), dim = y.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < dim; ++q) y.states[j][q] += a * d.dstates[j][q];
    for (std::size_t i = 0; i < y.kappa.data().size(); ++i) {
        y.kappa.data()[i] += a * d.dkappa.data()[i];
        y.lambda.data()[i] += a * d.dlambda.data()[i];
    }
}

void check_derivative(const Derivative& d) {
    for (std::size_t j = 0; j < d.dstates.size(); ++j)
        for (const auto& c : d.dstates[j])
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::runtime_error("NaN/Inf in state derivative at particle " +
                                         std::to_string(j));
    for (std::size_t i = 0; i < d.dkappa.data().size(); ++i)
        if (!std::isfinite(d.dkappa.data()[i]) || !std::isfinite(d.dlambda.data()[i]))
            throw std::runtime_error("NaN/Inf in gain derivative at entry " + std::to_string(i));
}

double max_diameter_sq_half(const Ensemble& e) {
    double m = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            m = std::max(m, 0.5 * dist_sq(e.states[i], e.states[j]));
    return m;
}

} // namespace

Ensemble step_rk4(const Ensemble& e, const ModelParams& p, ModelVariant variant, double dt,
                  bool renormalize, double* drift_max) {
    if (dt <= 0.0) throw std::invalid_argument("step_rk4: dt must be positive");

    Derivative k1 = rhs(variant, e, p);
    check_derivative(k1);

    Ensemble s2 = e;
    axpy(s2, 0.5 * dt, k1);
    Derivative k2 = rhs(variant, s2, p);

    Ensemble s3 = e;
    axpy(s3, 0.5 * dt, k2);
    Derivative k3 = rhs(variant, s3, p);

    Ensemble s4 = e;
    axpy(s4, dt, k3);
    Derivative k4 = rhs(variant, s4, p);

    Ensemble out = e;
    axpy(out, dt / 6.0, k1);
    axpy(out, dt / 3.0, k2);
    axpy(out, dt / 3.0, k3);
    axpy(out, dt / 6.0, k4);
    out.t = e.t + dt;
    require_finite(out);

    if (renormalize) {
        double worst = 0.0;
        for (auto& z : out.states) {
            double drift = 0.0;
            z = project_to_sphere(z, &drift);
            worst = std::max(worst, drift);
        }
        if (drift_max) *drift_max = worst;
    } else if (drift_max) {
        double worst = 0.0;
        for (const auto& z : out.states) worst = std::max(worst, std::abs(norm(z) - 1.0));
        *drift_max = worst;
    }
    return out;
}

Trajectory simulate(const Ensemble& e0, const ModelParams& p, ModelVariant variant,
                    const IntegratorSettings& st) {
    if (st.dt <= 0.0) throw std::invalid_argument("simulate: dt must be positive");
    if (st.record_every < 1) throw std::invalid_argument("simulate: record_every must be >= 1");

    Trajectory traj;
    traj.samples.push_back({e0, 0.0});

    auto steps = static_cast<std::size_t>(std::llround(st.t_end / st.dt));
    Ensemble cur = e0;
    double drift_acc = 0.0;
    for (std::size_t s = 1; s <= steps; ++s) {
        double drift = 0.0;
        try {
            cur = step_rk4(cur, p, variant, st.dt, st.renormalize, &drift);
        } catch (const std::exception& ex) {
            throw std::runtime_error("simulate: failure at t=" + std::to_string(cur.t) + ": " +
                                     ex.what());
        }
        // timestamps from step count, immune to repeated-addition drift
        cur.t = static_cast<double>(s) * st.dt;
        drift_acc = std::max(drift_acc, drift);
        if (s % st.record_every == 0 || s == steps) {
            traj.samples.push_back({cur, drift_acc});
            drift_acc = 0.0;
            if (st.stop_when_diameter_below > 0.0 &&
                max_diameter_sq_half(cur) < st.stop_when_diameter_below)
                break;
        }
    }
    return traj;
}

CMat matrix_exponential(const CMat& omega, double t) {
    std::size_t n = omega.size();
    CMat a(n);
    for (std::size_t i = 0; i < n * n; ++i) a.data()[i] = omega.data()[i] * t;

    // 1-norm for the squaring count
    double norm1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += std::abs(a(i, j));
        norm1 = std::max(norm1, col);
    }
    // scale down to norm <= 1/16 so the degree-12 series is exact to roundoff
    int squarings = 0;
    if (norm1 > 0.0625) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.0625)));
    double scale = std::ldexp(1.0, -squarings);
    for (auto& c : a.data()) c *= scale;

    auto matmul = [n](const CMat& x, const CMat& y) {
        CMat r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                cplx v = x(i, k);
                if (v == cplx{}) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    };

    CMat result(n), term(n);
    for (std::size_t i = 0; i < n; ++i) {
        result(i, i) = 1.0;
        term(i, i) = 1.0;
    }
    for (int k = 1; k <= 12; ++k) {
        term = matmul(term, a);
        for (auto& c : term.data()) c /= static_cast<double>(k);
        for (std::size_t i = 0; i < n * n; ++i) result.data()[i] += term.data()[i];
    }
    for (int s = 0; s < squarings; ++s) result = matmul(result, result);
    return result;
}

Trajectory splitting_compose(const Trajectory& w_traj, const CMat& omega) {
    Trajectory out = w_traj;
    if (omega.size() == 0) return out;
    for (auto& sample : out.samples) {
        CMat rot = matrix_exponential(omega, sample.ensemble.t);
        for (auto& z : sample.ensemble.states) {
            CVec r(z.size(), cplx{});
            for (std::size_t i = 0; i < rot.size(); ++i)
                for (std::size_t j = 0; j < rot.size(); ++j) r[i] += rot(i, j) * z[j];
            z = std::move(r);
        }
    }
    return out;
}

} // namespace lhs
