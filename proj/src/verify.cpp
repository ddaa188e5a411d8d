#include "lhs/verify.hpp"
#include "lhs/reductions.hpp"

#include <cmath>
#include <random>

namespace lhs {

namespace {

double circ_dist(double a, double b) {
    double d = std::remainder(a - b, 2.0 * M_PI);
    return std::abs(d);
}

Ensemble random_unit_ensemble(std::size_t n, std::size_t d, std::uint64_t seed, double kappa) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Ensemble e;
    e.states.resize(n);
    for (auto& z : e.states) {
        z.resize(d + 1);
        for (auto& c : z) c = cplx(g(rng), g(rng));
        z = project_to_sphere(z);
    }
    e.kappa = RealMat::square(n, kappa);
    e.lambda = RealMat::square(n, -0.5 * kappa);
    return e;
}

double max_state_diff(const Ensemble& a, const Ensemble& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t q = 0; q < a.dim(); ++q)
            m = std::max(m, std::abs(a.states[j][q] - b.states[j][q]));
    return m;
}

// Generic fixed-step RK4 on a flat real vector; used for the real-model oracles.
template <class F>
std::vector<double> rk4_real(std::vector<double> y, double dt, std::size_t steps, F&& f) {
    std::size_t n = y.size();
    auto add = [n](std::vector<double> a, double c, const std::vector<double>& b) {
        for (std::size_t i = 0; i < n; ++i) a[i] += c * b[i];
        return a;
    };
    for (std::size_t s = 0; s < steps; ++s) {
        auto k1 = f(y);
        auto k2 = f(add(y, 0.5 * dt, k1));
        auto k3 = f(add(y, 0.5 * dt, k2));
        auto k4 = f(add(y, dt, k3));
        for (std::size_t i = 0; i < n; ++i)
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return y;
}

CheckResult bound(std::string name, double measured, double tolerance) {
    return {std::move(name), measured <= tolerance, measured, tolerance};
}

} // namespace

CMat random_skew_hermitian(std::size_t n, std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, scale);
    CMat m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = cplx(0.0, g(rng));
        for (std::size_t j = i + 1; j < n; ++j) {
            cplx v(g(rng), g(rng));
            m(i, j) = v;
            m(j, i) = -std::conj(v);
        }
    }
    return m;
}

std::vector<CheckResult> verify_invariants() {
    std::vector<CheckResult> out;

    // modulus conservation with renormalization off
    {
        InitRecipe r;
        r.N = 6;
        r.d = 2;
        r.sigma = 0.8;
        ModelParams p;
        p.omega = random_skew_hermitian(3, 11);
        p.gamma0 = 1.0;
        p.mu0 = 0.5;
        p.law0 = CouplingLaw::AntiHebbian;
        Ensemble e0 = sample_initial(r, 101);
        IntegratorSettings st{1e-3, 3.0, false, 50};
        Trajectory traj = simulate(e0, p, ModelVariant::FullLHS, st);
        double worst = 0.0;
        for (const auto& s : traj.samples)
            for (const auto& z : s.ensemble.states)
                worst = std::max(worst, std::abs(norm(z) - 1.0));
        out.push_back(bound("modulus_conservation", worst, 1e-8));
    }

    // full system with lambda = -kappa/2 reduces to the SL-pair flow exactly
    {
        Ensemble e = random_unit_ensemble(5, 3, 7, 0.8);
        ModelParams p;
        p.gamma0 = 1.0;
        p.mu0 = 0.5;
        p.law0 = CouplingLaw::AntiHebbian;
        p.law1 = CouplingLaw::NegHalfAntiHebbian;
        Derivative a = rhs_full(e, p);
        Derivative b = rhs_sl_pair(e, p);
        double worst = 0.0;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::size_t q = 0; q < e.dim(); ++q)
                worst = std::max(worst, std::abs(a.dstates[j][q] - b.dstates[j][q]));
        out.push_back(bound("sl_pair_reduction_identity", worst, 1e-14));
    }

    // kappa + 2 lambda propagates as e^{-gamma t}(kappa0 + 2 lambda0)
    {
        InitRecipe r;
        r.N = 4;
        r.d = 1;
        r.sigma = 0.6;
        r.kappa_lo = 0.8;
        r.kappa_hi = 1.2;
        r.lambda_rule = LambdaRule::SlPair;
        ModelParams p;
        p.gamma0 = p.gamma1 = 1.0;
        p.mu0 = 0.5;
        p.mu1 = 0.5;
        p.law0 = CouplingLaw::AntiHebbian;
        p.law1 = CouplingLaw::NegHalfAntiHebbian;
        Ensemble e0 = sample_initial(r, 5);
        IntegratorSettings st{1e-3, 3.0, true, 100};
        Trajectory traj = simulate(e0, p, ModelVariant::FullLHS, st);
        out.push_back(bound("sl_pair_propagation", sl_pair_defect(traj, 1.0), 1e-8));
    }

    // anti-Hebbian gain upper bound
    {
        InitRecipe r;
        r.N = 5;
        r.d = 2;
        r.sigma = 0.5;
        r.kappa_lo = 0.5;
        r.kappa_hi = 1.5;
        r.lambda_rule = LambdaRule::SlPair;
        ModelParams p;
        p.gamma0 = 1.0;
        p.mu0 = 1.0;
        p.law0 = CouplingLaw::AntiHebbian;
        Ensemble e0 = sample_initial(r, 21);
        double k0max = 0.0;
        for (double v : e0.kappa.data()) k0max = std::max(k0max, v);
        IntegratorSettings st{1e-3, 5.0, true, 100};
        Trajectory traj = simulate(e0, p, ModelVariant::SLPair, st);
        double worst = -1e300;
        for (const auto& s : traj.samples) {
            double cap = kappa_upper_bound(k0max, 1.0, 1.0, s.ensemble.t);
            for (double v : s.ensemble.kappa.data()) worst = std::max(worst, v - cap);
        }
        out.push_back(bound("gain_upper_bound", worst, 1e-8));
    }

    // OpenMP kernel vs serial reference: bitwise identical
    {
        Ensemble e = random_unit_ensemble(32, 4, 99, 1.0);
        ModelParams p;
        p.omega = random_skew_hermitian(5, 3);
        p.gamma0 = 1.0;
        p.gamma1 = 0.5;
        p.mu0 = 0.7;
        p.mu1 = 0.3;
        p.law0 = CouplingLaw::Hebbian;
        p.law1 = CouplingLaw::NegHalfHebbian;
        Derivative a = rhs_full(e, p);
        Derivative b = ref::rhs_full(e, p);
        double worst = 0.0;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::size_t q = 0; q < e.dim(); ++q)
                worst = std::max(worst, std::abs(a.dstates[j][q] - b.dstates[j][q]));
        for (std::size_t i = 0; i < a.dkappa.data().size(); ++i) {
            worst = std::max(worst, std::abs(a.dkappa.data()[i] - b.dkappa.data()[i]));
            worst = std::max(worst, std::abs(a.dlambda.data()[i] - b.dlambda.data()[i]));
        }
        out.push_back(bound("parallel_matches_reference", worst, 0.0));
    }

    // analytic dL/dt vs central difference
    {
        double worst = 0.0;
        for (std::uint64_t s = 0; s < 20; ++s) {
            Ensemble e = random_unit_ensemble(4, 2, 1000 + s, 1.0);
            ModelParams p;
            p.gamma0 = p.gamma1 = 1.0;
            p.mu0 = p.mu1 = 0.5;
            p.law0 = CouplingLaw::AntiHebbian;
            p.law1 = CouplingLaw::NegHalfAntiHebbian;
            double h = 1e-5;
            double analytic = dL_dt_analytic(e, p, ModelVariant::SLPair, 0, 1);
            // second-order one-sided difference built from two forward RK4 steps
            Ensemble fwd = step_rk4(e, p, ModelVariant::SLPair, h);
            Ensemble fwd2 = step_rk4(fwd, p, ModelVariant::SLPair, h);
            double l0 = lyapunov_L(e, 0, 1, p.mu0);
            double l1 = lyapunov_L(fwd, 0, 1, p.mu0);
            double l2 = lyapunov_L(fwd2, 0, 1, p.mu0);
            double numeric = (-3.0 * l0 + 4.0 * l1 - l2) / (2.0 * h);
            double scale = std::max(1.0, std::abs(analytic));
            worst = std::max(worst, std::abs(numeric - analytic) / scale);
        }
        out.push_back(bound("dLdt_consistency", worst, 1e-5));
    }

    // matrix exponential is unitary on skew-hermitian input
    {
        CMat omega = random_skew_hermitian(4, 17);
        CMat u = matrix_exponential(omega, 1.3);
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                cplx s{};
                for (std::size_t k = 0; k < 4; ++k) s += std::conj(u(k, i)) * u(k, j);
                worst = std::max(worst, std::abs(s - (i == j ? cplx{1.0} : cplx{})));
            }
        out.push_back(bound("matrix_exponential_unitary", worst, 1e-12));
    }
    return out;
}

std::vector<CheckResult> verify_reductions() {
    std::vector<CheckResult> out;

    // inner-product identity of the real embedding
    {
        std::mt19937_64 rng(31);
        std::normal_distribution<double> g(0.0, 1.0);
        double worst = 0.0;
        for (int rep = 0; rep < 50; ++rep) {
            CVec w(4), z(4);
            for (auto& c : w) c = cplx(g(rng), g(rng));
            for (auto& c : z) c = cplx(g(rng), g(rng));
            w = project_to_sphere(w);
            z = project_to_sphere(z);
            cplx lhs_sum = hermitian_inner(w, z) + hermitian_inner(z, w);
            auto we = embed_real(w), ze = embed_real(z);
            double dotwz = 0.0;
            for (std::size_t i = 0; i < we.size(); ++i) dotwz += we[i] * ze[i];
            worst = std::max(worst, std::abs(lhs_sum - cplx(2.0 * dotwz)));
        }
        out.push_back(bound("embedding_inner_product_identity", worst, 1e-14));
    }

    // commuting diagram of the embedded free flow
    {
        CMat omega = random_skew_hermitian(3, 47);
        RealMat ot = build_omega_tilde(omega);
        std::mt19937_64 rng(48);
        std::normal_distribution<double> g(0.0, 1.0);
        CVec w(3);
        for (auto& c : w) c = cplx(g(rng), g(rng));
        w = project_to_sphere(w);
        CVec ow(3, cplx{});
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) ow[i] += omega(i, j) * w[j];
        auto left = embed_real(ow);
        auto we = embed_real(w);
        double worst = 0.0;
        for (std::size_t i = 0; i < 6; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < 6; ++j) s += ot(i, j) * we[j];
            worst = std::max(worst, std::abs(s - left[i]));
        }
        out.push_back(bound("omega_tilde_commuting_diagram", worst, 1e-12));
    }

    // circle round trip
    {
        std::vector<double> theta{0.0, 0.5, -2.9, 3.1, M_PI};
        auto back = states_to_circle(circle_to_states(theta));
        double worst = 0.0;
        for (std::size_t j = 0; j < theta.size(); ++j)
            worst = std::max(worst, circ_dist(theta[j], back[j]));
        out.push_back(bound("circle_round_trip", worst, 1e-12));
    }

    // embedding equivalence: complex flow vs embedded real flow over T = 2
    {
        std::size_t N = 4, d = 2;
        double kap = 1.0, dt = 1e-3;
        Ensemble e0 = random_unit_ensemble(N, d, 71, kap);
        ModelParams p;
        p.omega = random_skew_hermitian(d + 1, 72, 0.5);
        Ensemble cplx_run = e0;
        IntegratorSettings st{dt, 2.0, false, 2000};
        Trajectory traj = simulate(e0, p, ModelVariant::FullLHS, st);
        cplx_run = traj.samples.back().ensemble;

        RealMat ot = build_omega_tilde(p.omega);
        std::size_t rd = 2 * (d + 1);
        std::vector<double> y(N * rd);
        for (std::size_t j = 0; j < N; ++j) {
            auto ve = embed_real(e0.states[j]);
            std::copy(ve.begin(), ve.end(), y.begin() + j * rd);
        }
        RealMat kmat = RealMat::square(N, kap);
        auto f = [&](const std::vector<double>& yy) {
            std::vector<std::vector<double>> x(N, std::vector<double>(rd));
            for (std::size_t j = 0; j < N; ++j)
                std::copy(yy.begin() + j * rd, yy.begin() + (j + 1) * rd, x[j].begin());
            auto dxs = rhs_lohe_sphere_adaptive(x, ot, kmat, 0.0, 0.0, CouplingLaw::Zero);
            std::vector<double> dy(N * rd);
            for (std::size_t j = 0; j < N; ++j)
                std::copy(dxs.dx[j].begin(), dxs.dx[j].end(), dy.begin() + j * rd);
            return dy;
        };
        auto yT = rk4_real(y, dt, 2000, f);
        double worst = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            auto ve = embed_real(cplx_run.states[j]);
            for (std::size_t q = 0; q < rd; ++q)
                worst = std::max(worst, std::abs(ve[q] - yT[j * rd + q]));
        }
        out.push_back(bound("embedding_equivalence", worst, 1e-8));
    }

    // d = 0 circle flow vs the adaptive Kuramoto model over T = 2
    {
        std::size_t N = 5;
        double dt = 1e-3;
        std::mt19937_64 rng(81);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> theta(N);
        for (auto& th : theta) th = u(rng);
        Ensemble e0;
        e0.states = circle_to_states(theta);
        e0.kappa = RealMat::square(N);
        for (auto& v : e0.kappa.data()) v = 0.5 + 0.25 * u(rng);
        e0.lambda = RealMat::square(N);
        ModelParams p;
        p.gamma0 = 1.0;
        p.mu0 = 0.5;
        p.law0 = CouplingLaw::AntiHebbian;
        IntegratorSettings st{dt, 2.0, false, 2000};
        Trajectory traj = simulate(e0, p, ModelVariant::SubsystemA, st);
        auto thetaA = states_to_circle(traj.samples.back().ensemble.states);

        // gain mapping: the circle flow carries twice the effective coupling
        std::vector<double> y(N + N * N);
        std::copy(theta.begin(), theta.end(), y.begin());
        for (std::size_t i = 0; i < N * N; ++i) y[N + i] = 2.0 * e0.kappa.data()[i];
        std::vector<double> nu(N, 0.0);
        auto f = [&](const std::vector<double>& yy) {
            std::vector<double> th(yy.begin(), yy.begin() + N);
            RealMat km = RealMat::square(N);
            std::copy(yy.begin() + N, yy.end(), km.data().begin());
            auto d = rhs_kuramoto_adaptive(th, nu, km, p.gamma0, 2.0 * p.mu0, p.law0);
            std::vector<double> dy(N + N * N);
            std::copy(d.dtheta.begin(), d.dtheta.end(), dy.begin());
            std::copy(d.dkappa.data().begin(), d.dkappa.data().end(), dy.begin() + N);
            return dy;
        };
        auto yT = rk4_real(y, dt, 2000, f);
        double worst = 0.0;
        for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, circ_dist(thetaA[j], yT[j]));
        out.push_back(bound("kuramoto_equivalence", worst, 1e-8));
    }

    // sphere-restricted Stuart-Landau flow equals the uniform-gain pair flow
    {
        double worst = 0.0;
        std::mt19937_64 rng(91);
        std::normal_distribution<double> g(0.0, 1.0);
        for (int rep = 0; rep < 100; ++rep) {
            std::size_t N = 4, d = 2;
            std::vector<CVec> raw(N, CVec(d + 1));
            for (auto& z : raw) {
                for (auto& c : z) c = cplx(g(rng), g(rng));
                z = project_to_sphere(z);
            }
            double kap = 0.9;
            auto dz = rhs_stuart_landau(raw, CMat{}, kap);
            Ensemble e;
            e.states = sl_restrict(raw);
            e.kappa = RealMat::square(N, kap);
            e.lambda = RealMat::square(N, -0.5 * kap);
            Derivative pair = rhs_sl_pair(e, ModelParams{});
            for (std::size_t j = 0; j < N; ++j) {
                // tangential part of the Stuart-Landau derivative
                cplx ip{};
                for (std::size_t q = 0; q <= d; ++q) ip += std::conj(e.states[j][q]) * dz[j][q];
                double radial = ip.real();
                for (std::size_t q = 0; q <= d; ++q) {
                    cplx tang = dz[j][q] - radial * e.states[j][q];
                    worst = std::max(worst, std::abs(tang - pair.dstates[j][q]));
                }
            }
        }
        out.push_back(bound("stuart_landau_restriction", worst, 1e-10));
    }

    // real initial data with real antisymmetric omega stays real
    {
        std::size_t N = 4, d = 2;
        std::mt19937_64 rng(55);
        std::normal_distribution<double> g(0.0, 1.0);
        Ensemble e0;
        e0.states.resize(N);
        for (auto& z : e0.states) {
            z.resize(d + 1);
            for (auto& c : z) c = cplx(g(rng), 0.0);
            z = project_to_sphere(z);
        }
        e0.kappa = RealMat::square(N, 1.0);
        e0.lambda = RealMat::square(N);
        ModelParams p;
        p.omega = CMat(d + 1);
        RealMat ar(d + 1, d + 1);
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t j = i + 1; j <= d; ++j) {
                double v = g(rng);
                ar(i, j) = v;
                ar(j, i) = -v;
            }
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t j = 0; j <= d; ++j) p.omega(i, j) = cplx(ar(i, j), 0.0);
        p.gamma0 = 1.0;
        p.mu0 = 0.5;
        p.law0 = CouplingLaw::AntiHebbian;
        IntegratorSettings st{1e-3, 2.0, false, 100};
        Trajectory traj = simulate(e0, p, ModelVariant::SubsystemA, st);
        double worst = 0.0;
        for (const auto& s : traj.samples)
            for (const auto& z : s.ensemble.states)
                for (const auto& c : z) worst = std::max(worst, std::abs(c.imag()));
        out.push_back(bound("real_invariance", worst, 1e-10));
    }

    // solution splitting z(t) = exp(omega t) w(t)
    {
        InitRecipe r;
        r.N = 4;
        r.d = 2;
        r.sigma = 0.6;
        Ensemble e0 = sample_initial(r, 121);
        ModelParams p;
        p.omega = random_skew_hermitian(3, 122, 0.5);
        p.gamma0 = 1.0;
        p.mu0 = 0.5;
        p.law0 = CouplingLaw::AntiHebbian;
        IntegratorSettings st{1e-3, 2.0, false, 200};
        Trajectory full = simulate(e0, p, ModelVariant::FullLHS, st);
        ModelParams p0 = p;
        p0.omega = CMat{};
        Trajectory w = simulate(e0, p0, ModelVariant::FullLHS, st);
        Trajectory composed = splitting_compose(w, p.omega);
        double worst = 0.0;
        for (std::size_t s = 0; s < full.samples.size(); ++s)
            worst = std::max(worst, max_state_diff(full.samples[s].ensemble,
                                                   composed.samples[s].ensemble));
        out.push_back(bound("solution_splitting", worst, 1e-6));
    }
    return out;
}

std::vector<CheckResult> verify_theorems() {
    std::vector<CheckResult> out;

    ModelParams sl;
    sl.gamma0 = sl.gamma1 = 1.0;
    sl.mu0 = sl.mu1 = 1.0;
    sl.law0 = CouplingLaw::AntiHebbian;
    sl.law1 = CouplingLaw::NegHalfAntiHebbian;

    // Lyapunov monotonicity under the small-data hypothesis
    {
        InitRecipe r;
        r.N = 5;
        r.d = 2;
        r.sigma = 0.4;
        r.kappa_lo = 0.8;
        r.kappa_hi = 1.2;
        r.lambda_rule = LambdaRule::SlPair;
        r.predicate = [&](const Ensemble& e) { return lyapunov_L_max(e, 1.0) < 0.5; };
        r.predicate_name = "max L < 0.5";
        Ensemble e0 = sample_initial(r, 301);
        IntegratorSettings st{1e-3, 20.0, true, 200};
        Trajectory traj = simulate(e0, sl, ModelVariant::SLPair, st);
        double worst_increase = -1e300;
        std::vector<double> prev;
        for (const auto& s : traj.samples) {
            std::vector<double> cur;
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    cur.push_back(lyapunov_L(s.ensemble, i, j, 1.0));
            if (!prev.empty())
                for (std::size_t q = 0; q < cur.size(); ++q)
                    worst_increase = std::max(worst_increase, cur[q] - prev[q]);
            prev = std::move(cur);
        }
        out.push_back(bound("lyapunov_monotone", worst_increase, 1e-10));
    }

    // feasibility arithmetic for the Hebbian window
    {
        Ensemble e;
        e.states.assign(4, CVec{1.0, 0.0});
        // place one particle so the pair diameter 1 - Re<z0,z1> is exactly 0.3
        double re = 1.0 - 0.3;
        e.states[1] = CVec{re, std::sqrt(1.0 - re * re)};
        e.kappa = RealMat::square(4, 1.2);
        e.lambda = RealMat::square(4);
        ModelParams p;
        p.gamma0 = p.gamma1 = 1.0;
        p.mu0 = p.mu1 = 2.0;
        p.law0 = CouplingLaw::Hebbian;
        p.law1 = CouplingLaw::Zero;
        auto rep = check_theorem(e, p, TheoremTag::T32);
        out.push_back({"hebbian_window_infeasible_case", !rep.satisfied,
                       rep.satisfied ? 1.0 : 0.0, 0.0});

        e.kappa = RealMat::square(4, 0.95);
        re = 1.0 - 0.05;
        e.states[1] = CVec{re, std::sqrt(1.0 - re * re)};
        p.mu0 = p.mu1 = 1.0;
        auto rep2 = check_theorem(e, p, TheoremTag::T32);
        out.push_back({"hebbian_window_feasible_case", rep2.satisfied,
                       rep2.satisfied ? 0.0 : 1.0, 0.0});
    }

    // lambda-tilde closed-form decay in the perturbed system
    {
        InitRecipe r;
        r.N = 4;
        r.d = 2;
        r.sigma = 0.3;
        r.kappa_lo = 0.9;
        r.kappa_hi = 1.1;
        r.lambda_rule = LambdaRule::UniformTilde;
        r.tilde_value = 0.05;
        Ensemble e0 = sample_initial(r, 401);
        IntegratorSettings st{1e-3, 5.0, true, 100};
        Trajectory traj = simulate(e0, sl, ModelVariant::Perturbed, st);
        double worst = 0.0;
        for (const auto& s : traj.samples) {
            double expect = lambda_tilde_closed_form(0.05, 1.0, s.ensemble.t);
            for (double v : s.ensemble.lambda.data())
                worst = std::max(worst, std::abs(v - expect));
        }
        out.push_back(bound("lambda_tilde_decay", worst, 1e-8));
    }

    // Riccati envelope domination in the Hebbian regime
    {
        InitRecipe r;
        r.N = 5;
        r.d = 2;
        r.sigma = 0.1;
        r.kappa_lo = 0.92;
        r.kappa_hi = 0.98;
        r.lambda_rule = LambdaRule::SlPair;
        r.predicate = [](const Ensemble& e) { return diameter_D(e).first <= 0.05; };
        r.predicate_name = "D0 <= 0.05";
        ModelParams p;
        p.gamma0 = p.gamma1 = 1.0;
        p.mu0 = p.mu1 = 1.0;
        p.law0 = CouplingLaw::Hebbian;
        p.law1 = CouplingLaw::NegHalfHebbian;
        Ensemble e0 = sample_initial(r, 501);
        auto rep = check_theorem(e0, p, TheoremTag::T32);
        if (!rep.satisfied || !rep.feasible_kappa) {
            out.push_back({"riccati_envelope", false, 0.0, 0.0});
        } else {
            double kap = *rep.feasible_kappa;
            double kM = 2.0 * p.mu0 * kap / (2.0 * p.mu0 - p.gamma0 * kap);
            double km = kap;
            double D0 = diameter_D(e0).first;
            IntegratorSettings st{1e-3, 10.0, true, 100};
            Trajectory traj = simulate(e0, p, ModelVariant::SLPair, st);
            double worst_ratio = 0.0;
            for (const auto& s : traj.samples) {
                double env = riccati_envelope(D0, km, kM, 0.0, s.ensemble.t);
                worst_ratio = std::max(worst_ratio, diameter_D(s.ensemble).first / env);
            }
            out.push_back(bound("riccati_envelope", worst_ratio, 1.0 + 1e-6));
        }
    }
    return out;
}

} // namespace lhs
