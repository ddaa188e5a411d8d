// End-to-end acceptance gate: one line per criterion, nonzero exit on failure.
#include "lhs/config.hpp"
#include "lhs/reductions.hpp"
#include "lhs/textio.hpp"
#include "lhs/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

using namespace lhs;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

double max_state_diff(const Ensemble& a, const Ensemble& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t q = 0; q < a.dim(); ++q)
            m = std::max(m, std::abs(a.states[j][q] - b.states[j][q]));
    return m;
}

double max_pair_dist(const Ensemble& e) {
    double m = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            m = std::max(m, std::sqrt(dist_sq(e.states[i], e.states[j])));
    return m;
}

double min_pair_R(const Ensemble& e) {
    double m = 2.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            m = std::min(m, correlation(e.states[i], e.states[j]).R);
    return m;
}

std::vector<double> all_pair_L(const Ensemble& e, double mu) {
    std::vector<double> out;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) out.push_back(lyapunov_L(e, i, j, mu));
    return out;
}

// worst pairwise Lyapunov increase between consecutive samples
double worst_L_increase(const Trajectory& traj, double mu) {
    double worst = -1e300;
    std::vector<double> prev;
    for (const auto& s : traj.samples) {
        std::vector<double> cur = all_pair_L(s.ensemble, mu);
        if (!prev.empty())
            for (std::size_t q = 0; q < cur.size(); ++q)
                worst = std::max(worst, cur[q] - prev[q]);
        prev = std::move(cur);
    }
    return worst;
}

double gain_bound_violation(const Trajectory& traj, double gamma, double mu) {
    const RealMat& k0 = traj.samples.front().ensemble.kappa;
    double worst = -1e300;
    for (const auto& s : traj.samples)
        for (std::size_t i = 0; i < k0.data().size(); ++i) {
            double cap = kappa_upper_bound(k0.data()[i], gamma, mu, s.ensemble.t);
            worst = std::max(worst, s.ensemble.kappa.data()[i] - cap);
        }
    return worst;
}

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

Ensemble random_unit_ensemble(std::size_t n, std::size_t d, std::uint64_t seed, double kappa,
                              double lambda) {
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
    e.lambda = RealMat::square(n, lambda);
    return e;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    auto record = [&](const std::string& name, std::function<std::pair<bool, std::string>()> fn) {
        Criterion c;
        c.name = name;
        try {
            auto [ok, detail] = fn();
            c.pass = ok;
            c.detail = detail;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        results.push_back(c);
    };

    // shared setup for criteria 1-2: free-flow run with renormalization off
    ModelParams p_free;
    p_free.omega = random_skew_hermitian(4, 2024);
    p_free.gamma0 = p_free.gamma1 = 1.0;
    p_free.mu0 = p_free.mu1 = 0.5;
    p_free.law0 = CouplingLaw::AntiHebbian;
    p_free.law1 = CouplingLaw::NegHalfAntiHebbian;
    InitRecipe rec12;
    rec12.N = 8;
    rec12.d = 3;
    rec12.sigma = 0.8;
    rec12.kappa_lo = 0.8;
    rec12.kappa_hi = 1.2;
    rec12.lambda_rule = LambdaRule::SlPair;
    Ensemble e12 = sample_initial(rec12, 11);
    IntegratorSettings st12{1e-3, 10.0, false, 100};
    Trajectory traj_omega = simulate(e12, p_free, ModelVariant::FullLHS, st12);

    record("01 modulus conservation", [&]() -> std::pair<bool, std::string> {
        double worst = 0.0;
        for (const auto& s : traj_omega.samples)
            for (const auto& z : s.ensemble.states)
                worst = std::max(worst, std::abs(norm(z) - 1.0));
        return {worst <= 1e-8, "max drift " + fmt17(worst) + " (tol 1e-8)"};
    });

    record("02 solution splitting", [&]() -> std::pair<bool, std::string> {
        ModelParams p0 = p_free;
        p0.omega = CMat{};
        IntegratorSettings st{1e-3, 5.0, false, 100};
        Trajectory w = simulate(e12, p0, ModelVariant::FullLHS, st);
        Trajectory composed = splitting_compose(w, p_free.omega);
        double worst = 0.0;
        for (std::size_t s = 0; s < composed.samples.size(); ++s)
            worst = std::max(worst, max_state_diff(traj_omega.samples[s].ensemble,
                                                   composed.samples[s].ensemble));
        return {worst <= 1e-6, "max state gap " + fmt17(worst) + " (tol 1e-6)"};
    });

    record("03 pair-gain propagation", [&]() -> std::pair<bool, std::string> {
        ModelParams p = p_free;
        p.omega = CMat{};
        IntegratorSettings st{1e-3, 10.0, true, 100};
        // (a) lambda0 = -kappa0/2: kappa + 2 lambda pinned at zero
        InitRecipe ra = rec12;
        ra.N = 6;
        ra.d = 2;
        Ensemble ea = sample_initial(ra, 21);
        double da = sl_pair_defect(simulate(ea, p, ModelVariant::FullLHS, st), 1.0);
        // (b) kappa0 + 2 lambda0 = 1: the combination tracks e^{-gamma t}
        InitRecipe rb = ra;
        rb.kappa_lo = rb.kappa_hi = 0.8;
        rb.lambda_rule = LambdaRule::Range;
        rb.lambda_lo = rb.lambda_hi = 0.1;
        Ensemble eb = sample_initial(rb, 22);
        double db = sl_pair_defect(simulate(eb, p, ModelVariant::FullLHS, st), 1.0);
        double worst = std::max(da, db);
        return {worst <= 1e-8, "max defect " + fmt17(worst) + " (tol 1e-8)"};
    });

    // criterion 4 run, shared with criterion 8
    ModelParams p_anti;
    p_anti.gamma0 = p_anti.gamma1 = 1.0;
    p_anti.mu0 = p_anti.mu1 = 1.0;
    p_anti.law0 = CouplingLaw::AntiHebbian;
    p_anti.law1 = CouplingLaw::NegHalfAntiHebbian;
    InitRecipe rec4;
    rec4.N = 5;
    rec4.d = 2;
    rec4.sigma = 0.35;
    rec4.kappa_lo = 0.8;
    rec4.kappa_hi = 1.2;
    rec4.lambda_rule = LambdaRule::SlPair;
    rec4.predicate = [](const Ensemble& e) { return lyapunov_L_max(e, 1.0) <= 0.5; };
    rec4.predicate_name = "max pair Lyapunov <= 0.5";
    Ensemble e4 = sample_initial(rec4, 31);
    IntegratorSettings st4{1e-3, 200.0, true, 500};
    Trajectory traj4 = simulate(e4, p_anti, ModelVariant::SLPair, st4);

    record("04 small-data aggregation scenario", [&]() -> std::pair<bool, std::string> {
        double inc = worst_L_increase(traj4, 1.0);
        double minR = 2.0;
        for (const auto& s : traj4.samples) minR = std::min(minR, min_pair_R(s.ensemble));
        double dist0 = max_pair_dist(traj4.samples.front().ensemble);
        double distT = max_pair_dist(traj4.samples.back().ensemble);
        double k0max = 0.0, kTmax = 0.0;
        for (double v : traj4.samples.front().ensemble.kappa.data())
            k0max = std::max(k0max, v);
        for (double v : traj4.samples.back().ensemble.kappa.data()) kTmax = std::max(kTmax, v);
        bool ok = inc <= 1e-10 && minR > 0.0 && distT <= 0.2 * dist0 && kTmax <= 0.2 * k0max;
        return {ok, "L increase " + fmt17(inc) + ", min R " + fmt17(minR) + ", dist " +
                        fmt17(distT) + "/" + fmt17(dist0) + ", kappa " + fmt17(kTmax) + "/" +
                        fmt17(k0max)};
    });

    record("05 Hebbian decay envelope and rate", [&]() -> std::pair<bool, std::string> {
        ModelParams p;
        p.gamma0 = p.gamma1 = 1.0;
        p.mu0 = p.mu1 = 1.0;
        p.law0 = CouplingLaw::Hebbian;
        p.law1 = CouplingLaw::NegHalfHebbian;
        InitRecipe r;
        r.N = 5;
        r.d = 2;
        r.sigma = 0.08;
        r.kappa_lo = 0.92;
        r.kappa_hi = 0.98;
        r.lambda_rule = LambdaRule::SlPair;
        r.predicate = [](const Ensemble& e) { return diameter_D(e).first <= 0.03; };
        r.predicate_name = "diameter <= 0.03";
        Ensemble e0 = sample_initial(r, 41);
        HypothesisReport rep = check_theorem(e0, p, TheoremTag::T32);
        if (!rep.satisfied || !rep.feasible_kappa)
            return {false, "hypothesis check found no admissible kappa"};
        double kap = *rep.feasible_kappa;
        double kM = 2.0 * kap / (2.0 - kap);
        double D0 = diameter_D(e0).first;
        IntegratorSettings st{1e-3, 20.0, true, 100};
        Trajectory traj = simulate(e0, p, ModelVariant::SLPair, st);
        double worst_ratio = 0.0;
        std::vector<std::pair<double, double>> tD;
        for (const auto& s : traj.samples) {
            double D = diameter_D(s.ensemble).first;
            double env = riccati_envelope(D0, kap, kM, 0.0, s.ensemble.t);
            worst_ratio = std::max(worst_ratio, D / env);
            tD.emplace_back(s.ensemble.t, D);
        }
        auto [rate, r2] = fit_decay_rate(tD, 10.0, 20.0);
        double need = 0.9 * (2.0 * kap - kM);
        bool ok = worst_ratio <= 1.0 + 1e-6 && rate >= need;
        return {ok, "envelope ratio " + fmt17(worst_ratio) + ", rate " + fmt17(rate) + " >= " +
                        fmt17(need) + " (r2 " + fmt17(r2) + ")"};
    });

    // criterion 6 run, shared with criterion 8
    InitRecipe rec6;
    rec6.N = 5;
    rec6.d = 2;
    rec6.sigma = 0.3;
    rec6.kappa_lo = 0.9;
    rec6.kappa_hi = 1.1;
    rec6.lambda_rule = LambdaRule::UniformTilde;
    rec6.tilde_value = 0.05;
    rec6.predicate = [](const Ensemble& e) {
        double kmin = e.kappa.data()[0];
        for (double v : e.kappa.data()) kmin = std::min(kmin, v);
        return 2.0 * 0.05 / kmin + lyapunov_L_max(e, 1.0) <= 0.8;
    };
    rec6.predicate_name = "2|lt0|/kappa0 + max L <= 0.8";
    Ensemble e6 = sample_initial(rec6, 51);
    IntegratorSettings st6{1e-3, 200.0, true, 500};
    Trajectory traj6 = simulate(e6, p_anti, ModelVariant::Perturbed, st6);

    record("06 perturbed-system scenario", [&]() -> std::pair<bool, std::string> {
        double lt_err = 0.0;
        for (const auto& s : traj6.samples) {
            double expect = lambda_tilde_closed_form(0.05, 1.0, s.ensemble.t);
            for (double v : s.ensemble.lambda.data())
                lt_err = std::max(lt_err, std::abs(v - expect));
        }
        double inc = worst_L_increase(traj6, 1.0);
        double kmin0 = e6.kappa.data()[0];
        for (double v : e6.kappa.data()) kmin0 = std::min(kmin0, v);
        double floor = 2.0 * 0.05 / kmin0;
        double minR = 2.0;
        for (const auto& s : traj6.samples) minR = std::min(minR, min_pair_R(s.ensemble));
        double dist0 = max_pair_dist(traj6.samples.front().ensemble);
        double distT = max_pair_dist(traj6.samples.back().ensemble);
        double k0max = 0.0, kTmax = 0.0;
        for (double v : traj6.samples.front().ensemble.kappa.data())
            k0max = std::max(k0max, v);
        for (double v : traj6.samples.back().ensemble.kappa.data()) kTmax = std::max(kTmax, v);
        bool ok = lt_err <= 1e-8 && inc <= 1e-10 && minR > floor &&
                  distT <= 0.2 * dist0 && kTmax <= 0.2 * k0max;
        return {ok, "tilde err " + fmt17(lt_err) + ", L increase " + fmt17(inc) + ", min R " +
                        fmt17(minR) + " > " + fmt17(floor) + ", dist " + fmt17(distT) + "/" +
                        fmt17(dist0)};
    });

    record("07 perturbed decay envelope", [&]() -> std::pair<bool, std::string> {
        ModelParams p;
        p.gamma0 = p.gamma1 = 1.0;
        p.mu0 = p.mu1 = 1.0;
        p.law0 = CouplingLaw::Hebbian;
        p.law1 = CouplingLaw::NegHalfHebbian;
        double lt0 = 0.01;
        InitRecipe r;
        r.N = 5;
        r.d = 2;
        r.sigma = 0.07;
        r.kappa_lo = 0.95;
        r.kappa_hi = 0.98;
        r.lambda_rule = LambdaRule::UniformTilde;
        r.tilde_value = lt0;
        r.predicate = [](const Ensemble& e) { return diameter_D(e).first <= 0.025; };
        r.predicate_name = "diameter <= 0.025";
        Ensemble e0 = sample_initial(r, 61);
        HypothesisReport rep = check_theorem(e0, p, TheoremTag::T34);
        if (!rep.satisfied || !rep.feasible_kappa)
            return {false, "hypothesis check found no admissible kappa"};
        double kap = *rep.feasible_kappa;
        double kM = 2.0 * (kap - 2.0 * lt0) / (2.0 - kap);
        double D0 = diameter_D(e0).first;
        IntegratorSettings st{1e-3, 20.0, true, 100};
        Trajectory traj = simulate(e0, p, ModelVariant::Perturbed, st);
        double worst_ratio = 0.0;
        for (const auto& s : traj.samples) {
            double env = riccati_envelope(D0, kap, kM, lt0, s.ensemble.t);
            worst_ratio = std::max(worst_ratio, diameter_D(s.ensemble).first / env);
        }
        return {worst_ratio <= 1.0 + 1e-6, "envelope ratio " + fmt17(worst_ratio)};
    });

    record("08 gain upper bound", [&]() -> std::pair<bool, std::string> {
        double v4 = gain_bound_violation(traj4, 1.0, 1.0);
        double v6 = gain_bound_violation(traj6, 1.0, 1.0);
        double worst = std::max(v4, v6);
        return {worst <= 1e-8, "max excess " + fmt17(worst) + " (tol 1e-8)"};
    });

    record("09 dissipation-rate consistency", [&]() -> std::pair<bool, std::string> {
        double worst = 0.0;
        for (std::uint64_t s = 0; s < 100; ++s) {
            bool perturbed = (s % 2) == 1;
            Ensemble e = random_unit_ensemble(4, 2, 7000 + s, 1.0, perturbed ? 0.03 : -0.5);
            ModelParams p;
            p.gamma0 = p.gamma1 = 1.0;
            p.mu0 = p.mu1 = 0.5;
            p.law0 = CouplingLaw::AntiHebbian;
            p.law1 = CouplingLaw::NegHalfAntiHebbian;
            ModelVariant v = perturbed ? ModelVariant::Perturbed : ModelVariant::SLPair;
            double h = 1e-5;
            double analytic = dL_dt_analytic(e, p, v, 0, 1);
            Ensemble f1 = step_rk4(e, p, v, h);
            Ensemble f2 = step_rk4(f1, p, v, h);
            double l0 = lyapunov_L(e, 0, 1, p.mu0);
            double l1 = lyapunov_L(f1, 0, 1, p.mu0);
            double l2 = lyapunov_L(f2, 0, 1, p.mu0);
            double numeric = (-3.0 * l0 + 4.0 * l1 - l2) / (2.0 * h);
            worst = std::max(worst,
                             std::abs(numeric - analytic) / std::max(1.0, std::abs(analytic)));
        }
        return {worst <= 1e-5, "max relative error " + fmt17(worst) + " (tol 1e-5)"};
    });

    record("10 reduction oracles", [&]() -> std::pair<bool, std::string> {
        double dt = 1e-3;
        std::size_t steps = 10000;

        // (a) real embedding equivalence over T = 10
        double embed_gap;
        {
            std::size_t N = 4, d = 2;
            Ensemble e0 = random_unit_ensemble(N, d, 71, 1.0, -0.5);
            ModelParams p;
            p.omega = random_skew_hermitian(d + 1, 72, 0.5);
            IntegratorSettings st{dt, 10.0, false, steps};
            Ensemble zT =
                simulate(e0, p, ModelVariant::FullLHS, st).samples.back().ensemble;
            RealMat ot = build_omega_tilde(p.omega);
            std::size_t rd = 2 * (d + 1);
            std::vector<double> y(N * rd);
            for (std::size_t j = 0; j < N; ++j) {
                auto ve = embed_real(e0.states[j]);
                std::copy(ve.begin(), ve.end(), y.begin() + j * rd);
            }
            RealMat kmat = RealMat::square(N, 1.0);
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
            auto yT = rk4_real(y, dt, steps, f);
            embed_gap = 0.0;
            for (std::size_t j = 0; j < N; ++j) {
                auto ve = embed_real(zT.states[j]);
                for (std::size_t q = 0; q < rd; ++q)
                    embed_gap = std::max(embed_gap, std::abs(ve[q] - yT[j * rd + q]));
            }
        }

        // (b) circle flow vs the adaptive Kuramoto model over T = 10
        double angle_gap;
        {
            std::size_t N = 5;
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
            IntegratorSettings st{dt, 10.0, false, steps};
            auto thetaA = states_to_circle(
                simulate(e0, p, ModelVariant::SubsystemA, st).samples.back().ensemble.states);
            std::vector<double> y(N + N * N);
            std::copy(theta.begin(), theta.end(), y.begin());
            for (std::size_t i = 0; i < N * N; ++i) y[N + i] = 2.0 * e0.kappa.data()[i];
            std::vector<double> nu(N, 0.0);
            auto f = [&](const std::vector<double>& yy) {
                std::vector<double> th(yy.begin(), yy.begin() + N);
                RealMat km = RealMat::square(N);
                std::copy(yy.begin() + N, yy.end(), km.data().begin());
                auto d = rhs_kuramoto_adaptive(th, nu, km, 1.0, 1.0, CouplingLaw::AntiHebbian);
                std::vector<double> dy(N + N * N);
                std::copy(d.dtheta.begin(), d.dtheta.end(), dy.begin());
                std::copy(d.dkappa.data().begin(), d.dkappa.data().end(), dy.begin() + N);
                return dy;
            };
            auto yT = rk4_real(y, dt, steps, f);
            angle_gap = 0.0;
            for (std::size_t j = 0; j < N; ++j)
                angle_gap =
                    std::max(angle_gap, std::abs(std::remainder(thetaA[j] - yT[j], 2.0 * M_PI)));
        }

        // (c) restricted Stuart-Landau derivative on 1000 random ensembles
        double sl_gap = 0.0;
        {
            std::mt19937_64 rng(91);
            std::normal_distribution<double> g(0.0, 1.0);
            for (int rep = 0; rep < 1000; ++rep) {
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
                    cplx ip{};
                    for (std::size_t q = 0; q <= d; ++q)
                        ip += std::conj(e.states[j][q]) * dz[j][q];
                    double radial = ip.real();
                    for (std::size_t q = 0; q <= d; ++q) {
                        cplx tang = dz[j][q] - radial * e.states[j][q];
                        sl_gap = std::max(sl_gap, std::abs(tang - pair.dstates[j][q]));
                    }
                }
            }
        }

        // (d) real invariance over T = 10
        double imag_max = 0.0;
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
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t j = i + 1; j <= d; ++j) {
                    double v = g(rng);
                    p.omega(i, j) = cplx(v, 0.0);
                    p.omega(j, i) = cplx(-v, 0.0);
                }
            p.gamma0 = 1.0;
            p.mu0 = 0.5;
            p.law0 = CouplingLaw::AntiHebbian;
            IntegratorSettings st{dt, 10.0, false, 200};
            Trajectory traj = simulate(e0, p, ModelVariant::SubsystemA, st);
            for (const auto& s : traj.samples)
                for (const auto& z : s.ensemble.states)
                    for (const auto& c : z) imag_max = std::max(imag_max, std::abs(c.imag()));
        }

        bool ok = embed_gap <= 1e-8 && angle_gap <= 1e-8 && sl_gap <= 1e-10 && imag_max <= 1e-10;
        return {ok, "embed " + fmt17(embed_gap) + ", angle " + fmt17(angle_gap) + ", sl " +
                        fmt17(sl_gap) + ", imag " + fmt17(imag_max)};
    });

    record("11 integrator convergence order", [&]() -> std::pair<bool, std::string> {
        InitRecipe r;
        r.N = 4;
        r.d = 2;
        r.sigma = 0.5;
        r.kappa_lo = 0.8;
        r.kappa_hi = 1.2;
        r.lambda_rule = LambdaRule::SlPair;
        Ensemble e0 = sample_initial(r, 91);
        ModelParams p;
        p.omega = random_skew_hermitian(3, 92);
        p.gamma0 = p.gamma1 = 1.0;
        p.mu0 = p.mu1 = 0.5;
        p.law0 = CouplingLaw::AntiHebbian;
        p.law1 = CouplingLaw::NegHalfAntiHebbian;
        auto end_state = [&](double dt) {
            IntegratorSettings st{dt, 1.0, false,
                                  static_cast<std::size_t>(std::llround(1.0 / dt))};
            return simulate(e0, p, ModelVariant::FullLHS, st).samples.back().ensemble;
        };
        Ensemble ref_run = end_state(1e-4);
        std::vector<double> dts{1e-2, 5e-3, 2.5e-3};
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double dt : dts) {
            double err = max_state_diff(end_state(dt), ref_run);
            double x = std::log(dt), y = std::log(err);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double n = static_cast<double>(dts.size());
        double order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        return {order >= 3.5, "fitted order " + fmt17(order) + " (needs >= 3.5)"};
    });

    int failures = 0;
    for (const auto& c : results) {
        std::printf("%s criterion %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        if (!c.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
