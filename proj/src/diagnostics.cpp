#include "lhs/diagnostics.hpp"
#include "lhs/textio.hpp"

#include <algorithm>
#include <cmath>

namespace lhs {

double lyapunov_L(const Ensemble& e, std::size_t i, std::size_t j, double mu) {
    if (mu <= 0.0) throw std::invalid_argument("lyapunov_L: mu must be positive");
    std::size_t n = e.size();
    double gains = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double diff = e.kappa(i, k) - e.kappa(j, k);
        gains += diff * diff;
    }
    return 0.5 * dist_sq(e.states[i], e.states[j]) +
           gains / (4.0 * mu * static_cast<double>(n));
}

double lyapunov_L_max(const Ensemble& e, double mu,
                      std::pair<std::size_t, std::size_t>* argmax) {
    double best = 0.0;
    std::pair<std::size_t, std::size_t> arg{0, 0};
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            double v = lyapunov_L(e, i, j, mu);
            if (v > best) {
                best = v;
                arg = {i, j};
            }
        }
    if (argmax) *argmax = arg;
    return best;
}

std::pair<double, std::pair<std::size_t, std::size_t>> diameter_D(const Ensemble& e) {
    double best = 0.0;
    std::pair<std::size_t, std::size_t> arg{0, 0};
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j) {
            double v = 0.5 * dist_sq(e.states[i], e.states[j]);
            if (v > best) { // strict: lexicographically smallest argmax wins ties
                best = v;
                arg = {i, j};
            }
        }
    return {best, arg};
}

double dL_dt_analytic(const Ensemble& e, const ModelParams& p, ModelVariant variant,
                      std::size_t i, std::size_t j) {
    if (variant != ModelVariant::SLPair && variant != ModelVariant::Perturbed)
        throw std::invalid_argument("dL_dt_analytic: variant must be SLPair or Perturbed");
    if (p.law0 != CouplingLaw::AntiHebbian)
        throw std::invalid_argument("dL_dt_analytic: requires the anti-Hebbian law");
    double mu = p.mu0, gamma = p.gamma0;
    if (mu <= 0.0) throw std::invalid_argument("dL_dt_analytic: mu must be positive");

    std::size_t n = e.size();
    double invN = 1.0 / static_cast<double>(n);
    auto corr = [&](std::size_t a, std::size_t b) {
        return correlation(e.states[a], e.states[b]);
    };
    double Rij = corr(i, j).R;

    double sumR = 0.0, sumK = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sumR += e.kappa(i, k) * corr(i, k).R + e.kappa(j, k) * corr(j, k).R;
        double diff = e.kappa(i, k) - e.kappa(j, k);
        sumK += diff * diff;
    }
    double val = -invN * sumR * (1.0 - Rij) - gamma / (2.0 * mu) * invN * sumK;

    if (variant == ModelVariant::Perturbed) {
        double Iij = corr(i, j).I;
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            s += e.lambda(i, k) * corr(i, k).I - e.lambda(j, k) * corr(j, k).I;
        val -= 2.0 * Iij * invN * s;
    }
    return val;
}

namespace {

struct GainStats {
    double kmin, kmax, lmin_abs_tilde_max;
};

double uniform_tilde(const Ensemble& e) {
    double v = e.lambda(0, 0);
    for (double x : e.lambda.data())
        if (std::abs(x - v) > 1e-12)
            throw std::invalid_argument("check_theorem: lambda-tilde block is not uniform");
    return v;
}

void require_reduced_regime(const ModelParams& p) {
    if (p.omega.size() != 0)
        for (const auto& c : p.omega.data())
            if (c != cplx{})
                throw std::invalid_argument("check_theorem: requires omega = 0");
    if (p.gamma0 != p.gamma1 || p.mu0 != p.mu1)
        throw std::invalid_argument("check_theorem: requires gamma0 == gamma1, mu0 == mu1");
    if (p.gamma0 <= 0.0 || p.mu0 <= 0.0)
        throw std::invalid_argument("check_theorem: requires positive gamma and mu");
}

} // namespace

HypothesisReport check_theorem(const Ensemble& e0, const ModelParams& p, TheoremTag which) {
    require_reduced_regime(p);
    double gamma = p.gamma0, mu = p.mu0;
    HypothesisReport rep;
    rep.theorem = which;

    double kmin = e0.kappa.data().empty() ? 0.0 : e0.kappa.data()[0];
    double kmax = kmin;
    for (double v : e0.kappa.data()) {
        kmin = std::min(kmin, v);
        kmax = std::max(kmax, v);
    }
    auto [D0, dArg] = diameter_D(e0);

    switch (which) {
        case TheoremTag::T31: {
            if (p.law0 != CouplingLaw::AntiHebbian)
                throw std::invalid_argument("check_theorem: T31 requires the anti-Hebbian law");
            std::pair<std::size_t, std::size_t> arg;
            double L0 = lyapunov_L_max(e0, mu, &arg);
            rep.margins.emplace_back("lyapunov_initial", 1.0 - L0);
            rep.witness = arg;
            break;
        }
        case TheoremTag::T33: {
            if (p.law0 != CouplingLaw::AntiHebbian || p.law1 != CouplingLaw::NegHalfAntiHebbian)
                throw std::invalid_argument(
                    "check_theorem: T33 requires the anti-Hebbian law with Gamma1 = -Gamma0/2");
            double lt0 = uniform_tilde(e0);
            std::pair<std::size_t, std::size_t> arg;
            double L0 = lyapunov_L_max(e0, mu, &arg);
            if (kmin <= 0.0)
                throw std::invalid_argument("check_theorem: T33 requires positive initial kappa");
            rep.margins.emplace_back("aggregation", 1.0 - (2.0 * std::abs(lt0) / kmin + L0));
            rep.witness = arg;
            break;
        }
        case TheoremTag::T32:
        case TheoremTag::T34: {
            if (p.law0 != CouplingLaw::Hebbian)
                throw std::invalid_argument("check_theorem: T32/T34 require the Hebbian law");
            double lt0_abs = 0.0;
            if (which == TheoremTag::T34) {
                if (p.law1 != CouplingLaw::NegHalfHebbian)
                    throw std::invalid_argument(
                        "check_theorem: T34 requires Gamma1 = -Gamma0/2");
                lt0_abs = std::abs(uniform_tilde(e0));
            }
            double lo = std::max(0.0, 2.0 * lt0_abs);
            double hi = std::min(mu / gamma, kmin);
            rep.grid_points = 10000;
            rep.witness = dArg;
            rep.margins.emplace_back("kappa_window", hi - lo);
            if (hi <= lo) {
                rep.margins.emplace_back("gain_cap", -1.0);
                rep.margins.emplace_back("diameter", -1.0);
                rep.satisfied = false;
                return rep;
            }
            double mhi = std::max(kmax, mu / gamma);
            double best_min = -1e300, best_kappa = lo, best_m2 = -1e300, best_m3 = -1e300;
            for (std::size_t g = 1; g <= rep.grid_points; ++g) {
                double kap = lo + (hi - lo) * static_cast<double>(g) /
                                      static_cast<double>(rep.grid_points + 1);
                double cap = 2.0 * mu * (kap - 2.0 * lt0_abs) / (2.0 * mu - gamma * kap);
                double m2 = cap - mhi;
                double m3 = (1.0 - gamma * kap / mu) - D0;
                double mn = std::min(m2, m3);
                if (mn > best_min) {
                    best_min = mn;
                    best_kappa = kap;
                    best_m2 = m2;
                    best_m3 = m3;
                }
            }
            rep.margins.emplace_back("gain_cap", best_m2);
            rep.margins.emplace_back("diameter", best_m3);
            if (best_min > 0.0) rep.feasible_kappa = best_kappa;
            break;
        }
    }
    rep.satisfied = std::all_of(rep.margins.begin(), rep.margins.end(),
                                [](const auto& m) { return m.second > 0.0; });
    return rep;
}

double riccati_envelope(double D0, double kappa_m, double kappa_M, double lambda0_abs, double t) {
    double a = 2.0 * kappa_m - kappa_M - 4.0 * lambda0_abs;
    if (a <= 0.0)
        throw std::domain_error(
            "riccati_envelope: requires 2 kappa_m - kappa_M - 4 |lambda0| > 0");
    if (D0 <= 0.0) throw std::domain_error("riccati_envelope: requires D0 > 0");
    double ratio = a / kappa_M;
    return 1.0 / ((1.0 / D0 - ratio) * std::exp(a * t) + ratio);
}

double kappa_upper_bound(double kappa0, double gamma, double mu, double t) {
    if (gamma <= 0.0) throw std::domain_error("kappa_upper_bound: gamma must be positive");
    double decay = std::exp(-gamma * t);
    return kappa0 * decay + 4.0 * mu / gamma * (1.0 - decay);
}

double lambda_tilde_closed_form(double lambda0, double gamma, double t) {
    return lambda0 * std::exp(-gamma * t);
}

double sl_pair_defect(const Trajectory& traj, double gamma) {
    if (traj.samples.empty()) throw std::invalid_argument("sl_pair_defect: empty trajectory");
    const Ensemble& e0 = traj.samples.front().ensemble;
    std::size_t n = e0.size();
    if (e0.lambda.rows() != n || e0.lambda.cols() != n)
        throw std::invalid_argument("sl_pair_defect: trajectory lacks a lambda block");
    double defect = 0.0;
    for (const auto& s : traj.samples) {
        const Ensemble& e = s.ensemble;
        double decay = std::exp(-gamma * e.t);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double expected = decay * (e0.kappa(i, j) + 2.0 * e0.lambda(i, j));
                defect = std::max(defect,
                                  std::abs(e.kappa(i, j) + 2.0 * e.lambda(i, j) - expected));
            }
    }
    return defect;
}

std::pair<double, double> fit_decay_rate(const std::vector<std::pair<double, double>>& tD,
                                         double t_lo, double t_hi) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [t, D] : tD)
        if (t >= t_lo && t <= t_hi) {
            // D is a squared distance; below ~1e-30 it is rounding noise
            if (D <= 1e-30)
                throw std::domain_error("fit_decay_rate: D below the numerical noise floor "
                                        "inside the window");
            pts.emplace_back(t, -std::log(D));
        }
    if (pts.size() < 4)
        throw std::invalid_argument("fit_decay_rate: fewer than 4 usable samples in window");
    double n = static_cast<double>(pts.size());
    double st = 0, sy = 0, stt = 0, sty = 0, syy = 0;
    for (const auto& [t, y] : pts) {
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
        syy += y * y;
    }
    double denom = n * stt - st * st;
    double slope = (n * sty - st * sy) / denom;
    double ss_tot = syy - sy * sy / n;
    double intercept = (sy - slope * st) / n;
    double ss_res = 0.0;
    for (const auto& [t, y] : pts) {
        double r = y - (intercept + slope * t);
        ss_res += r * r;
    }
    double r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    return {slope, r2};
}

DiagnosticsRecord diagnostics_record(const Sample& s, const ModelParams& p, ModelVariant variant,
                                     std::optional<double> envelope) {
    const Ensemble& e = s.ensemble;
    DiagnosticsRecord rec;
    rec.t = e.t;
    rec.D = diameter_D(e).first;
    if (p.mu0 > 0.0)
        rec.L_max = lyapunov_L_max(e, p.mu0);
    else {
        // without a plasticity rate the gain term of L is undefined; report
        // the state part only
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                rec.L_max = std::max(rec.L_max, 0.5 * dist_sq(e.states[i], e.states[j]));
    }
    rec.kappa_min = e.kappa.data().empty() ? 0.0 : e.kappa.data()[0];
    rec.kappa_max = rec.kappa_min;
    for (double v : e.kappa.data()) {
        rec.kappa_min = std::min(rec.kappa_min, v);
        rec.kappa_max = std::max(rec.kappa_max, v);
    }
    double lt = 0.0;
    switch (variant) {
        case ModelVariant::Perturbed:
        case ModelVariant::SubsystemB:
            for (double v : e.lambda.data()) lt = std::max(lt, std::abs(v));
            break;
        case ModelVariant::FullLHS:
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = 0; j < e.size(); ++j)
                    lt = std::max(lt, std::abs(0.5 * e.kappa(i, j) + e.lambda(i, j)));
            break;
        case ModelVariant::SLPair:
        case ModelVariant::SubsystemA:
            lt = 0.0;
            break;
    }
    rec.lambda_tilde_max_abs = lt;
    rec.sphere_drift_max = s.sphere_drift_max;
    rec.envelope = envelope;
    return rec;
}

std::string serialize_report(const HypothesisReport& rep) {
    std::string out;
    for (const auto& [name, value] : rep.margins)
        out += "margin." + name + "=" + fmt17(value) + "\n";
    out += std::string("satisfied=") + (rep.satisfied ? "true" : "false") + "\n";
    out += "witness=" + std::to_string(rep.witness.first) + "," +
           std::to_string(rep.witness.second) + "\n";
    if (rep.feasible_kappa) out += "kappa.feasible=" + fmt17(*rep.feasible_kappa) + "\n";
    if (rep.grid_points) out += "kappa.grid=" + std::to_string(rep.grid_points) + "\n";
    return out;
}

} // namespace lhs
