// Compares the OpenMP right-hand-side kernel against the serial reference:
// wall time per evaluation and maximum elementwise difference (expected 0).
#include "lhs/dynamics.hpp"
#include "lhs/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

using namespace lhs;

namespace {

Ensemble make_ensemble(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Ensemble e;
    e.states.resize(n);
    for (auto& z : e.states) {
        z.resize(d + 1);
        for (auto& c : z) c = cplx(g(rng), g(rng));
        z = project_to_sphere(z);
    }
    e.kappa = RealMat::square(n);
    e.lambda = RealMat::square(n);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    for (auto& v : e.kappa.data()) v = u(rng);
    for (auto& v : e.lambda.data()) v = -0.5 * u(rng);
    return e;
}

template <class F>
double time_per_call(F&& f, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 512;
    std::size_t d = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 7;
    int reps = argc > 3 ? std::atoi(argv[3]) : 10;

    Ensemble e = make_ensemble(n, d, 42);
    ModelParams p;
    p.omega = random_skew_hermitian(d + 1, 43);
    p.gamma0 = 1.0;
    p.gamma1 = 0.5;
    p.mu0 = 1.0;
    p.mu1 = 0.5;
    p.law0 = CouplingLaw::AntiHebbian;
    p.law1 = CouplingLaw::NegHalfAntiHebbian;

    // warm up and correctness check
    Derivative par = rhs_full(e, p);
    Derivative ser = ref::rhs_full(e, p);
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q <= d; ++q)
            worst = std::max(worst, std::abs(par.dstates[j][q] - ser.dstates[j][q]));
    for (std::size_t i = 0; i < par.dkappa.data().size(); ++i) {
        worst = std::max(worst, std::abs(par.dkappa.data()[i] - ser.dkappa.data()[i]));
        worst = std::max(worst, std::abs(par.dlambda.data()[i] - ser.dlambda.data()[i]));
    }

    double t_par = time_per_call([&] { rhs_full(e, p); }, reps);
    double t_ser = time_per_call([&] { ref::rhs_full(e, p); }, reps);

    std::printf("N=%zu d=%zu reps=%d\n", n, d, reps);
    std::printf("parallel: %.6f s/eval\n", t_par);
    std::printf("serial:   %.6f s/eval\n", t_ser);
    std::printf("speedup:  %.2fx\n", t_ser / t_par);
    std::printf("max |parallel - serial| = %.3g\n", worst);
    return worst == 0.0 ? 0 : 1;
}
