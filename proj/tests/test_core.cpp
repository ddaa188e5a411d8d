#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhs/core.hpp"

#include <cmath>
#include <random>

using namespace lhs;

TEST_CASE("hermitian inner product") {
    CHECK(hermitian_inner({1.0, 0.0}, {0.0, 1.0}) == cplx{0.0});
    CHECK(hermitian_inner({cplx(0, 1)}, {1.0}) == cplx(0, -1));
    CHECK(hermitian_inner({1.0, 0.0}, {1.0, 0.0}) == cplx{1.0});
    CHECK_THROWS_AS((void)hermitian_inner({1.0}, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("distance and coupling laws on the sphere") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        CVec z(3), w(3);
        for (auto& c : z) c = cplx(g(rng), g(rng));
        for (auto& c : w) c = cplx(g(rng), g(rng));
        z = project_to_sphere(z);
        w = project_to_sphere(w);
        // chord identity: ||w - z||^2 = 2(1 - Re<w,z>)
        double lhs_v = dist_sq(w, z);
        double rhs_v = 2.0 * (1.0 - correlation(w, z).R);
        CHECK(std::abs(lhs_v - rhs_v) < 1e-12);
        double anti = gamma_eval(CouplingLaw::AntiHebbian, z, w);
        double heb = gamma_eval(CouplingLaw::Hebbian, z, w);
        CHECK(anti >= 0.0);
        CHECK(anti <= 4.0 + 1e-12);
        CHECK(heb >= -1.0 - 1e-12);
        CHECK(heb <= 1.0 + 1e-12);
        CHECK(gamma_eval(CouplingLaw::NegHalfAntiHebbian, z, w) ==
              doctest::Approx(-0.5 * anti).epsilon(1e-14));
        CHECK(gamma_eval(CouplingLaw::NegHalfHebbian, z, w) ==
              doctest::Approx(-0.5 * heb).epsilon(1e-14));
    }
    CHECK(gamma_eval(CouplingLaw::Zero, {1.0}, {cplx(0, 1)}) == 0.0);
    // identical states: anti-Hebbian drive vanishes, Hebbian saturates at 1
    CHECK(gamma_eval(CouplingLaw::AntiHebbian, {1.0}, {1.0}) == 0.0);
    CHECK(gamma_eval(CouplingLaw::Hebbian, {1.0}, {1.0}) == 1.0);
}

TEST_CASE("projection to the sphere") {
    double drift = -1.0;
    CVec z = project_to_sphere({2.0, 0.0}, &drift);
    CHECK(z[0] == cplx{1.0});
    CHECK(drift == doctest::Approx(1.0));
    CHECK(is_on_sphere(z));
    CHECK_THROWS_AS((void)project_to_sphere({1e-16}), std::domain_error);
}

TEST_CASE("skew-hermitian predicate") {
    CMat m(2);
    m(0, 0) = cplx(0, 1);
    m(0, 1) = cplx(1, 2);
    m(1, 0) = cplx(-1, 2);
    m(1, 1) = cplx(0, -3);
    CHECK(is_skew_hermitian(m));
    m(1, 0) = cplx(1, 2);
    CHECK(!is_skew_hermitian(m));
}

TEST_CASE("initial sampling is deterministic and respects the recipe") {
    InitRecipe r;
    r.N = 6;
    r.d = 2;
    r.sigma = 0.4;
    r.kappa_lo = 0.5;
    r.kappa_hi = 1.5;
    r.lambda_rule = LambdaRule::SlPair;

    Ensemble a = sample_initial(r, 7);
    Ensemble b = sample_initial(r, 7);
    REQUIRE(a.size() == 6);
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(is_on_sphere(a.states[j], 1e-12));
        for (std::size_t q = 0; q < a.dim(); ++q) CHECK(a.states[j][q] == b.states[j][q]);
    }
    for (std::size_t i = 0; i < a.kappa.data().size(); ++i) {
        CHECK(a.kappa.data()[i] == b.kappa.data()[i]);
        CHECK(a.kappa.data()[i] >= 0.5);
        CHECK(a.kappa.data()[i] <= 1.5);
        CHECK(a.lambda.data()[i] == -0.5 * a.kappa.data()[i]);
    }
    Ensemble c = sample_initial(r, 8);
    bool differs = false;
    for (std::size_t q = 0; q < a.dim(); ++q)
        if (a.states[0][q] != c.states[0][q]) differs = true;
    CHECK(differs);
}

TEST_CASE("zero spread collapses to the base point") {
    InitRecipe r;
    r.N = 3;
    r.d = 1;
    r.sigma = 0.0;
    Ensemble e = sample_initial(r, 1);
    for (const auto& z : e.states) {
        CHECK(z[0] == cplx{1.0});
        CHECK(z[1] == cplx{0.0});
    }
}

TEST_CASE("uniform tilde rule fills the lambda block") {
    InitRecipe r;
    r.N = 4;
    r.d = 1;
    r.lambda_rule = LambdaRule::UniformTilde;
    r.tilde_value = 0.03;
    Ensemble e = sample_initial(r, 2);
    for (double v : e.lambda.data()) CHECK(v == 0.03);
}

TEST_CASE("rejection sampling names the predicate on exhaustion") {
    InitRecipe r;
    r.N = 2;
    r.d = 1;
    r.predicate = [](const Ensemble&) { return false; };
    r.predicate_name = "impossible condition";
    try {
        (void)sample_initial(r, 3);
        FAIL("expected an exception");
    } catch (const std::runtime_error& ex) {
        CHECK(std::string(ex.what()).find("impossible condition") != std::string::npos);
    }
}
