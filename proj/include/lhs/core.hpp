#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhs {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// On-sphere acceptance tolerance for states.
inline constexpr double kTolSphere = 1e-9;

// N x N real matrix of coupling gains, row-major.
class RealMat {
public:
    RealMat() = default;
    RealMat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    static RealMat square(std::size_t n, double fill = 0.0) { return RealMat(n, n, fill); }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

// (d+1) x (d+1) complex matrix, row-major. Holds the free-flow generator.
class CMat {
public:
    CMat() = default;
    explicit CMat(std::size_t n, cplx fill = {}) : n_(n), a_(n * n, fill) {}

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::size_t size() const { return n_; }
    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

enum class CouplingLaw {
    AntiHebbian,        // ||w-z||^2
    Hebbian,            // 1 - ||w-z||^2 / 2
    Zero,               // 0
    NegHalfAntiHebbian, // -||w-z||^2 / 2
    NegHalfHebbian,     // -(1 - ||w-z||^2 / 2) / 2
};

struct ModelParams {
    CMat omega;      // skew-hermitian free-flow matrix, (d+1)x(d+1)
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    double mu0 = 0.0;
    double mu1 = 0.0;
    CouplingLaw law0 = CouplingLaw::AntiHebbian;
    CouplingLaw law1 = CouplingLaw::Zero;
};

// Full system state: N particles on the hermitian sphere plus the two gain matrices.
struct Ensemble {
    double t = 0.0;
    std::vector<CVec> states;
    RealMat kappa;
    RealMat lambda;

    std::size_t size() const { return states.size(); }
    std::size_t dim() const { return states.empty() ? 0 : states.front().size(); }
};

// <z,w> = sum conj(z_a) w_a. Hard error on dimension mismatch.
cplx hermitian_inner(const CVec& z, const CVec& w);

double norm(const CVec& z);
double dist_sq(const CVec& z, const CVec& w);

// h = <z_i, z_j>, R = Re h, I = Im h.
struct Correlation {
    cplx h;
    double R;
    double I;
};
Correlation correlation(const CVec& zi, const CVec& zj);

// Evaluates the configured coupling law Gamma0 (or Gamma1) at a sphere pair.
double gamma_eval(CouplingLaw law, const CVec& z, const CVec& w);

// z / ||z||; *drift (optional) receives | ||z|| - 1 |. Hard error for ||z|| <= 1e-14.
CVec project_to_sphere(const CVec& z, double* drift = nullptr);

bool is_on_sphere(const CVec& z, double tol = kTolSphere);
bool is_skew_hermitian(const CMat& m, double tol = 1e-12);
void require_finite(const Ensemble& e);

// How the lambda block is filled at sampling time.
enum class LambdaRule {
    Range,        // lambda ~ U[lambda_lo, lambda_hi]
    SlPair,       // lambda = -kappa / 2
    UniformTilde, // lambda block holds the uniform tilde value (perturbed variant)
};

struct InitRecipe {
    std::size_t N = 0;
    std::size_t d = 0;
    CVec base;            // base point on the sphere; empty -> first basis vector
    double sigma = 0.0;   // tangent-Gaussian angular spread
    double kappa_lo = 1.0, kappa_hi = 1.0;
    double lambda_lo = 0.0, lambda_hi = 0.0;
    LambdaRule lambda_rule = LambdaRule::Range;
    double tilde_value = 0.0;
    // Optional hypothesis predicate; rejection-sampled up to 10000 attempts.
    std::function<bool(const Ensemble&)> predicate;
    std::string predicate_name;
};

// Deterministic for a fixed seed. States are normalized tangent-Gaussian
// perturbations of the base point; gains are uniform in the given ranges.
Ensemble sample_initial(const InitRecipe& recipe, std::uint64_t seed);

} // namespace lhs
