#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gausswidth/multi_index.hpp"
#include "gausswidth/ou_kernel.hpp"

namespace gw {

// A function under test: black-box evaluator plus optional exact partial
// derivatives (fallback is central finite differences with step
// fd_step_scale * max(1,|x_j|) per coordinate).
struct TestFunction {
    int dim = 1;
    std::function<double(std::span<const double>)> eval;
    std::map<MultiIndex, std::function<double(std::span<const double>)>> partials;
    double fd_step_scale = 1e-4;
    std::string name;
    std::string smoothness_note; // declared membership, free-form
};

// D^a f at x: exact partial if registered, otherwise a symmetric
// finite-difference stencil composed per coordinate.
double derivative_eval(const TestFunction& f, const MultiIndex& a,
                       std::span<const double> x);

struct RadialGrid {
    double r_min = 1e-6;
    double r_max = 20.0;
    int shells = 64; // log-spaced
};

struct IntegratorConfig {
    enum class Kind { TensorQuadrature, MonteCarlo };
    Kind kind = Kind::MonteCarlo;
    // nodes per coordinate (quadrature) or total sample budget (Monte Carlo)
    int points = 20000;
    std::uint64_t seed = 1;
    RadialGrid radial;
    double nonfinite_budget = 1e-3; // tolerated fraction of rejected samples
    double diverge_slope_tol = 0.05; // shell-profile slope threshold
};

// Estimate with uncertainty.  A divergent singular integral is reported as
// value = +inf with diverged = true and the per-shell contribution profile
// attached; estimators never throw on divergence.
struct NormEstimate {
    double value = 0.0;
    double std_error = 0.0;
    bool diverged = false;
    std::vector<std::pair<double, double>> shell_profile; // (r_mid, contribution)
};

// L_p(gamma) norm, p >= 1.  Tensor quadrature supported for dim <= 3
// (deterministic, std_error = 0); Monte Carlo otherwise.  Identical seeds give
// bit-identical results.
NormEstimate lp_gamma_norm(const TestFunction& f, double p,
                           const IntegratorConfig& cfg);

// Integer Sobolev norm ( sum_{|a|_1 <= s} ||D^a f||_p^p )^{1/p}.
NormEstimate sobolev_norm_integer(const TestFunction& f, int s, double p,
                                  const IntegratorConfig& cfg);

struct Cube {
    double lo = 0.0;
    double hi = 1.0;
};

// Gagliardo seminorm on a cube U = [lo,hi]^d for non-integer s = sbar + st:
//   sum_{|a|_1 = sbar} ( int_U int_U |D^a f(x) - D^a f(y)|^p / |x-y|^{d+st*p} )^{1/p},
// computed by the substitution y = x + r u with r stratified on the log-spaced
// radial grid and u uniform on the sphere.
NormEstimate gagliardo_seminorm_cube(const TestFunction& f, double s, double p,
                                     const Cube& cube, const IntegratorConfig& cfg);

// Same double integral against gamma(x) gamma(y) over all of R^d, sampled by
// symmetric pair-midpoint importance (z ~ gamma at the pair midpoint).
NormEstimate gagliardo_seminorm_gauss(const TestFunction& f, double s, double p,
                                      const IntegratorConfig& cfg);

// Gaussian seminorm with the subordination kernel K_{p*st}(x,y) as weight in
// place of |x-y|^{-(d+st*p)}.  For p = 2 and f = H_k (d = 1) the squared
// seminorm equals 2 |Gamma(-st)| k^st.
NormEstimate kernel_seminorm_gauss(const TestFunction& f, double s, double p,
                                   const IntegratorConfig& cfg,
                                   const KernelEvalConfig& kcfg = {});

// Mixed-difference building block Delta^e_{y_e} f(x): alternating sum over
// replacing coordinates in e by y (2^{|e|} evaluations).
double mixed_difference(const TestFunction& f, const std::vector<int>& e,
                        std::span<const double> x, std::span<const double> y_e);

enum class MixedFlavor {
    CubeGagliardo, // per-coordinate |x_j - y_j|^{-(1+st*p)} weights on a cube
    GaussKernel,   // per-coordinate univariate K_{p*st} weights against gamma
};

// Dominating-mixed-smoothness seminorm: sum over |a|_inf = sbar and nonempty
// e subset {1..d} of the p-th root of the corresponding mixed double integral.
// Reduces to the isotropic seminorms above when d = 1.
NormEstimate mixed_seminorm(const TestFunction& f, double s, double p,
                            MixedFlavor flavor, const Cube& cube,
                            const IntegratorConfig& cfg,
                            const KernelEvalConfig& kcfg = {});

// Truncated L_q(gamma) norms of f(x) = e^{|x|^2/(2p)} (1+|x|^2)^{-m} over
// |x| <= R for each R in radius_grid (deterministic radial quadrature).
// For q > p the values grow without bound as R increases; for q < p they
// stabilize: the embedding counterexample scan.
std::vector<std::pair<double, double>>
embedding_counterexample_scan(int m, double p, double q, int dim,
                              std::span<const double> radius_grid,
                              double rel_tol = 1e-10);

} // namespace gw
