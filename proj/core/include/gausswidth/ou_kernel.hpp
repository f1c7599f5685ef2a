#pragma once

#include <functional>
#include <span>

#include "gausswidth/expansion.hpp"

namespace gw {

// Mehler kernel M_t(x,y): density of the Ornstein-Uhlenbeck transition
// semigroup e^{t L} with respect to gamma, evaluated in the cancellation-free
// form
//   M_t = exp( (|x|^2+|y|^2)/4 * (1 - tanh(t/2))
//              - |x-y|^2/(4 sinh t) )  *  (1 - e^{-2t})^{-d/2},
// with all exponents combined into a single exp() call and 1/sinh(t) computed
// as 2 e^{-t}/(1-e^{-2t}) so large t cannot overflow.  Satisfies
// e^{tL} H_k = e^{-t |k|_1} H_k and the semigroup identity
// int M_t(x,z) M_s(z,y) dgamma(z) = M_{t+s}(x,y).
double mehler(double t, std::span<const double> x, std::span<const double> y);

// Semigroup action on an expansion: coefficients scaled by e^{-t |k|_1}, t >= 0.
HermiteExpansion semigroup_apply(const HermiteExpansion& e, double t);

struct KernelEvalConfig {
    double t_split = 1.0;    // boundary between the singular and tail pieces
    double rel_tol = 1e-8;   // target relative accuracy of the time integral
    int max_blocks = 64;     // cap on tail-extension blocks (throws if exceeded)
    int angular_nodes = 48;  // trapezoid nodes on the circle (dim-2 operator)
};

// Subordination kernel K_sigma(x,y) = int_0^inf M_t(x,y) t^{-sigma/2-1} dt,
// sigma > 0, x != y.  Integrated in two pieces: on (0,t_split] through the
// substitution tau = |x-y|^2/(4t) (turning the singular part into an
// incomplete-gamma-type integrand), on [t_split,inf) through t = t_split e^u.
// Obeys the heat-kernel comparison
//   K_sigma(x,y) >= 2^{sigma+d/2} Gamma((sigma+d)/2) / |x-y|^{d+sigma},
// with equality in the |x-y| -> 0 limit at x = 0.
double k_sigma(double sigma, std::span<const double> x, std::span<const double> y,
               const KernelEvalConfig& cfg = {});

// Closed-form lower bound above (the pure heat-kernel value).
double k_sigma_lower_bound(double sigma, int dim, double dist);

// Eigenvalue convention for the fractional operator on expansions.
enum class EigenvalueMode {
    Sum,   // lambda(k) = k_1^sigma + ... + k_d^sigma
    Total, // lambda(k) = (k_1 + ... + k_d)^sigma
};

// Spectral fractional Ornstein-Uhlenbeck operator: coefficients scaled by
// lambda(k) per the chosen mode.  The two modes coincide for d = 1 and for
// sigma = 1; the singular-integral realization below matches Total.
HermiteExpansion frac_ou_spectral(const HermiteExpansion& e, double sigma,
                                  EigenvalueMode mode);

// Singular-integral realization, sigma in (0,1), dim <= 2:
//   ((-L)^sigma f)(x) = 1/|Gamma(-sigma)| *
//       p.v. int (f(x) - f(y)) K_{2 sigma}(x,y) dgamma(y),
// regularized by pairing y with its reflection 2x - y inside |y-x| <= 1
// (the paired second difference kills the gradient term, leaving an
// absolutely convergent integrand ~ r^{1-2 sigma}).  f must be C^2 near x.
double frac_ou_integral(const std::function<double(std::span<const double>)>& f,
                        double sigma, std::span<const double> x,
                        const KernelEvalConfig& cfg = {});

} // namespace gw
