#pragma once

#include <functional>
#include <span>

namespace gw {

// Result of approximating one localized piece on the cube [-theta/2, theta/2]^d.
struct LocalApproximant {
    int rank_used = 0;
    std::function<double(std::span<const double>)> eval;
};

// A local operator maps a (theta-periodic, boundary-vanishing) function on the
// cube and a rank budget m to an approximant of rank <= m.
using LocalOperator = std::function<LocalApproximant(
    const std::function<double(std::span<const double>)>& g, int m, double theta,
    int dim)>;

// Truncated Fourier partial sum with cubic frequency cutoff |nu|_inf <= K,
// K maximal with (2K+1)^d <= m; coefficients by tensor trapezoid sums
// (spectrally accurate for smooth periodic data).  m = 1 keeps the mean.
LocalApproximant local_fourier(const std::function<double(std::span<const double>)>& g,
                               int m, double theta, int dim);
inline LocalOperator local_fourier_operator() { return &local_fourier; }

// Sampling operator: g evaluated on the uniform tensor grid with
// floor(m^{1/d}) nodes per coordinate, then periodic cardinal B-spline
// quasi-interpolation of the given order (degree = order-1 in {1,2,3}).
// The coefficient functional lambda_i = g_i - (var/2) * delta^2 g_i (var the
// B-spline variance) reproduces polynomials of degree <= order-1 exactly.
LocalApproximant local_spline_sampler(
    const std::function<double(std::span<const double>)>& g, int m, double theta,
    int dim, int order);
LocalOperator local_spline_sampler_operator(int order);

// Centered cardinal B-spline of the given degree (support width degree+1).
double cardinal_bspline(int degree, double t);

} // namespace gw
