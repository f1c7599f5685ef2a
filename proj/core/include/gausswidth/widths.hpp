#pragma once

#include <cstdint>
#include <vector>

#include "gausswidth/expansion.hpp"

namespace gw {

// Number of multi-indices with 1 + |k|_1 <= r, i.e. |k|_1 <= r-1:
// c(r,d) = binom(r-1+d, d).  Exact integer arithmetic; throws
// std::overflow_error instead of overflowing.
std::uint64_t count_ball(std::uint64_t r, int dim);

// n-th approximation number of the Gaussian Sobolev embedding in the
// exact p = q = 2 case: sigma_n = r^{-s/2} with r minimal such that
// count_ball(r,d) >= n.  Found by binary search; never enumerates indices.
double sigma_rearranged(std::uint64_t n, double s, int dim);

// Limit of sigma_n * n^{s/(2d)} as n -> inf: (d!)^{-s/(2d)}, via lgamma.
double width_limit_constant(double s, int dim);

struct WidthPoint {
    std::uint64_t n;
    double sigma_n;
    double normalized; // sigma_n * n^{s/(2d)}
};

struct WidthCurve {
    double s;
    int dim;
    double limit_constant;
    std::vector<WidthPoint> points;
};

WidthCurve width_curve_exact(double s, int dim, std::span<const std::uint64_t> ns);

// Kolmogorov-width estimate of the set {samples} in L_2(gamma): the
// (n+1)-th largest singular value of the coefficient matrix (columns are
// Parseval coordinates of the samples).  For a finite sample of an infinite
// set this is a lower bound on the set's width.  Requires n < samples.size().
double kolmogorov_width_gram(const std::vector<HermiteExpansion>& samples, int n);

} // namespace gw
