#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gw {

// Log-log least-squares rate fit with a pairs-bootstrap confidence interval
// for the slope.  Requires >= 4 points with positive finite errors.
struct RateFit {
    double slope = 0.0;
    double intercept = 0.0; // in log space
    double r_squared = 0.0;
    double slope_lo90 = 0.0; // 5th percentile of bootstrap slopes
    double slope_hi90 = 0.0; // 95th percentile
};

RateFit rate_fit(const std::vector<std::pair<double, double>>& points,
                 int bootstrap_resamples = 200, std::uint64_t seed = 7);

} // namespace gw
