#include "gausswidth/rate_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gausswidth/rng.hpp"

namespace gw {

namespace {

struct Line {
    double slope = 0.0, intercept = 0.0;
    bool ok = false;
};

Line fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    Line l;
    double den = sxx - sx * sx / n;
    if (!(den > 1e-12 * std::max(1.0, sxx))) return l; // all abscissae equal
    l.slope = (sxy - sx * sy / n) / den;
    l.intercept = (sy - l.slope * sx) / n;
    l.ok = true;
    return l;
}

} // namespace

RateFit rate_fit(const std::vector<std::pair<double, double>>& points,
                 int bootstrap_resamples, std::uint64_t seed) {
    if (points.size() < 4)
        throw std::invalid_argument("rate_fit needs at least 4 points");
    if (bootstrap_resamples < 1)
        throw std::invalid_argument("rate_fit needs >= 1 bootstrap resample");
    std::vector<double> lx, ly;
    lx.reserve(points.size());
    ly.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
            throw std::invalid_argument("rate_fit: points must be positive finite");
        lx.push_back(std::log(x));
        ly.push_back(std::log(y));
    }
    Line base = fit_line(lx, ly);
    if (!base.ok) throw std::invalid_argument("rate_fit: degenerate abscissae");

    RateFit out;
    out.slope = base.slope;
    out.intercept = base.intercept;
    double my = 0.0;
    for (double v : ly) my += v;
    my /= static_cast<double>(ly.size());
    double ssr = 0.0, sst = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double e = ly[i] - (base.intercept + base.slope * lx[i]);
        ssr += e * e;
        double d = ly[i] - my;
        sst += d * d;
    }
    out.r_squared = sst > 0.0 ? 1.0 - ssr / sst : 1.0;

    const int n = static_cast<int>(points.size());
    std::vector<double> bx(n), by(n), slopes;
    slopes.reserve(bootstrap_resamples);
    for (int b = 0; b < bootstrap_resamples; ++b) {
        CounterRng rng(seed, static_cast<std::uint64_t>(b));
        for (int attempt = 0; attempt < 100; ++attempt) {
            for (int i = 0; i < n; ++i) {
                int pick = std::min(n - 1, static_cast<int>(rng.uniform01() * n));
                bx[i] = lx[pick];
                by[i] = ly[pick];
            }
            Line l = fit_line(bx, by);
            if (l.ok) {
                slopes.push_back(l.slope);
                break;
            }
        }
    }
    if (slopes.empty()) {
        out.slope_lo90 = out.slope_hi90 = out.slope;
        return out;
    }
    std::sort(slopes.begin(), slopes.end());
    auto quantile = [&](double q) {
        double pos = q * static_cast<double>(slopes.size() - 1);
        return slopes[static_cast<std::size_t>(std::llround(pos))];
    };
    out.slope_lo90 = quantile(0.05);
    out.slope_hi90 = quantile(0.95);
    return out;
}

} // namespace gw
