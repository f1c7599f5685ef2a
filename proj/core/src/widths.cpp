#include "gausswidth/widths.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace gw {

std::uint64_t count_ball(std::uint64_t r, int dim) {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (r == 0) return 0;
    // binom(r-1+d, d); running product binom(r-1+i, i) stays integral
    std::uint64_t v = 1;
    for (int i = 1; i <= dim; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(v) * (r - 1 + i);
        t /= static_cast<unsigned>(i);
        if (t > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("count_ball: result exceeds 64 bits");
        v = static_cast<std::uint64_t>(t);
    }
    return v;
}

namespace {

// smallest r >= 1 with count_ball(r, dim) >= n
std::uint64_t minimal_radius(std::uint64_t n, int dim) {
    auto at_least = [dim, n](std::uint64_t r) {
        try {
            return count_ball(r, dim) >= n;
        } catch (const std::overflow_error&) {
            return true; // beyond 2^64 certainly covers n
        }
    };
    std::uint64_t hi = 1;
    while (!at_least(hi)) hi *= 2;
    std::uint64_t lo = hi / 2 + 1;
    if (hi == 1) lo = 1;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (at_least(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

} // namespace

double sigma_rearranged(std::uint64_t n, double s, int dim) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (!(s > 0.0) || dim < 1) throw std::invalid_argument("bad s or dim");
    return std::pow(static_cast<double>(minimal_radius(n, dim)), -0.5 * s);
}

double width_limit_constant(double s, int dim) {
    if (!(s > 0.0) || dim < 1) throw std::invalid_argument("bad s or dim");
    return std::exp(-s / (2.0 * dim) * std::lgamma(dim + 1.0));
}

WidthCurve width_curve_exact(double s, int dim,
                             std::span<const std::uint64_t> ns) {
    WidthCurve curve;
    curve.s = s;
    curve.dim = dim;
    curve.limit_constant = width_limit_constant(s, dim);
    curve.points.reserve(ns.size());
    for (std::uint64_t n : ns) {
        std::uint64_t r = minimal_radius(n, dim);
        WidthPoint pt;
        pt.n = n;
        pt.sigma_n = std::pow(static_cast<double>(r), -0.5 * s);
        // written as (n^{1/d}/r)^{s/2} so the d=1 value is exactly 1
        pt.normalized = std::pow(
            std::pow(static_cast<double>(n), 1.0 / dim) / static_cast<double>(r),
            0.5 * s);
        curve.points.push_back(pt);
    }
    return curve;
}

double kolmogorov_width_gram(const std::vector<HermiteExpansion>& samples,
                             int n) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    if (n < 0 || static_cast<std::size_t>(n) >= samples.size())
        throw std::invalid_argument("need 0 <= n < number of samples");
    const int dim = samples.front().dim;
    std::map<MultiIndex, int> rows;
    for (const auto& e : samples) {
        if (e.dim != dim) throw std::invalid_argument("mixed dimensions");
        for (const auto& [k, c] : e.coeffs)
            rows.emplace(k, 0);
    }
    int r = 0;
    for (auto& [k, idx] : rows) idx = r++;
    Eigen::MatrixXd A =
        Eigen::MatrixXd::Zero(static_cast<int>(rows.size()),
                              static_cast<int>(samples.size()));
    for (int j = 0; j < static_cast<int>(samples.size()); ++j)
        for (const auto& [k, c] : samples[j].coeffs)
            A(rows.at(k), j) = c;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    return n < sv.size() ? sv(n) : 0.0;
}

} // namespace gw
