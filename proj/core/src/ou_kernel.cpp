#include "gausswidth/ou_kernel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gw {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

double sq_dist(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        double d = x[j] - y[j];
        s += d * d;
    }
    return s;
}

// exponent pieces of the Mehler kernel for fixed x,y as functions of t
struct MehlerAt {
    double s2;  // |x|^2 + |y|^2
    double r2;  // |x-y|^2
    int dim;
    double operator()(double t) const {
        double em2t = -std::expm1(-2.0 * t); // 1 - e^{-2t}
        // r2/(4 sinh t) written as (r2/2) e^{-t}/(1-e^{-2t}): no overflow at
        // large t, correct small-t limit r2/(4t).
        double expo = 0.25 * s2 * (1.0 - std::tanh(0.5 * t)) -
                      0.5 * r2 * std::exp(-t) / em2t -
                      0.5 * dim * std::log(em2t);
        return std::exp(expo);
    }
};

} // namespace

double mehler(double t, std::span<const double> x, std::span<const double> y) {
    if (!(t > 0.0)) throw std::invalid_argument("mehler: t must be > 0");
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("mehler: dimension mismatch");
    double s2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s2 += x[j] * x[j] + y[j] * y[j];
    MehlerAt m{s2, sq_dist(x, y), static_cast<int>(x.size())};
    return m(t);
}

HermiteExpansion semigroup_apply(const HermiteExpansion& e, double t) {
    if (t < 0.0) throw std::invalid_argument("semigroup time must be >= 0");
    HermiteExpansion out;
    out.dim = e.dim;
    for (const auto& [k, c] : e.coeffs) {
        double v = c * std::exp(-t * order(k));
        if (v != 0.0) out.coeffs[k] = v;
    }
    return out;
}

double k_sigma(double sigma, std::span<const double> x, std::span<const double> y,
               const KernelEvalConfig& cfg) {
    if (!(sigma > 0.0)) throw std::invalid_argument("k_sigma: sigma must be > 0");
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("k_sigma: dimension mismatch");
    double r2 = sq_dist(x, y);
    if (r2 == 0.0) throw std::domain_error("k_sigma: diagonal x == y");
    double s2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s2 += x[j] * x[j] + y[j] * y[j];
    MehlerAt m{s2, r2, static_cast<int>(x.size())};
    const double half_sigma = 0.5 * sigma;

    // Singular piece, t in (0, t_split]:  tau = r2/(4t) turns it into
    // (4/r2)^{sigma/2} int_{tau0}^inf M_{r2/(4tau)} tau^{sigma/2 - 1} dtau,
    // whose integrand decays like e^{-tau} tau^{sigma/2 + d/2 - 1}.
    double tau0 = r2 / (4.0 * cfg.t_split);
    auto f_small = [&](double tau) {
        return m(r2 / (4.0 * tau)) * std::pow(tau, half_sigma - 1.0);
    };
    double small_part = 0.0;
    {
        double a = tau0;
        double width = tau0 > 5.0 ? tau0 : 5.0;
        int blocks = 0;
        while (true) {
            if (++blocks > cfg.max_blocks)
                throw std::runtime_error("k_sigma: singular piece did not converge");
            double b = a + width;
            double v = GK::integrate(f_small, a, b, 12, cfg.rel_tol);
            small_part += v;
            a = b;
            width *= 2.0;
            if (std::abs(v) < cfg.rel_tol * std::abs(small_part) && a > tau0 + 40.0)
                break;
        }
        small_part *= std::pow(4.0 / r2, half_sigma);
    }

    // Tail piece, t = t_split e^u:  int_0^inf M_t t^{-sigma/2} du with
    // M_t -> 1, so the integrand decays like e^{-u sigma/2}.
    auto f_large = [&](double u) {
        double t = cfg.t_split * std::exp(u);
        return m(t) * std::pow(t, -half_sigma);
    };
    double large_part = 0.0;
    {
        double a = 0.0;
        int blocks = 0;
        while (true) {
            if (++blocks > cfg.max_blocks)
                throw std::runtime_error("k_sigma: tail piece did not converge");
            double b = a + 4.0;
            double v = GK::integrate(f_large, a, b, 12, cfg.rel_tol);
            large_part += v;
            a = b;
            if (std::abs(v) < cfg.rel_tol * std::abs(large_part) && a >= 20.0) break;
        }
    }
    return small_part + large_part;
}

double k_sigma_lower_bound(double sigma, int dim, double dist) {
    if (!(sigma > 0.0) || dim < 1 || !(dist > 0.0))
        throw std::invalid_argument("k_sigma_lower_bound: bad arguments");
    return std::pow(2.0, sigma + 0.5 * dim) * std::tgamma(0.5 * (sigma + dim)) /
           std::pow(dist, dim + sigma);
}

HermiteExpansion frac_ou_spectral(const HermiteExpansion& e, double sigma,
                                  EigenvalueMode mode) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
    HermiteExpansion out;
    out.dim = e.dim;
    for (const auto& [k, c] : e.coeffs) {
        double lambda = 0.0;
        if (mode == EigenvalueMode::Sum) {
            for (int kj : k)
                if (kj > 0) lambda += std::pow(static_cast<double>(kj), sigma);
        } else {
            int o = order(k);
            lambda = o > 0 ? std::pow(static_cast<double>(o), sigma) : 0.0;
        }
        double v = c * lambda;
        if (v != 0.0) out.coeffs[k] = v;
    }
    return out;
}

namespace {

double gauss_density(std::span<const double> y) {
    double q = 0.0;
    for (double v : y) q += v * v;
    return std::exp(-0.5 * q) *
           std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(y.size()));
}

} // namespace

double frac_ou_integral(const std::function<double(std::span<const double>)>& f,
                        double sigma, std::span<const double> x,
                        const KernelEvalConfig& cfg) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("frac_ou_integral: sigma must be in (0,1)");
    const int d = static_cast<int>(x.size());
    if (d < 1 || d > 2)
        throw std::invalid_argument("frac_ou_integral: dimensions 1 and 2 supported");

    const double two_sigma = 2.0 * sigma;
    const double fx = f(x);
    double norm_x = 0.0;
    for (double v : x) norm_x += v * v;
    norm_x = std::sqrt(norm_x);
    const double r_outer = norm_x + 12.0; // gamma mass beyond is ~e^{-36}

    // Angle-summed radial integrand; directions come in +/- pairs so the
    // gradient term cancels and what remains is O(r^{1-2 sigma}) near 0.
    std::vector<std::vector<double>> dirs;
    if (d == 1) {
        dirs = {{1.0}, {-1.0}};
    } else {
        int na = cfg.angular_nodes;
        if (na < 4 || na % 2 != 0)
            throw std::invalid_argument("angular_nodes must be even and >= 4");
        dirs.resize(na);
        for (int i = 0; i < na; ++i) {
            double ang = (i + 0.5) * 2.0 * std::numbers::pi / na;
            dirs[i] = {std::cos(ang), std::sin(ang)};
        }
    }
    // d=1: plain sum over the two signs.  d=2: trapezoid in angle times the
    // polar jacobian r.
    const double ang_weight =
        d == 1 ? 1.0 : 2.0 * std::numbers::pi / static_cast<double>(dirs.size());

    std::vector<double> y(d);
    auto shell = [&](double r) {
        double tot = 0.0;
        for (const auto& u : dirs) {
            bool moved = false;
            for (int j = 0; j < d; ++j) {
                y[j] = x[j] + r * u[j];
                moved = moved || y[j] != x[j];
            }
            if (!moved) continue; // r below the floating resolution at x
            tot += (fx - f(y)) * k_sigma(two_sigma, x, y, cfg) * gauss_density(y);
        }
        tot *= ang_weight;
        if (d == 2) tot *= r;
        return tot;
    };

    // Below r_floor the +/- cancellation (terms ~ r^{-2 sigma} summing to
    // ~ r^{1-2 sigma}) is dominated by rounding noise, so the tip is truncated
    // instead: its true mass is O(r_floor^{2-2 sigma}) <= 1e-4 of the total.
    constexpr double r_floor = 1e-8;
    boost::math::quadrature::tanh_sinh<double> ts(12);
    double inner = ts.integrate(shell, r_floor, 1.0, 1e-7);
    double outer = GK::integrate(shell, 1.0, r_outer, 12, 1e-8);

    // 1/|Gamma(-sigma)| = sigma / Gamma(1-sigma); with the (f(x)-f(y)) order
    // this sign convention yields +|k|_1^sigma eigenvalues.
    double c = sigma / std::tgamma(1.0 - sigma);
    return c * (inner + outer);
}

} // namespace gw
