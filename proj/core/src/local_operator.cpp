#include "gausswidth/local_operator.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gw {

namespace {

// base^e, saturating above cap
long long ipow_capped(long long base, int e, long long cap) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

} // namespace

LocalApproximant local_fourier(
    const std::function<double(std::span<const double>)>& g, int m, double theta,
    int dim) {
    if (m < 1 || dim < 1 || !(theta > 0.0))
        throw std::invalid_argument("local_fourier: bad arguments");
    int K = 0;
    while (ipow_capped(2 * (K + 1) + 1, dim, m) <= m) ++K;
    const int W = 2 * K + 1;
    const long long n_coeff = ipow_capped(W, dim, 1LL << 26);
    const int N = std::max(64, 4 * (K + 1));
    const long long grid = ipow_capped(N, dim, 1LL << 26);
    if (n_coeff > (1LL << 24) || grid > (1LL << 24))
        throw std::invalid_argument("local_fourier: budget too large for direct DFT");

    // sample on the uniform periodic grid, coordinate 0 fastest
    std::vector<std::complex<double>> data(grid);
    {
        std::vector<int> idx(dim, 0);
        std::vector<double> x(dim);
        for (long long t = 0; t < grid; ++t) {
            for (int j = 0; j < dim; ++j)
                x[j] = theta * (static_cast<double>(idx[j]) / N - 0.5);
            data[t] = g(x);
            for (int j = 0; j < dim; ++j) {
                if (++idx[j] < N) break;
                idx[j] = 0;
            }
        }
    }

    // axis-by-axis DFT onto frequencies -K..K; after transforming axis a the
    // layout is [W^a][current axis][N^{d-1-a}]
    std::vector<std::complex<double>> tw(static_cast<std::size_t>(W) * N);
    for (int nu = 0; nu < W; ++nu)
        for (int i = 0; i < N; ++i) {
            double ph = -2.0 * std::numbers::pi * (nu - K) *
                        (static_cast<double>(i) / N - 0.5);
            tw[static_cast<std::size_t>(nu) * N + i] = {std::cos(ph), std::sin(ph)};
        }
    for (int axis = 0; axis < dim; ++axis) {
        long long pre = 1;
        for (int j = 0; j < axis; ++j) pre *= W;
        long long post = 1;
        for (int j = axis + 1; j < dim; ++j) post *= N;
        std::vector<std::complex<double>> next(pre * W * post);
        for (long long po = 0; po < post; ++po)
            for (int nu = 0; nu < W; ++nu)
                for (long long pr = 0; pr < pre; ++pr) {
                    std::complex<double> s = 0.0;
                    const std::complex<double>* twn =
                        &tw[static_cast<std::size_t>(nu) * N];
                    for (int i = 0; i < N; ++i)
                        s += twn[i] * data[pr + pre * (i + static_cast<long long>(N) * po)];
                    next[pr + pre * (nu + static_cast<long long>(W) * po)] = s;
                }
        data.swap(next);
    }
    const double scale = std::pow(static_cast<double>(N), -dim);
    for (auto& c : data) c *= scale;

    LocalApproximant out;
    out.rank_used = static_cast<int>(n_coeff);
    out.eval = [coef = std::move(data), K, W, dim, theta,
                n_coeff](std::span<const double> x) {
        if (static_cast<int>(x.size()) != dim)
            throw std::invalid_argument("approximant: dimension mismatch");
        std::vector<std::vector<std::complex<double>>> pw(dim);
        for (int j = 0; j < dim; ++j) {
            double base = 2.0 * std::numbers::pi * x[j] / theta;
            std::complex<double> step{std::cos(base), std::sin(base)};
            std::complex<double> cur{std::cos(-K * base), std::sin(-K * base)};
            pw[j].resize(W);
            for (int t = 0; t < W; ++t) {
                pw[j][t] = cur;
                cur *= step;
            }
        }
        std::complex<double> acc = 0.0;
        for (long long t = 0; t < n_coeff; ++t) {
            long long r = t;
            std::complex<double> w = 1.0;
            for (int j = 0; j < dim; ++j) {
                w *= pw[j][r % W];
                r /= W;
            }
            acc += coef[t] * w;
        }
        return acc.real();
    };
    return out;
}

double cardinal_bspline(int degree, double t) {
    if (degree < 0 || degree > 10)
        throw std::invalid_argument("cardinal_bspline: degree out of range");
    if (degree == 0) return (t >= -0.5 && t < 0.5) ? 1.0 : 0.0;
    double half = 0.5 * (degree + 1);
    if (t <= -half || t >= half) return 0.0;
    return ((t + half) * cardinal_bspline(degree - 1, t + 0.5) +
            (half - t) * cardinal_bspline(degree - 1, t - 0.5)) /
           degree;
}

LocalApproximant local_spline_sampler(
    const std::function<double(std::span<const double>)>& g, int m, double theta,
    int dim, int order) {
    if (order < 2 || order > 4)
        throw std::invalid_argument("spline order must be 2, 3 or 4");
    if (m < 1 || dim < 1 || !(theta > 0.0))
        throw std::invalid_argument("local_spline_sampler: bad arguments");
    const int degree = order - 1;
    int M = 1;
    while (ipow_capped(M + 1, dim, m) <= m) ++M;
    const long long grid = ipow_capped(M, dim, 1LL << 26);
    if (grid > (1LL << 24))
        throw std::invalid_argument("local_spline_sampler: grid too large");
    const double h = theta / M;

    // cell-centered samples, coordinate 0 fastest
    std::vector<double> lam(grid);
    {
        std::vector<int> idx(dim, 0);
        std::vector<double> x(dim);
        for (long long t = 0; t < grid; ++t) {
            for (int j = 0; j < dim; ++j) x[j] = -0.5 * theta + (idx[j] + 0.5) * h;
            lam[t] = g(x);
            for (int j = 0; j < dim; ++j) {
                if (++idx[j] < M) break;
                idx[j] = 0;
            }
        }
    }
    // variance-corrected quasi-interpolation coefficients, axis by axis:
    // lambda = (I - var/2 * second difference) samples, periodic wrap.
    // Reproduces polynomials up to the spline degree (<= 3).
    const double var = order / 12.0; // (degree+1)/12
    for (int axis = 0; axis < dim; ++axis) {
        long long pre = 1;
        for (int j = 0; j < axis; ++j) pre *= M;
        long long post = grid / (pre * M);
        std::vector<double> next(grid);
        for (long long po = 0; po < post; ++po)
            for (int i = 0; i < M; ++i) {
                int ip = (i + 1) % M, im = (i + M - 1) % M;
                for (long long pr = 0; pr < pre; ++pr) {
                    auto at = [&](int ii) {
                        return lam[pr + pre * (ii + static_cast<long long>(M) * po)];
                    };
                    next[pr + pre * (i + static_cast<long long>(M) * po)] =
                        at(i) - 0.5 * var * (at(ip) - 2.0 * at(i) + at(im));
                }
            }
        lam.swap(next);
    }

    LocalApproximant out;
    out.rank_used = static_cast<int>(grid);
    out.eval = [lam = std::move(lam), M, dim, theta, h,
                degree](std::span<const double> x) {
        if (static_cast<int>(x.size()) != dim)
            throw std::invalid_argument("approximant: dimension mismatch");
        const double sup = 0.5 * (degree + 1);
        std::vector<std::vector<std::pair<int, double>>> cand(dim);
        for (int j = 0; j < dim; ++j) {
            double u = (x[j] + 0.5 * theta) / h - 0.5;
            int lo = static_cast<int>(std::ceil(u - sup));
            int hi = static_cast<int>(std::floor(u + sup));
            for (int i = lo; i <= hi; ++i) {
                double w = cardinal_bspline(degree, u - i);
                if (w != 0.0) cand[j].push_back({((i % M) + M) % M, w});
            }
            if (cand[j].empty()) return 0.0;
        }
        double acc = 0.0;
        std::vector<std::size_t> idx(dim, 0);
        while (true) {
            double w = 1.0;
            long long flat = 0, strd = 1;
            for (int j = 0; j < dim; ++j) {
                w *= cand[j][idx[j]].second;
                flat += strd * cand[j][idx[j]].first;
                strd *= M;
            }
            acc += w * lam[flat];
            int j = 0;
            for (; j < dim; ++j) {
                if (++idx[j] < cand[j].size()) break;
                idx[j] = 0;
            }
            if (j == dim) break;
        }
        return acc;
    };
    return out;
}

LocalOperator local_spline_sampler_operator(int order) {
    return [order](const std::function<double(std::span<const double>)>& g, int m,
                   double theta, int dim) {
        return local_spline_sampler(g, m, theta, dim, order);
    };
}

} // namespace gw
