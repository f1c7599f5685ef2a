#include "gausswidth/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace gw {

namespace {

double moll(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// smooth step: 0 for t <= 0, 1 for t >= 1
double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = moll(t);
    return a / (a + moll(1.0 - t));
}

} // namespace

PartitionOfUnity::PartitionOfUnity(double theta, int dim, int kappa)
    : theta_(theta), dim_(dim), kappa_(kappa) {
    if (!(theta > 1.0 && theta < 2.0))
        throw std::invalid_argument("theta must lie in (1,2)");
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (kappa < 0) throw std::invalid_argument("kappa must be >= 0");
    // support theta'/2 strictly inside theta/2, plateau [-1/2,1/2]
    support_half_ = 0.5 * (1.0 + 0.98 * (theta - 1.0));
    ramp_ = support_half_ - 0.5;
}

double PartitionOfUnity::bump1(double u) const {
    double au = std::abs(u);
    if (au <= 0.5) return 1.0;
    if (au >= support_half_) return 0.0;
    return smooth_step((support_half_ - au) / ramp_);
}

double PartitionOfUnity::psi(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("psi: dimension mismatch");
    double v = 1.0;
    for (double xj : x) {
        v *= bump1(xj);
        if (v == 0.0) return 0.0;
    }
    return v;
}

double PartitionOfUnity::denominator(std::span<const double> x) const {
    // integer translates of the plateau tile R, so each factor is >= 1
    double v = 1.0;
    for (double xj : x) {
        double fl = std::floor(xj), sum = 0.0;
        for (int o = -1; o <= 1; ++o) sum += bump1(xj - (fl + o));
        v *= sum;
    }
    return v;
}

double PartitionOfUnity::phi(std::span<const double> x) const {
    double num = psi(x);
    return num == 0.0 ? 0.0 : num / denominator(x);
}

double PartitionOfUnity::phi(const MultiIndex& cell,
                             std::span<const double> x) const {
    if (static_cast<int>(cell.size()) != dim_ ||
        static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("phi: dimension mismatch");
    std::vector<double> z(dim_);
    for (int j = 0; j < dim_; ++j) z[j] = x[j] - cell[j];
    return phi(z);
}

double PartitionOfUnity::partition_sum(std::span<const double> x) const {
    double s = 0.0;
    for (const auto& cell : active_cells(x)) s += phi(cell, x);
    return s;
}

std::vector<MultiIndex> PartitionOfUnity::active_cells(
    std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("active_cells: dimension mismatch");
    std::vector<std::vector<int>> cand(dim_);
    for (int j = 0; j < dim_; ++j) {
        int fl = static_cast<int>(std::floor(x[j]));
        for (int o = -1; o <= 1; ++o)
            if (std::abs(x[j] - (fl + o)) <= support_half_)
                cand[j].push_back(fl + o);
    }
    std::vector<MultiIndex> cells;
    MultiIndex cur(dim_);
    std::vector<std::size_t> idx(dim_, 0);
    while (true) {
        for (int j = 0; j < dim_; ++j) cur[j] = cand[j][idx[j]];
        cells.push_back(cur);
        int j = 0;
        for (; j < dim_; ++j) {
            if (++idx[j] < cand[j].size()) break;
            idx[j] = 0;
        }
        if (j == dim_) break;
    }
    return cells;
}

PartitionOfUnity build_partition(double theta, int dim, int kappa) {
    return PartitionOfUnity(theta, dim, kappa);
}

} // namespace gw
