#pragma once

#include <span>
#include <vector>

#include "gausswidth/multi_index.hpp"

namespace gw {

// Smooth partition of unity on R^d subordinate to the integer-translate cover
// by cubes k + [-theta/2, theta/2]^d, 1 < theta < 2:
//   phi_k(x) = psi(x - k) / sum_l psi(x - l),
// where psi is a tensor product of C^inf bumps built from the exp(-1/t)
// mollifier.  Each bump equals 1 on [-1/2,1/2] (so the denominator is >= 1
// everywhere) and vanishes outside [-theta'/2, theta'/2] with theta' < theta
// (so supp phi_k stays strictly inside the open cube).  By construction
// phi_k(x) = phi_0(x - k) and sum_k phi_k = 1 exactly.
class PartitionOfUnity {
  public:
    PartitionOfUnity(double theta, int dim, int kappa);

    double theta() const { return theta_; }
    int dim() const { return dim_; }
    int kappa() const { return kappa_; } // declared derivative-bound order
    double support_half_width() const { return support_half_; }

    // Univariate bump g and tensor bump psi(x) = prod_j g(x_j).
    double bump1(double u) const;
    double psi(std::span<const double> x) const;

    // phi_k(x); cell defaults to the origin.  Zero outside the cell cube.
    double phi(std::span<const double> x) const;
    double phi(const MultiIndex& cell, std::span<const double> x) const;

    // sum over the <= 2^d cells whose cube contains x of phi_l(x); equals 1.
    double partition_sum(std::span<const double> x) const;

    // Cells whose (closed) support cube contains x.
    std::vector<MultiIndex> active_cells(std::span<const double> x) const;

  private:
    double denominator(std::span<const double> x) const;
    double theta_;
    int dim_;
    int kappa_;
    double support_half_; // theta'/2, slightly inside theta/2
    double ramp_;         // transition width of the bump
};

PartitionOfUnity build_partition(double theta, int dim, int kappa);

} // namespace gw
