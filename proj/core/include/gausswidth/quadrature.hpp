#pragma once

#include <vector>

namespace gw {

// Gauss rule for the standard Gaussian probability measure on R:
// sum_i w_i f(x_i) = int f dgamma exactly for polynomials of degree <= 2n-1.
// Weights are positive and sum to 1; nodes are symmetric and ascending.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Built by the Golub-Welsch method: eigenvalues of the symmetric tridiagonal
// Jacobi matrix with zero diagonal and off-diagonals sqrt(1),...,sqrt(n-1);
// weights are the squared first eigenvector components.
QuadratureRule gauss_hermite_rule(int n);

} // namespace gw
