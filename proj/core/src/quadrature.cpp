#include "gausswidth/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace gw {

namespace {

// Gauss weight at node x: the Christoffel function 1 / sum_{k<n} H_k(x)^2
// over the orthonormal polynomials.  The usual squared-eigenvector formula
// loses all relative accuracy in the far tail -- components below ~1e-16 are
// eigensolver noise, so a true weight of 1e-55 comes out as 1e-33, which
// matters as soon as the integrand grows as fast as the weight decays.  The
// sum below has positive terms only and the recurrence runs in its dominant
// regime, so every digit survives; exact power-of-two rescaling keeps the
// running values finite where H_k itself would overflow.
double christoffel_weight(int n, double x) {
    double hm = 0.0, h = 1.0, sum = 1.0; // H_{-1}, H_0, running sum of H^2
    long shift = 0;                      // sum is scaled by 2^(-1000*shift)
    for (int k = 1; k < n; ++k) {
        double hn = (x * h - std::sqrt(static_cast<double>(k - 1)) * hm) /
                    std::sqrt(static_cast<double>(k));
        hm = h;
        h = hn;
        if (std::abs(h) > 0x1p+500) {
            h *= 0x1p-500;
            hm *= 0x1p-500;
            sum *= 0x1p-1000;
            ++shift;
        }
        sum += h * h;
    }
    // undo the scaling; ldexp underflows cleanly to zero in the far tail
    return std::ldexp(1.0 / sum, static_cast<int>(-1000 * shift));
}

} // namespace

QuadratureRule gauss_hermite_rule(int n) {
    if (n < 1) throw std::invalid_argument("rule size must be >= 1");
    if (n > 4096) throw std::invalid_argument("rule size cap (4096) exceeded");

    if (n == 1) return {{0.0}, {1.0}};

    // Jacobi matrix of the orthonormal recurrence: zero diagonal,
    // off-diagonal sqrt(j), j = 1..n-1.  Only the eigenvalues (nodes) are
    // needed; weights come from the Christoffel function at each node.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int j = 1; j < n; ++j) sub[j - 1] = std::sqrt(static_cast<double>(j));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("tridiagonal eigensolve failed");

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()[i]; // ascending
        rule.weights[i] = christoffel_weight(n, rule.nodes[i]);
        wsum += rule.weights[i];
    }
    // Clean up floating-point drift: exact symmetry and sum(w) = 1.
    for (int i = 0; i < n; ++i) rule.weights[i] /= wsum;
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        double a = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -a;
        rule.nodes[j] = a;
        double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = rule.weights[j] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

} // namespace gw
