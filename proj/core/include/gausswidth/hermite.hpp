#pragma once

#include <span>
#include <vector>

#include "gausswidth/multi_index.hpp"

namespace gw {

// Orthonormal Hermite polynomials for the standard Gaussian weight:
// H_0 = 1, H_1(x) = x, and
//   H_{k+1}(x) = (x H_k(x) - sqrt(k) H_{k-1}(x)) / sqrt(k+1),
// so that int H_j H_k dgamma = delta_jk with dgamma = (2pi)^{-1/2} e^{-x^2/2} dx.
double hermite_eval(int k, double x);

// Values H_0(x) .. H_kmax(x) in one recurrence pass.
std::vector<double> hermite_all(int kmax, double x);

// Tensor product H_k(x) = prod_j H_{k_j}(x_j); dimensions must agree.
double hermite_tensor_eval(const MultiIndex& k, std::span<const double> x);

} // namespace gw
