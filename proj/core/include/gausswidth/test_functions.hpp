#pragma once

#include <string>

#include "gausswidth/expansion.hpp"
#include "gausswidth/norms.hpp"

namespace gw {

// Named test-function library used by the experiment harness.  Ids:
//   "gauss-bump"            C^inf bump exp(-1/(1-|x/R|^2)) on |x| < R
//   "kink-<beta>"           |x_1 - c|^beta * smooth window (beta > 0)
//   "hermite-poly"          fixed low-degree Hermite polynomial combination
//   "gauss-growth[-m<m>-p<p>]"  e^{|x|^2/(2p)} (1+|x|^2)^{-m}
// Each carries exact partials where they are cheap, and a smoothness note.
TestFunction test_function(const std::string& id, int dim);

// The same Hermite-polynomial combination as an expansion (exact coefficients).
HermiteExpansion hermite_poly_expansion(int dim);

// Wrap an expansion as a TestFunction with exact partial derivatives obtained
// from coefficient-space differentiation (all |a|_1 <= max_partial_order).
TestFunction expansion_function(const HermiteExpansion& e, int max_partial_order,
                                const std::string& name);

} // namespace gw
