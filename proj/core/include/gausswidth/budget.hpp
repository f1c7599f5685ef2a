#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gausswidth/multi_index.hpp"

namespace gw {

// Which smoothness scale the source-space norm lives on; selects the
// auxiliary-exponent recipe and the target rate exponents (a, b).
enum class SpaceFlavor {
    Isotropic,       // a = s/d, b = 0
    GaussGagliardo,  // Gaussian-weighted Gagliardo variant, needs q < p/2
    Mixed,           // dominating mixed smoothness: a = s, b = (d-1)(s + 1/2 - 1/p)
};

// Auxiliary exponents controlling the per-cell budget decay e^{-delta|k|^2/(2a)}.
struct AuxParams {
    double p = 2.0, q = 1.0, s = 1.0;
    int dim = 1;
    SpaceFlavor flavor = SpaceFlavor::Isotropic;
    double q_star = 0.0, p_star = 0.0;
    double t0 = 0.0;            // tanh(t0/2) = clamp((p*/q* - 1)/2, (0, 0.99))
    double exponent1 = 0.0;     // decay available from the norm comparison
    double exponent2 = 0.0;     // decay available from the Gaussian tail
    double delta = 0.0;         // 0.9 * min(exponent1, exponent2)
    double a = 0.0, b = 0.0;    // target rate n^{-a} log^b n
};

// Interior auxiliary integrability exponents q < q* < p* < p (one third of the
// gap from each side), the associated time parameter and budget decay delta.
// Requires p > q >= 1 (and q < p/2 for the GaussGagliardo flavor).
AuxParams choose_aux_params(double p, double q, double s, int dim,
                            SpaceFlavor flavor = SpaceFlavor::Isotropic);

// Normalizer rho = 1 / sum_{j>=0} c_j e^{-delta j^2/(2a)} with c_0 = 1 and
// c_j = (2j+1)^d - (2j-1)^d the number of lattice cells with |k|_inf = j.
// Partial sums until the term drops below tail_tol.
double rho_constant(double delta, double a, int dim, double tail_tol = 1e-12);

struct BudgetAllocation {
    double xi = 0.0;  // cell-activity radius sqrt(2a log(n)/delta)
    double rho = 0.0;
    // every lattice cell with |k|_2 < xi and its sample budget
    // n_k = floor(rho * n * e^{-delta |k|^2/(2a)})  (may be zero)
    std::vector<std::pair<MultiIndex, long long>> cells;
    long long total = 0; // sum of budgets; guaranteed <= n
};

// Distribute a global budget n >= 2 over the active cells.  The floor plus the
// true j=0 shell count make sum n_k <= n provable; violation is an internal
// error (std::logic_error), not a recoverable condition.
BudgetAllocation allocate(long long n, const AuxParams& aux);

} // namespace gw
