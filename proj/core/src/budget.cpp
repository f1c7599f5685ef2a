#include "gausswidth/budget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gw {

AuxParams choose_aux_params(double p, double q, double s, int dim,
                            SpaceFlavor flavor) {
    if (!(q >= 1.0) || !(p > q))
        throw std::invalid_argument("need p > q >= 1");
    if (!(s > 0.0) || dim < 1) throw std::invalid_argument("bad s or dim");
    AuxParams aux;
    aux.p = p;
    aux.q = q;
    aux.s = s;
    aux.dim = dim;
    aux.flavor = flavor;
    if (flavor == SpaceFlavor::GaussGagliardo) {
        // tighter interior window q < q* < p*/2, same one-third split
        if (!(q < 0.5 * p))
            throw std::invalid_argument("Gaussian-Gagliardo flavor needs q < p/2");
        double gap = 0.5 * p - q;
        aux.q_star = q + gap / 3.0;
        aux.p_star = p - 2.0 * gap / 3.0;
    } else {
        double gap = p - q;
        aux.q_star = q + gap / 3.0;
        aux.p_star = p - gap / 3.0;
    }
    double th = std::min(0.5 * (aux.p_star / aux.q_star - 1.0), 0.99);
    aux.t0 = std::log((1.0 + th) / (1.0 - th)); // 2 atanh(th)
    if (flavor == SpaceFlavor::GaussGagliardo)
        aux.exponent1 = 1.0 / (2.0 * aux.q_star) - 1.0 / aux.p_star;
    else
        aux.exponent1 =
            1.0 / (2.0 * aux.q_star) - (1.0 + th) / (2.0 * aux.p_star);
    aux.exponent2 = q / (2.0 * aux.q_star) * (1.0 - q / p);
    if (!(aux.exponent1 > 0.0) || !(aux.exponent2 > 0.0))
        throw std::logic_error("auxiliary exponents must come out positive");
    aux.delta = 0.9 * std::min(aux.exponent1, aux.exponent2);
    if (flavor == SpaceFlavor::Mixed) {
        aux.a = s;
        aux.b = (dim - 1) * (s + 0.5 - 1.0 / p);
    } else {
        aux.a = s / dim;
        aux.b = 0.0;
    }
    return aux;
}

double rho_constant(double delta, double a, int dim, double tail_tol) {
    if (!(delta > 0.0) || !(a > 0.0) || dim < 1 || !(tail_tol > 0.0))
        throw std::invalid_argument("rho_constant: bad arguments");
    double sum = 1.0; // true j=0 shell count (the lattice origin)
    for (long long j = 1;; ++j) {
        double shell = std::pow(2.0 * j + 1.0, dim) - std::pow(2.0 * j - 1.0, dim);
        double term = shell * std::exp(-delta * j * j / (2.0 * a));
        sum += term;
        if (term < tail_tol) break;
        if (j > 10'000'000)
            throw std::runtime_error("rho_constant: series failed to tail off");
    }
    return 1.0 / sum;
}

BudgetAllocation allocate(long long n, const AuxParams& aux) {
    if (n < 2) throw std::invalid_argument("budget n must be >= 2");
    if (!(aux.delta > 0.0) || !(aux.a > 0.0))
        throw std::invalid_argument("allocate: aux params not initialized");
    BudgetAllocation out;
    out.xi = std::sqrt(2.0 * aux.a * std::log(static_cast<double>(n)) / aux.delta);
    out.rho = rho_constant(aux.delta, aux.a, aux.dim);
    const int kmax = static_cast<int>(std::floor(out.xi));
    const double xi2 = out.xi * out.xi;
    const double scale = aux.delta / (2.0 * aux.a);
    MultiIndex k(aux.dim, -kmax);
    while (true) {
        double k2 = 0.0;
        for (int v : k) k2 += static_cast<double>(v) * v;
        if (k2 < xi2) {
            long long nk = static_cast<long long>(
                std::floor(out.rho * static_cast<double>(n) * std::exp(-scale * k2)));
            out.cells.emplace_back(k, nk);
            out.total += nk;
        }
        int j = 0;
        for (; j < aux.dim; ++j) {
            if (++k[j] <= kmax) break;
            k[j] = -kmax;
        }
        if (j == aux.dim) break;
    }
    // floor + the true origin shell count make this provable; failing it is
    // a bug, not an input condition
    if (out.total > n)
        throw std::logic_error("allocate: budgets exceeded n");
    return out;
}

} // namespace gw
