#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>

#include "gausswidth/multi_index.hpp"

namespace gw {

// Sparse coefficient map of a Hermite expansion f = sum_k c_k H_k on R^d.
// Map keys are multi-indices of length dim; iteration order is lexicographic,
// which keeps serialization and accumulation deterministic.
struct HermiteExpansion {
    int dim = 1;
    std::map<MultiIndex, double> coeffs;

    double coeff(const MultiIndex& k) const {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? 0.0 : it->second;
    }
    void set(MultiIndex k, double v);
    int max_total_order() const;
};

// Coefficients c_k = int f H_k dgamma for all |k|_1 <= max_total_degree via a
// tensor Gauss-Hermite rule with rule_size nodes per coordinate.  Requires
// rule_size >= max_total_degree + 1 (so products f*H_k with f polynomial of
// the same degree are integrated exactly); throws if dim * rule_size^dim
// exceeds node_cap.
HermiteExpansion expand(const std::function<double(std::span<const double>)>& f,
                        int dim, int max_total_degree, int rule_size,
                        long long node_cap = 8'000'000);

// Pointwise evaluation sum_k c_k H_k(x).
double synthesize(const HermiteExpansion& e, std::span<const double> x);

// l2 norm of the coefficients = L_2(gamma) norm of the expansion.
double parseval_l2_norm(const HermiteExpansion& e);

// Sobolev-type norm sqrt( sum_k (1+|k|_1)^s c_k^2 ), s >= 0.
double hs_norm(const HermiteExpansion& e, double s);

// Coefficient-space derivative: D^a f = sum_{k>=a} c_k sqrt(k!/(k-a)!) H_{k-a}.
HermiteExpansion derivative_expansion(const HermiteExpansion& e, const MultiIndex& a);

// JSON serialization: {"dim": d, "coeffs": [{"k": [...], "v": c}, ...]} with
// coefficient entries in lexicographic key order; output is byte-stable.
std::string to_json_string(const HermiteExpansion& e);
HermiteExpansion expansion_from_json(const std::string& text);

} // namespace gw
