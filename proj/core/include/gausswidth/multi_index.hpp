#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gw {

// Multi-index k = (k_1,...,k_d), k_j >= 0.  Lexicographic order via vector<=>,
// which is also the order used for serialization and map iteration.
using MultiIndex = std::vector<int>;

inline int order(const MultiIndex& k) {
    int s = 0;
    for (int v : k) {
        if (v < 0) throw std::invalid_argument("multi-index entries must be >= 0");
        s += v;
    }
    return s;
}

inline int max_entry(const MultiIndex& k) {
    int m = 0;
    for (int v : k) m = v > m ? v : m;
    return m;
}

// All multi-indices of dimension d with |k|_1 <= max_order, in lexicographic order.
std::vector<MultiIndex> indices_up_to_order(int dim, int max_order);

// Falling factorial product  prod_j k_j (k_j-1) ... (k_j - a_j + 1).
// Requires k >= a componentwise (caller's contract for derivative weights).
double falling_factorial(const MultiIndex& k, const MultiIndex& a);

} // namespace gw
