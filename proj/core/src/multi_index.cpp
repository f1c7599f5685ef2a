#include "gausswidth/multi_index.hpp"

namespace gw {

namespace {
void recurse(int dim, int pos, int remaining, MultiIndex& cur,
             std::vector<MultiIndex>& out) {
    if (pos == dim - 1) {
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            out.push_back(cur);
        }
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        recurse(dim, pos + 1, remaining - v, cur, out);
    }
}
} // namespace

std::vector<MultiIndex> indices_up_to_order(int dim, int max_order) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (max_order < 0) throw std::invalid_argument("max_order must be >= 0");
    std::vector<MultiIndex> out;
    MultiIndex cur(dim, 0);
    recurse(dim, 0, max_order, cur, out);
    return out;
}

double falling_factorial(const MultiIndex& k, const MultiIndex& a) {
    if (k.size() != a.size())
        throw std::invalid_argument("multi-index dimensions differ");
    double prod = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (a[j] < 0 || k[j] < a[j])
            throw std::invalid_argument("falling factorial needs k >= a >= 0");
        for (int i = 0; i < a[j]; ++i) prod *= static_cast<double>(k[j] - i);
    }
    return prod;
}

} // namespace gw
