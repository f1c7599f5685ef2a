#include "gausswidth/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace gw {

double hermite_eval(int k, double x) {
    if (k < 0) throw std::invalid_argument("Hermite degree must be >= 0");
    double hm1 = 0.0, h = 1.0; // H_{-1}, H_0
    for (int j = 0; j < k; ++j) {
        double hp1 = (x * h - std::sqrt(static_cast<double>(j)) * hm1) /
                     std::sqrt(static_cast<double>(j + 1));
        hm1 = h;
        h = hp1;
    }
    return h;
}

std::vector<double> hermite_all(int kmax, double x) {
    if (kmax < 0) throw std::invalid_argument("Hermite degree must be >= 0");
    std::vector<double> vals(kmax + 1);
    vals[0] = 1.0;
    if (kmax >= 1) vals[1] = x;
    for (int j = 1; j + 1 <= kmax; ++j)
        vals[j + 1] = (x * vals[j] - std::sqrt(static_cast<double>(j)) * vals[j - 1]) /
                      std::sqrt(static_cast<double>(j + 1));
    return vals;
}

double hermite_tensor_eval(const MultiIndex& k, std::span<const double> x) {
    if (k.size() != x.size())
        throw std::invalid_argument("multi-index and point dimensions differ");
    double prod = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) prod *= hermite_eval(k[j], x[j]);
    return prod;
}

} // namespace gw
