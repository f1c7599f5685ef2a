#include "gausswidth/expansion.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "gausswidth/hermite.hpp"
#include "gausswidth/quadrature.hpp"

namespace gw {

void HermiteExpansion::set(MultiIndex k, double v) {
    if (static_cast<int>(k.size()) != dim)
        throw std::invalid_argument("multi-index dimension mismatch");
    for (int e : k)
        if (e < 0) throw std::invalid_argument("multi-index entries must be >= 0");
    if (v == 0.0)
        coeffs.erase(k);
    else
        coeffs[std::move(k)] = v;
}

int HermiteExpansion::max_total_order() const {
    int m = 0;
    for (const auto& [k, c] : coeffs) {
        int o = order(k);
        m = o > m ? o : m;
    }
    return m;
}

HermiteExpansion expand(const std::function<double(std::span<const double>)>& f,
                        int dim, int max_total_degree, int rule_size,
                        long long node_cap) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (max_total_degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (rule_size < max_total_degree + 1)
        throw std::invalid_argument("rule_size must be >= max_total_degree + 1");
    double nodes_needed = static_cast<double>(dim) *
                          std::pow(static_cast<double>(rule_size), dim);
    if (nodes_needed > static_cast<double>(node_cap))
        throw std::invalid_argument("tensor node budget exceeds node cap");

    QuadratureRule rule = gauss_hermite_rule(rule_size);

    // Univariate Hermite values at every node, H[i][j] = H_j(x_i).
    std::vector<std::vector<double>> table(rule_size);
    for (int i = 0; i < rule_size; ++i)
        table[i] = hermite_all(max_total_degree, rule.nodes[i]);

    std::vector<MultiIndex> idx = indices_up_to_order(dim, max_total_degree);
    std::vector<double> acc(idx.size(), 0.0);

    // Odometer over the tensor grid, lexicographic node order for determinism.
    std::vector<int> pos(dim, 0);
    std::vector<double> x(dim);
    for (int j = 0; j < dim; ++j) x[j] = rule.nodes[0];
    while (true) {
        double w = 1.0;
        for (int j = 0; j < dim; ++j) w *= rule.weights[pos[j]];
        double fw = f(x) * w;
        for (std::size_t m = 0; m < idx.size(); ++m) {
            double h = 1.0;
            for (int j = 0; j < dim; ++j) h *= table[pos[j]][idx[m][j]];
            acc[m] += fw * h;
        }
        int j = dim - 1;
        while (j >= 0) {
            if (++pos[j] < rule_size) {
                x[j] = rule.nodes[pos[j]];
                break;
            }
            pos[j] = 0;
            x[j] = rule.nodes[0];
            --j;
        }
        if (j < 0) break;
    }

    HermiteExpansion e;
    e.dim = dim;
    for (std::size_t m = 0; m < idx.size(); ++m)
        if (acc[m] != 0.0) e.coeffs[idx[m]] = acc[m];
    return e;
}

double synthesize(const HermiteExpansion& e, std::span<const double> x) {
    if (static_cast<int>(x.size()) != e.dim)
        throw std::invalid_argument("point dimension mismatch");
    int kmax = 0;
    for (const auto& [k, c] : e.coeffs) kmax = std::max(kmax, max_entry(k));
    std::vector<std::vector<double>> table(e.dim);
    for (int j = 0; j < e.dim; ++j) table[j] = hermite_all(kmax, x[j]);
    double sum = 0.0;
    for (const auto& [k, c] : e.coeffs) {
        double h = 1.0;
        for (int j = 0; j < e.dim; ++j) h *= table[j][k[j]];
        sum += c * h;
    }
    return sum;
}

double parseval_l2_norm(const HermiteExpansion& e) {
    double s = 0.0;
    for (const auto& [k, c] : e.coeffs) s += c * c;
    return std::sqrt(s);
}

double hs_norm(const HermiteExpansion& e, double s) {
    if (s < 0.0) throw std::invalid_argument("smoothness s must be >= 0");
    double acc = 0.0;
    for (const auto& [k, c] : e.coeffs)
        acc += std::pow(1.0 + order(k), s) * c * c;
    return std::sqrt(acc);
}

HermiteExpansion derivative_expansion(const HermiteExpansion& e, const MultiIndex& a) {
    if (static_cast<int>(a.size()) != e.dim)
        throw std::invalid_argument("derivative multi-index dimension mismatch");
    for (int v : a)
        if (v < 0) throw std::invalid_argument("derivative orders must be >= 0");
    HermiteExpansion out;
    out.dim = e.dim;
    for (const auto& [k, c] : e.coeffs) {
        bool ok = true;
        for (int j = 0; j < e.dim; ++j)
            if (k[j] < a[j]) { ok = false; break; }
        if (!ok) continue;
        MultiIndex km(e.dim);
        for (int j = 0; j < e.dim; ++j) km[j] = k[j] - a[j];
        double w = std::sqrt(falling_factorial(k, a));
        out.coeffs[km] += c * w;
    }
    // drop exact zeros produced by cancellation
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second == 0.0 ? out.coeffs.erase(it) : std::next(it);
    return out;
}

std::string to_json_string(const HermiteExpansion& e) {
    nlohmann::json j;
    j["dim"] = e.dim;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& [k, c] : e.coeffs) { // map iteration = lexicographic
        nlohmann::json entry;
        entry["k"] = k;
        entry["v"] = c;
        j["coeffs"].push_back(std::move(entry));
    }
    return j.dump();
}

HermiteExpansion expansion_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    HermiteExpansion e;
    e.dim = j.at("dim").get<int>();
    if (e.dim < 1) throw std::invalid_argument("dim must be >= 1");
    for (const auto& entry : j.at("coeffs")) {
        MultiIndex k = entry.at("k").get<MultiIndex>();
        e.set(std::move(k), entry.at("v").get<double>());
    }
    return e;
}

} // namespace gw
