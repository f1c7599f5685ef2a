#include "gausswidth/assemble.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace gw {

namespace {

// injective packing of a small lattice vector into 64 bits (64/dim bits per
// coordinate, offset-binary)
std::uint64_t pack_cell(const MultiIndex& k) {
    const int dim = static_cast<int>(k.size());
    const int bits = std::min(21, 64 / dim); // cap so shifts stay in range
    const std::int64_t lim = 1LL << (bits - 1);
    std::uint64_t key = 0;
    for (int j = 0; j < dim; ++j) {
        std::int64_t v = static_cast<std::int64_t>(k[j]) + lim;
        if (v < 0 || v >= (1LL << bits))
            throw std::runtime_error("cell coordinate out of packing range");
        key |= static_cast<std::uint64_t>(v) << (bits * j);
    }
    return key;
}

} // namespace

AssembledOperator::AssembledOperator(PartitionOfUnity part,
                                     BudgetAllocation alloc,
                                     std::vector<Cell> cells)
    : part_(std::move(part)), alloc_(std::move(alloc)), cells_(std::move(cells)) {
    cell_lookup_.reserve(cells_.size());
    for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
        if (!cell_lookup_.emplace(pack_cell(cells_[i].k), i).second)
            throw std::invalid_argument("duplicate cell");
        total_rank_ += cells_[i].approx.rank_used;
    }
}

double AssembledOperator::operator()(std::span<const double> x) const {
    double s = 0.0;
    std::vector<double> z(x.size());
    for (const auto& cell : part_.active_cells(x)) {
        auto it = cell_lookup_.find(pack_cell(cell));
        if (it == cell_lookup_.end()) continue;
        const Cell& c = cells_[it->second];
        for (std::size_t j = 0; j < x.size(); ++j) z[j] = x[j] - c.k[j];
        s += c.approx.eval(z);
    }
    return s;
}

AssembledOperator assemble(const std::function<double(std::span<const double>)>& f,
                           long long n, const PartitionOfUnity& part,
                           const AuxParams& aux, const LocalOperator& local_op) {
    if (part.dim() != aux.dim)
        throw std::invalid_argument("assemble: partition/aux dimension mismatch");
    BudgetAllocation alloc = allocate(n, aux);
    std::vector<AssembledOperator::Cell> cells;
    const double theta = part.theta();
    for (const auto& [k, nk] : alloc.cells) {
        if (nk < 1) continue; // zero budget = zero approximant
        // localized piece shifted to the origin cube; reads f only where the
        // cell's own bump is nonzero
        auto g = [f, k, part](std::span<const double> z) {
            double ph = part.phi(z);
            if (ph == 0.0) return 0.0;
            std::vector<double> y(z.size());
            for (std::size_t j = 0; j < z.size(); ++j) y[j] = z[j] + k[j];
            return f(y) * ph;
        };
        int m = static_cast<int>(std::min<long long>(nk, INT_MAX));
        cells.push_back({k, nk, local_op(g, m, theta, aux.dim)});
    }
    return AssembledOperator(part, alloc, std::move(cells));
}

} // namespace gw
