#pragma once

#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gausswidth/budget.hpp"
#include "gausswidth/local_operator.hpp"
#include "gausswidth/partition.hpp"

namespace gw {

// Globally assembled approximation operator
//   A_n f = sum_{|k| < xi_n} A_{theta, n_k}[ (f phi_k)(. + k) ](. - k):
// each cell's localized piece is shifted to the origin cube, approximated by
// the local operator at that cell's budget, and shifted back.  At any point at
// most 2^d cells are active; total rank is sum of per-cell ranks <= n.
class AssembledOperator {
  public:
    struct Cell {
        MultiIndex k;
        long long budget = 0;
        LocalApproximant approx;
    };

    AssembledOperator(PartitionOfUnity part, BudgetAllocation alloc,
                      std::vector<Cell> cells);

    double operator()(std::span<const double> x) const;

    long long total_rank() const { return total_rank_; }
    const BudgetAllocation& allocation() const { return alloc_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const PartitionOfUnity& partition() const { return part_; }

  private:
    PartitionOfUnity part_;
    BudgetAllocation alloc_;
    std::vector<Cell> cells_;
    std::unordered_map<std::uint64_t, int> cell_lookup_;
    long long total_rank_ = 0;
};

AssembledOperator assemble(const std::function<double(std::span<const double>)>& f,
                           long long n, const PartitionOfUnity& part,
                           const AuxParams& aux, const LocalOperator& local_op);

} // namespace gw
