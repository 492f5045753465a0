#pragma once

#include <cstddef>
#include <vector>

#include "ddist/geom.hpp"
#include "ddist/measures.hpp"

namespace ddist {

inline constexpr std::size_t kDefaultCellBudget = 50'000'000;

/// Per dimension, the sorted distinct clipped box endpoints together with
/// the domain endpoints. Consecutive coordinates bound the cells.
struct CompressedGrid {
  std::vector<std::vector<double>> coords;

  /// Number of cells, saturating at SIZE_MAX.
  std::size_t cell_count() const;
};

CompressedGrid compress(const Instance& instance);

/// Brute force over the compressed grid: every cell takes the depth of its
/// midpoint. Throws BudgetError when the grid has more than `cell_budget`
/// cells.
DepthDistribution oracle_dd(const Instance& instance,
                            std::size_t cell_budget = kDefaultCellBudget);
double oracle_klee(const Instance& instance,
                   std::size_t cell_budget = kDefaultCellBudget);
std::size_t oracle_max_depth(const Instance& instance,
                             std::size_t cell_budget = kDefaultCellBudget);

}  // namespace ddist
