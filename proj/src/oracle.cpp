#include "ddist/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "ddist/errors.hpp"

namespace ddist {

namespace {

using Word = std::uint64_t;

// membership[axis][cell * words + w]: bit b set iff box b spans the
// midpoint of that cell interval on that axis.
struct Membership {
  std::size_t words = 0;
  std::vector<std::vector<Word>> per_axis;
};

Membership build_membership(const Instance& instance,
                            const CompressedGrid& grid) {
  Membership m;
  const std::size_t n = instance.size();
  m.words = std::max<std::size_t>(1, (n + 63) / 64);
  m.per_axis.resize(instance.dim());
  for (std::size_t axis = 0; axis < instance.dim(); ++axis) {
    const auto& xs = grid.coords[axis];
    const std::size_t cells = xs.size() - 1;
    auto& bits = m.per_axis[axis];
    bits.assign(cells * m.words, 0);
    for (std::size_t c = 0; c < cells; ++c) {
      const double mid = 0.5 * (xs[c] + xs[c + 1]);
      for (std::size_t b = 0; b < n; ++b) {
        const auto& box = instance.boxes()[b];
        if (box.lo(axis) <= mid && mid <= box.hi(axis)) {
          bits[c * m.words + b / 64] |= Word{1} << (b % 64);
        }
      }
    }
  }
  return m;
}

class CellWalker {
 public:
  CellWalker(const CompressedGrid& grid, const Membership& m,
             DepthDistribution& out)
      : grid_(grid), m_(m), out_(out),
        masks_(grid.coords.size() + 1, std::vector<Word>(m.words, ~Word{0})) {}

  void run() { walk(0, 1.0); }

 private:
  // Cells are visited in row-major index order, so the per-depth sums are
  // deterministic.
  void walk(std::size_t axis, double partial_volume) {
    if (axis == grid_.coords.size()) {
      std::size_t depth = 0;
      for (Word w : masks_[axis]) depth += static_cast<std::size_t>(std::popcount(w));
      out_[depth] += partial_volume;
      return;
    }
    const auto& xs = grid_.coords[axis];
    const auto& bits = m_.per_axis[axis];
    for (std::size_t c = 0; c + 1 < xs.size(); ++c) {
      for (std::size_t w = 0; w < m_.words; ++w) {
        masks_[axis + 1][w] = masks_[axis][w] & bits[c * m_.words + w];
      }
      walk(axis + 1, partial_volume * (xs[c + 1] - xs[c]));
    }
  }

  const CompressedGrid& grid_;
  const Membership& m_;
  DepthDistribution& out_;
  std::vector<std::vector<Word>> masks_;
};

}  // namespace

std::size_t CompressedGrid::cell_count() const {
  std::size_t cells = 1;
  for (const auto& xs : coords) {
    const std::size_t k = xs.size() - 1;
    if (k != 0 && cells > std::numeric_limits<std::size_t>::max() / k) {
      return std::numeric_limits<std::size_t>::max();
    }
    cells *= k;
  }
  return cells;
}

CompressedGrid compress(const Instance& instance) {
  CompressedGrid grid;
  grid.coords.resize(instance.dim());
  const auto& domain = instance.domain();
  for (std::size_t axis = 0; axis < instance.dim(); ++axis) {
    auto& xs = grid.coords[axis];
    xs.push_back(domain.lo(axis));
    xs.push_back(domain.hi(axis));
    for (const auto& b : instance.boxes()) {
      for (double x : {b.lo(axis), b.hi(axis)}) {
        if (domain.lo(axis) < x && x < domain.hi(axis)) xs.push_back(x);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  return grid;
}

DepthDistribution oracle_dd(const Instance& instance, std::size_t cell_budget) {
  const auto grid = compress(instance);
  const std::size_t cells = grid.cell_count();
  if (cells > cell_budget) {
    throw BudgetError("oracle: " + std::to_string(cells) +
                      " grid cells exceed the budget of " +
                      std::to_string(cell_budget) +
                      "; use fewer boxes or a lower dimension");
  }
  DepthDistribution dd(instance.size());
  const auto membership = build_membership(instance, grid);
  CellWalker(grid, membership, dd).run();
  return dd;
}

double oracle_klee(const Instance& instance, std::size_t cell_budget) {
  return dd_to_klee(oracle_dd(instance, cell_budget));
}

std::size_t oracle_max_depth(const Instance& instance, std::size_t cell_budget) {
  return dd_to_maxdepth(oracle_dd(instance, cell_budget));
}

}  // namespace ddist
