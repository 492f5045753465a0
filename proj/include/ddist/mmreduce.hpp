#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddist/geom.hpp"

namespace ddist {

/// Square matrix of finite non-negative reals, row-major.
class NonnegativeMatrix {
 public:
  NonnegativeMatrix() = default;
  explicit NonnegativeMatrix(std::size_t order)
      : order_(order), entries_(order * order, 0.0) {}
  /// Throws InputError unless `row_major` has order^2 finite entries >= 0.
  NonnegativeMatrix(std::size_t order, std::vector<double> row_major);

  static NonnegativeMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }
  std::span<const double> entries() const { return entries_; }

  bool operator==(const NonnegativeMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
};

/// One row per line, comma-separated decimals.
NonnegativeMatrix read_matrix_csv(std::string_view text);
std::string write_matrix_csv(const NonnegativeMatrix& m);

NonnegativeMatrix direct_product(const NonnegativeMatrix& a,
                                 const NonnegativeMatrix& b);

/// Planar instance of exactly 5n^2 rectangles whose depth distribution
/// holds every entry of a*b at a distinct depth: one gadget per column of a
/// (paired with the same row of b), doubled suffix slabs for b, and 2n
/// copies of a separator band per row. Zero entries give zero-extent boxes.
Instance build_gadget(const NonnegativeMatrix& a, const NonnegativeMatrix& b);

/// depth(row, col) = row_stride * row + col_stride * col + offset (0-based).
struct DepthIndexMap {
  std::size_t row_stride = 0;
  std::size_t col_stride = 0;
  std::size_t offset = 0;

  std::size_t depth(std::size_t row, std::size_t col) const {
    return row_stride * row + col_stride * col + offset;
  }
  bool operator==(const DepthIndexMap&) const = default;
};

/// Where each product entry of an order-n gadget lands, found by running the
/// grid oracle on a canary pair of prime-valued matrices. Computed once per
/// order and cached. Throws ReductionIntegrityError when no single affine
/// map explains the canary.
DepthIndexMap calibrated_depth_map(std::size_t order);

enum class ReductionEngine { sdc, oracle };

struct ReductionResult {
  NonnegativeMatrix product;
  DepthIndexMap map;
};

/// a*b read off the depth distribution of build_gadget(a, b). Verifies that
/// all odd depths outside the calibrated map carry no volume.
ReductionResult product_via_dd(const NonnegativeMatrix& a,
                               const NonnegativeMatrix& b,
                               ReductionEngine engine);

/// Largest entrywise error: relative on entries of `want` >= 1e-9,
/// absolute below that.
double max_relative_error(const NonnegativeMatrix& got,
                          const NonnegativeMatrix& want);

}  // namespace ddist
