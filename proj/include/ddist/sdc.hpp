#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ddist/geom.hpp"
#include "ddist/measures.hpp"

namespace ddist {

enum class CutRule {
  weighted_median,    // weighted median of the (d-2)-face coordinates
  unweighted_median,  // plain median of the same coordinates
};

struct SdcOptions {
  CutRule cut = CutRule::weighted_median;
  /// A face orthogonal to the p-th and q-th axes of the current axis order
  /// (1-based) weighs 2^(exponent * (p + q)).
  double weight_exponent = 0.5;
  /// Sub-problems with at most this many boxes are handed to the grid
  /// oracle. 0 disables the shortcut.
  std::size_t small_cutoff = 0;
};

/// Counters filled by one run of the recursion.
struct SdcStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t max_level = 0;
};

/// A (d-2)-face of a box strictly inside the domain: fixed coordinates on
/// axes i < j.
struct FaceEvent {
  std::size_t box = 0;
  std::size_t axis_i = 0;
  std::size_t axis_j = 0;
  double coord_i = 0.0;
  double coord_j = 0.0;
  double weight = 0.0;
};

/// All faces of `boxes` whose two fixed coordinates lie strictly inside
/// `gamma`, weighted relative to the axis order that starts at
/// `first_axis`. Boxes meeting gamma in zero volume have no faces.
std::vector<FaceEvent> enumerate_faces(std::span<const AxisBox> boxes,
                                       const DomainBox& gamma,
                                       std::size_t first_axis = 0,
                                       double weight_exponent = 0.5);

struct SimplifyResult {
  std::vector<std::size_t> kept;  // indices into the input span
  std::size_t containing = 0;
};

/// Splits boxes into those covering gamma (counted) and those meeting it in
/// positive volume without covering it (kept). Everything else is dropped.
SimplifyResult simplify(std::span<const AxisBox> boxes, const DomainBox& gamma);

struct Cut {
  std::size_t axis = 0;
  double coordinate = 0.0;
};

/// Splitting hyperplane for the first axis, in the order starting at
/// `first_axis`, that has a face strictly inside gamma. Only boxes that
/// simplify() would keep are considered. Empty when no box has a face
/// inside gamma, i.e. every kept box is a slab.
std::optional<Cut> choose_cut(std::span<const AxisBox> boxes,
                              const DomainBox& gamma, std::size_t first_axis = 0,
                              const SdcOptions& options = {});

DepthDistribution sdc_depth_distribution(const Instance& instance,
                                         const SdcOptions& options = {},
                                         SdcStats* stats = nullptr);
double sdc_klee(const Instance& instance, const SdcOptions& options = {},
                SdcStats* stats = nullptr);
std::size_t sdc_max_depth(const Instance& instance,
                          const SdcOptions& options = {},
                          SdcStats* stats = nullptr);

}  // namespace ddist
