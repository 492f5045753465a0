#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddist/geom.hpp"

namespace ddist {

/// Volumes by depth: v[k] is the volume of the domain covered by exactly k
/// boxes, for k = 0..n. Entry 0 is the uncovered part of the domain.
class DepthDistribution {
 public:
  DepthDistribution() : v_(1, 0.0) {}
  /// All-zero distribution for `n_boxes` boxes (n_boxes + 1 entries).
  explicit DepthDistribution(std::size_t n_boxes) : v_(n_boxes + 1, 0.0) {}
  explicit DepthDistribution(std::vector<double> v);

  std::size_t size() const { return v_.size(); }
  std::size_t max_depth_index() const { return v_.size() - 1; }
  double operator[](std::size_t k) const { return v_[k]; }
  double& operator[](std::size_t k) { return v_[k]; }
  std::span<const double> values() const { return v_; }

  /// Sum of all entries, i.e. the volume of the domain.
  double total() const;

  /// 1e-12 of the total volume: magnitudes below are treated as zero.
  double negligible() const;

  /// Sets entries in [-negligible(), 0) to zero.
  void clamp_negligible();

  bool operator==(const DepthDistribution&) const = default;

 private:
  std::vector<double> v_;
};

/// target[k + shift] += source[k] for every k. Throws ContractError when
/// the shifted source does not fit.
void dd_accumulate(DepthDistribution& target, const DepthDistribution& source,
                   std::size_t shift);

double dd_to_klee(const DepthDistribution& dd);
std::size_t dd_to_maxdepth(const DepthDistribution& dd);
/// Entry k-1 of the result is the probability that a uniform point of the
/// union hits exactly k boxes. Throws UndefinedResultError on an empty union.
std::vector<double> dd_to_probabilities(const DepthDistribution& dd);

/// Coefficient sequence; coeffs[j] multiplies x^j.
struct RealPolynomial {
  std::vector<double> coeffs;

  std::size_t size() const { return coeffs.size(); }
  bool operator==(const RealPolynomial&) const = default;
};

/// Factor size from which poly_multiply switches to the FFT path.
inline constexpr std::size_t kConvolutionCutoff = 64;

RealPolynomial poly_multiply_direct(const RealPolynomial& a,
                                    const RealPolynomial& b);
RealPolynomial poly_multiply_transform(const RealPolynomial& a,
                                       const RealPolynomial& b);
/// Product of all factors. Small factors are convolved directly, larger
/// ones through the FFT; tiny negative round-off is clamped to zero.
RealPolynomial poly_multiply(std::span<const RealPolynomial> ps);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Length of `domain` covered by exactly k of the intervals, k = 0..n.
DepthDistribution dd_intervals_1d(std::span<const Interval> intervals,
                                  Interval domain);

/// Depth distribution of boxes that are all slabs of `gamma`, computed as
/// the product of one depth polynomial per axis. Boxes that cover the whole
/// domain or are not slabs raise SlabPreconditionError.
DepthDistribution dd_slabs(std::span<const AxisBox> slabs,
                           const DomainBox& gamma);
double klee_slabs(std::span<const AxisBox> slabs, const DomainBox& gamma);
std::size_t maxdepth_slabs(std::span<const AxisBox> slabs,
                           const DomainBox& gamma);

/// The slab routines above, over slabs already grouped by orthogonal axis.
/// `per_axis[i]` are the clipped projections onto axis i.
namespace slab_detail {
DepthDistribution dd_grouped(std::span<const std::vector<Interval>> per_axis,
                             const DomainBox& gamma);
double klee_grouped(std::span<const std::vector<Interval>> per_axis,
                    const DomainBox& gamma);
std::size_t maxdepth_grouped(std::span<const std::vector<Interval>> per_axis,
                             const DomainBox& gamma);
}  // namespace slab_detail

/// Which parts of a measures report are present.
struct MeasureReport {
  std::optional<DepthDistribution> dd;
  std::optional<double> klee;
  std::optional<std::size_t> max_depth;
};

/// {"v0": ..., "v": [...], "klee": ..., "max_depth": ...} with absent
/// parts omitted.
std::string to_json(const MeasureReport& report);

}  // namespace ddist
