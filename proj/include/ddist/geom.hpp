#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ddist {

/// Closed axis-aligned box in R^d. Zero-extent boxes are legal.
class AxisBox {
 public:
  AxisBox() = default;
  /// Throws ContractError when the corner sizes differ, are empty, or
  /// some lo[i] > hi[i].
  AxisBox(std::vector<double> lo, std::vector<double> hi);

  std::size_t dim() const { return lo_.size(); }
  double lo(std::size_t i) const { return lo_[i]; }
  double hi(std::size_t i) const { return hi_[i]; }
  double extent(std::size_t i) const { return hi_[i] - lo_[i]; }
  std::span<const double> lo() const { return lo_; }
  std::span<const double> hi() const { return hi_; }

  bool operator==(const AxisBox&) const = default;

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
};

/// An AxisBox with strictly positive extent in every dimension.
class DomainBox {
 public:
  explicit DomainBox(AxisBox box);
  DomainBox(std::vector<double> lo, std::vector<double> hi)
      : DomainBox(AxisBox(std::move(lo), std::move(hi))) {}

  static DomainBox unit(std::size_t d);

  const AxisBox& box() const { return box_; }
  operator const AxisBox&() const { return box_; }  // NOLINT

  std::size_t dim() const { return box_.dim(); }
  double lo(std::size_t i) const { return box_.lo(i); }
  double hi(std::size_t i) const { return box_.hi(i); }
  double extent(std::size_t i) const { return box_.extent(i); }

  bool operator==(const DomainBox&) const = default;

 private:
  AxisBox box_;
};

/// Result of classifying a box against a domain: either the single axis
/// along which it is constrained, or a full cover of the domain.
struct SlabAxis {
  static constexpr std::size_t kFullCover = static_cast<std::size_t>(-1);

  std::size_t axis = kFullCover;

  bool full_cover() const { return axis == kFullCover; }
  bool operator==(const SlabAxis&) const = default;
};

double volume(const AxisBox& b);

std::optional<AxisBox> intersect(const AxisBox& a, const AxisBox& b);

bool contains(const AxisBox& outer, const AxisBox& inner);

std::optional<SlabAxis> slab_axis(const AxisBox& b, const DomainBox& gamma);

std::optional<AxisBox> clip(const AxisBox& b, const DomainBox& gamma);

/// A domain plus the boxes measured inside it. Boxes may extend past the
/// domain; every measure restricts them to it.
class Instance {
 public:
  Instance(DomainBox domain, std::vector<AxisBox> boxes);

  std::size_t dim() const { return domain_.dim(); }
  std::size_t size() const { return boxes_.size(); }
  const DomainBox& domain() const { return domain_; }
  const std::vector<AxisBox>& boxes() const { return boxes_; }

  bool operator==(const Instance&) const = default;

 private:
  DomainBox domain_;
  std::vector<AxisBox> boxes_;
};

enum class GeneratorKind { uniform, slabs, cubes, containing_chain };

GeneratorKind parse_generator_kind(std::string_view name);
std::string_view to_string(GeneratorKind kind);

/// Seeded instance families inside [0,1]^d. Same arguments, same instance.
Instance generate(GeneratorKind kind, std::size_t n, std::size_t d,
                  std::uint64_t seed);

/// Instances whose profile along axis 0 is exactly `profile` (when
/// profile <= n): boxes come in groups of `profile`, every box of a group
/// straddles the group's centre line and no two groups overlap on axis 0.
Instance generate_with_profile(std::size_t n, std::size_t d,
                               std::size_t profile, std::uint64_t seed);

Instance read_instance(std::string_view json);
std::string write_instance(const Instance& instance);

}  // namespace ddist
