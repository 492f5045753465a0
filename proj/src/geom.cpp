#include "ddist/geom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddist/errors.hpp"

namespace ddist {

namespace {

void require_same_dim(const AxisBox& a, const AxisBox& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw ContractError(std::string(op) + ": dimension mismatch (" +
                        std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()) + ")");
  }
}

}  // namespace

AxisBox::AxisBox(std::vector<double> lo, std::vector<double> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size()) {
    throw ContractError("AxisBox: lo and hi must have the same positive size");
  }
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!std::isfinite(lo_[i]) || !std::isfinite(hi_[i])) {
      throw ContractError("AxisBox: non-finite coordinate in dimension " +
                          std::to_string(i));
    }
    if (lo_[i] > hi_[i]) {
      throw ContractError("AxisBox: lo > hi in dimension " +
                          std::to_string(i));
    }
  }
}

DomainBox::DomainBox(AxisBox box) : box_(std::move(box)) {
  if (box_.dim() == 0) throw ContractError("DomainBox: empty box");
  for (std::size_t i = 0; i < box_.dim(); ++i) {
    if (!(box_.hi(i) > box_.lo(i))) {
      throw ContractError("DomainBox: zero extent in dimension " +
                          std::to_string(i));
    }
  }
}

DomainBox DomainBox::unit(std::size_t d) {
  return DomainBox(std::vector<double>(d, 0.0), std::vector<double>(d, 1.0));
}

double volume(const AxisBox& b) {
  double v = 1.0;
  for (std::size_t i = 0; i < b.dim(); ++i) v *= b.extent(i);
  return v;
}

std::optional<AxisBox> intersect(const AxisBox& a, const AxisBox& b) {
  require_same_dim(a, b, "intersect");
  std::vector<double> lo(a.dim());
  std::vector<double> hi(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    lo[i] = std::max(a.lo(i), b.lo(i));
    hi[i] = std::min(a.hi(i), b.hi(i));
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return AxisBox(std::move(lo), std::move(hi));
}

bool contains(const AxisBox& outer, const AxisBox& inner) {
  require_same_dim(outer, inner, "contains");
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    if (outer.lo(i) > inner.lo(i) || inner.hi(i) > outer.hi(i)) return false;
  }
  return true;
}

std::optional<SlabAxis> slab_axis(const AxisBox& b, const DomainBox& gamma) {
  require_same_dim(b, gamma, "slab_axis");
  SlabAxis result;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (b.lo(i) > gamma.hi(i) || b.hi(i) < gamma.lo(i)) return std::nullopt;
    const bool spans = b.lo(i) <= gamma.lo(i) && b.hi(i) >= gamma.hi(i);
    if (spans) continue;
    if (!result.full_cover()) return std::nullopt;
    result.axis = i;
  }
  return result;
}

std::optional<AxisBox> clip(const AxisBox& b, const DomainBox& gamma) {
  return intersect(b, gamma.box());
}

Instance::Instance(DomainBox domain, std::vector<AxisBox> boxes)
    : domain_(std::move(domain)), boxes_(std::move(boxes)) {
  for (std::size_t k = 0; k < boxes_.size(); ++k) {
    if (boxes_[k].dim() != domain_.dim()) {
      throw ContractError("Instance: box " + std::to_string(k) +
                          " has dimension " +
                          std::to_string(boxes_[k].dim()) + ", expected " +
                          std::to_string(domain_.dim()));
    }
  }
}

}  // namespace ddist
