#include "ddist/measures.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ddist/errors.hpp"
#include "json.hpp"

namespace ddist {

namespace {

struct Event {
  double x;
  bool end;  // starts sort before ends at equal coordinates
  bool operator<(const Event& o) const {
    return x < o.x || (x == o.x && !end && o.end);
  }
};

// Walks the elementary segments of `domain` between consecutive interval
// endpoints and reports (depth, length) for each.
template <class Visit>
void sweep_1d(std::span<const Interval> intervals, Interval domain,
              Visit&& visit) {
  std::vector<Event> events;
  events.reserve(2 * intervals.size());
  for (const auto& iv : intervals) {
    const double lo = std::max(iv.lo, domain.lo);
    const double hi = std::min(iv.hi, domain.hi);
    if (lo > hi) continue;
    events.push_back({lo, false});
    events.push_back({hi, true});
  }
  std::sort(events.begin(), events.end());
  std::size_t depth = 0;
  double prev = domain.lo;
  for (const auto& e : events) {
    visit(depth, e.x - prev);
    prev = e.x;
    if (e.end) {
      --depth;
    } else {
      ++depth;
    }
  }
  visit(depth, domain.hi - prev);
}

double covered_length(std::span<const Interval> intervals, Interval domain) {
  double covered = 0.0;
  sweep_1d(intervals, domain, [&](std::size_t depth, double len) {
    if (depth > 0) covered += len;
  });
  return covered;
}

std::size_t max_depth_1d(std::span<const Interval> intervals, Interval domain) {
  std::size_t best = 0;
  sweep_1d(intervals, domain, [&](std::size_t depth, double len) {
    if (len > 0.0) best = std::max(best, depth);
  });
  return best;
}

Interval axis_interval(const AxisBox& b, std::size_t axis) {
  return {b.lo(axis), b.hi(axis)};
}

std::vector<std::vector<Interval>> group_slabs(std::span<const AxisBox> slabs,
                                               const DomainBox& gamma) {
  std::vector<std::vector<Interval>> per_axis(gamma.dim());
  for (std::size_t k = 0; k < slabs.size(); ++k) {
    const auto axis = slab_axis(slabs[k], gamma);
    if (!axis) {
      throw SlabPreconditionError("box " + std::to_string(k) +
                                  " is not a slab of the domain");
    }
    if (axis->full_cover()) {
      throw SlabPreconditionError("box " + std::to_string(k) +
                                  " covers the whole domain");
    }
    per_axis[axis->axis].push_back(axis_interval(slabs[k], axis->axis));
  }
  return per_axis;
}

}  // namespace

DepthDistribution::DepthDistribution(std::vector<double> v) : v_(std::move(v)) {
  if (v_.empty()) v_.push_back(0.0);
}

double DepthDistribution::total() const {
  return std::accumulate(v_.begin(), v_.end(), 0.0);
}

double DepthDistribution::negligible() const { return 1e-12 * std::abs(total()); }

void DepthDistribution::clamp_negligible() {
  const double eps = negligible();
  for (double& x : v_) {
    if (x < 0.0 && -x <= eps) x = 0.0;
  }
}

void dd_accumulate(DepthDistribution& target, const DepthDistribution& source,
                   std::size_t shift) {
  if (source.size() + shift > target.size()) {
    throw ContractError("dd_accumulate: shift " + std::to_string(shift) +
                        " overflows a distribution of " +
                        std::to_string(target.max_depth_index()) + " boxes");
  }
  for (std::size_t k = 0; k < source.size(); ++k) target[k + shift] += source[k];
}

double dd_to_klee(const DepthDistribution& dd) {
  double sum = 0.0;
  for (std::size_t k = 1; k < dd.size(); ++k) sum += dd[k];
  return sum;
}

std::size_t dd_to_maxdepth(const DepthDistribution& dd) {
  const double eps = dd.negligible();
  for (std::size_t k = dd.size(); k-- > 1;) {
    if (dd[k] > eps) return k;
  }
  return 0;
}

std::vector<double> dd_to_probabilities(const DepthDistribution& dd) {
  const double covered = dd_to_klee(dd);
  if (!(covered > 0.0)) {
    throw UndefinedResultError(
        "dd_to_probabilities: the boxes cover no volume of the domain");
  }
  std::vector<double> p;
  p.reserve(dd.size() - 1);
  for (std::size_t k = 1; k < dd.size(); ++k) p.push_back(dd[k] / covered);
  return p;
}

DepthDistribution dd_intervals_1d(std::span<const Interval> intervals,
                                  Interval domain) {
  if (!(domain.hi > domain.lo)) {
    throw ContractError("dd_intervals_1d: domain must have positive length");
  }
  DepthDistribution dd(intervals.size());
  sweep_1d(intervals, domain,
           [&](std::size_t depth, double len) { dd[depth] += len; });
  return dd;
}

namespace slab_detail {

DepthDistribution dd_grouped(std::span<const std::vector<Interval>> per_axis,
                             const DomainBox& gamma) {
  std::vector<RealPolynomial> factors;
  double constant = 1.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < per_axis.size(); ++i) {
    const Interval dom{gamma.lo(i), gamma.hi(i)};
    if (per_axis[i].empty()) {
      constant *= gamma.extent(i);
      continue;
    }
    n += per_axis[i].size();
    const auto dd = dd_intervals_1d(per_axis[i], dom);
    factors.push_back({{dd.values().begin(), dd.values().end()}});
  }
  if (factors.empty()) return DepthDistribution(std::vector<double>{constant});
  auto product = poly_multiply(factors);
  for (double& c : product.coeffs) c *= constant;
  product.coeffs.resize(n + 1, 0.0);
  return DepthDistribution(std::move(product.coeffs));
}

double klee_grouped(std::span<const std::vector<Interval>> per_axis,
                    const DomainBox& gamma) {
  double uncovered = 1.0;
  for (std::size_t i = 0; i < per_axis.size(); ++i) {
    const Interval dom{gamma.lo(i), gamma.hi(i)};
    uncovered *= gamma.extent(i) - covered_length(per_axis[i], dom);
  }
  return volume(gamma) - uncovered;
}

std::size_t maxdepth_grouped(std::span<const std::vector<Interval>> per_axis,
                             const DomainBox& gamma) {
  std::size_t depth = 0;
  for (std::size_t i = 0; i < per_axis.size(); ++i) {
    depth += max_depth_1d(per_axis[i], {gamma.lo(i), gamma.hi(i)});
  }
  return depth;
}

}  // namespace slab_detail

DepthDistribution dd_slabs(std::span<const AxisBox> slabs,
                           const DomainBox& gamma) {
  const auto per_axis = group_slabs(slabs, gamma);
  return slab_detail::dd_grouped(per_axis, gamma);
}

double klee_slabs(std::span<const AxisBox> slabs, const DomainBox& gamma) {
  const auto per_axis = group_slabs(slabs, gamma);
  return slab_detail::klee_grouped(per_axis, gamma);
}

std::size_t maxdepth_slabs(std::span<const AxisBox> slabs,
                           const DomainBox& gamma) {
  const auto per_axis = group_slabs(slabs, gamma);
  return slab_detail::maxdepth_grouped(per_axis, gamma);
}

std::string to_json(const MeasureReport& report) {
  // Field order is fixed, so an ordered object is used.
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  if (report.dd) {
    const auto values = report.dd->values();
    doc["v0"] = values[0];
    doc["v"] = std::vector<double>(values.begin() + 1, values.end());
  }
  if (report.klee) doc["klee"] = *report.klee;
  if (report.max_depth) doc["max_depth"] = *report.max_depth;
  return doc.dump() + "\n";
}

}  // namespace ddist
