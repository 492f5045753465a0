#include "ddist/sdc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "ddist/errors.hpp"
#include "ddist/oracle.hpp"

namespace ddist {

namespace {

using BoxId = std::uint32_t;

// Box coordinates laid out contiguously: [lo_0..lo_{d-1}, hi_0..hi_{d-1}].
class FlatBoxes {
 public:
  FlatBoxes(std::span<const AxisBox> boxes, std::size_t d)
      : d_(d), data_(boxes.size() * 2 * d) {
    if (boxes.size() > std::numeric_limits<BoxId>::max()) {
      throw ContractError("sdc: too many boxes");
    }
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      for (std::size_t i = 0; i < d; ++i) {
        data_[b * 2 * d + i] = boxes[b].lo(i);
        data_[b * 2 * d + d + i] = boxes[b].hi(i);
      }
    }
  }

  std::size_t size() const { return data_.size() / (2 * d_); }
  std::size_t dim() const { return d_; }
  double lo(BoxId b, std::size_t i) const { return data_[b * 2 * d_ + i]; }
  double hi(BoxId b, std::size_t i) const { return data_[b * 2 * d_ + d_ + i]; }

  AxisBox box(BoxId b) const {
    const auto* first = data_.data() + b * 2 * d_;
    return AxisBox(std::vector<double>(first, first + d_),
                   std::vector<double>(first + d_, first + 2 * d_));
  }

 private:
  std::size_t d_;
  std::vector<double> data_;
};

struct Region {
  std::vector<double> lo;
  std::vector<double> hi;

  explicit Region(const DomainBox& g)
      : lo(g.box().lo().begin(), g.box().lo().end()),
        hi(g.box().hi().begin(), g.box().hi().end()) {}

  double volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
  }
  DomainBox domain() const { return DomainBox(lo, hi); }
};

enum class Relation { dropped, covers, partial };

// `non_spanning` receives the number of axes on which the box does not
// span the region.
Relation relate(const FlatBoxes& boxes, BoxId b, const Region& g,
                std::size_t& non_spanning) {
  non_spanning = 0;
  for (std::size_t i = 0; i < g.lo.size(); ++i) {
    const double lo = boxes.lo(b, i);
    const double hi = boxes.hi(b, i);
    if (!(std::min(hi, g.hi[i]) > std::max(lo, g.lo[i]))) return Relation::dropped;
    if (lo > g.lo[i] || hi < g.hi[i]) ++non_spanning;
  }
  return non_spanning == 0 ? Relation::covers : Relation::partial;
}

bool inside(double x, const Region& g, std::size_t i) {
  return g.lo[i] < x && x < g.hi[i];
}

int interior_endpoints(const FlatBoxes& boxes, BoxId b, const Region& g,
                       std::size_t i) {
  return static_cast<int>(inside(boxes.lo(b, i), g, i)) +
         static_cast<int>(inside(boxes.hi(b, i), g, i));
}

// 1-based position of `axis` in the order that starts at `first`.
std::size_t position(std::size_t axis, std::size_t first, std::size_t d) {
  return (axis + d - first) % d + 1;
}

double face_weight(std::size_t p, std::size_t q, double exponent) {
  return std::exp2(exponent * static_cast<double>(p + q));
}

using WeightedCoord = std::pair<double, double>;  // (coordinate, weight)

double weighted_median(std::vector<WeightedCoord>& entries) {
  std::sort(entries.begin(), entries.end());
  double total = 0.0;
  for (const auto& e : entries) total += e.second;
  double running = 0.0;
  for (const auto& e : entries) {
    running += e.second;
    if (running >= 0.5 * total) return e.first;
  }
  return entries.back().first;
}

std::optional<Cut> select_cut(const FlatBoxes& boxes, std::span<const BoxId> ids,
                              const Region& g, std::size_t first_axis,
                              const SdcOptions& options,
                              std::vector<WeightedCoord>& scratch) {
  const std::size_t d = g.lo.size();
  const bool weighted = options.cut == CutRule::weighted_median;
  for (std::size_t r = 0; r < d; ++r) {
    const std::size_t axis = (first_axis + r) % d;
    scratch.clear();
    for (BoxId b : ids) {
      const bool lo_in = inside(boxes.lo(b, axis), g, axis);
      const bool hi_in = inside(boxes.hi(b, axis), g, axis);
      if (!lo_in && !hi_in) continue;
      // Every interior endpoint on `axis` meets the same set of partner
      // endpoints, so its faces collapse into one weighted coordinate.
      double w = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == axis) continue;
        const int cnt = interior_endpoints(boxes, b, g, j);
        if (cnt == 0) continue;
        w += weighted ? cnt * face_weight(1, position(j, axis, d),
                                          options.weight_exponent)
                      : 1.0;
      }
      if (w == 0.0) continue;
      if (lo_in) scratch.emplace_back(boxes.lo(b, axis), w);
      if (hi_in) scratch.emplace_back(boxes.hi(b, axis), w);
    }
    if (!scratch.empty()) return Cut{axis, weighted_median(scratch)};
  }
  return std::nullopt;
}

// Axis on which a kept slab is constrained.
std::size_t constrained_axis(const FlatBoxes& boxes, BoxId b, const Region& g) {
  for (std::size_t i = 0; i < g.lo.size(); ++i) {
    if (boxes.lo(b, i) > g.lo[i] || boxes.hi(b, i) < g.hi[i]) return i;
  }
  return 0;
}

void group_by_axis(const FlatBoxes& boxes, std::span<const BoxId> ids,
                   const Region& g, std::vector<std::vector<Interval>>& per_axis) {
  per_axis.assign(g.lo.size(), {});
  for (BoxId b : ids) {
    const std::size_t axis = constrained_axis(boxes, b, g);
    per_axis[axis].push_back({boxes.lo(b, axis), boxes.hi(b, axis)});
  }
}

Instance sub_instance(const FlatBoxes& boxes, std::span<const BoxId> ids,
                      const Region& g) {
  std::vector<AxisBox> sub;
  sub.reserve(ids.size());
  for (BoxId b : ids) sub.push_back(boxes.box(b));
  return Instance(g.domain(), std::move(sub));
}

// The recursion shared by the three measures. A policy supplies:
//   prune(region, c)       -> true when the sub-domain is settled by c alone
//   leaf(boxes, ids, region, c)   all kept boxes are slabs of the region
//   small(boxes, ids, region, c)  brute force for tiny sub-problems
template <class Policy>
class Engine {
 public:
  Engine(const FlatBoxes& boxes, const SdcOptions& options, Policy& policy,
         SdcStats& stats)
      : boxes_(boxes), options_(options), policy_(policy), stats_(stats) {}

  void run(std::vector<BoxId> ids, const Region& gamma, std::size_t c,
           std::size_t first_axis, std::size_t level) {
    ++stats_.nodes;
    stats_.max_level = std::max(stats_.max_level, level);

    std::vector<BoxId> kept;
    kept.reserve(ids.size());
    bool any_face = false;
    for (BoxId b : ids) {
      std::size_t non_spanning = 0;
      switch (relate(boxes_, b, gamma, non_spanning)) {
        case Relation::covers: ++c; break;
        case Relation::partial:
          kept.push_back(b);
          any_face = any_face || non_spanning >= 2;
          break;
        case Relation::dropped: break;
      }
    }
    ids = {};

    if (policy_.prune(gamma, c)) return;
    if (!any_face) {
      ++stats_.leaves;
      policy_.leaf(boxes_, kept, gamma, c);
      return;
    }
    if (options_.small_cutoff > 0 && kept.size() <= options_.small_cutoff) {
      ++stats_.leaves;
      policy_.small(boxes_, kept, gamma, c);
      return;
    }

    const auto cut = select_cut(boxes_, kept, gamma, first_axis, options_, scratch_);
    const std::size_t axis = cut->axis;
    const double m = cut->coordinate;

    std::vector<BoxId> left;
    std::vector<BoxId> right;
    for (BoxId b : kept) {
      if (boxes_.lo(b, axis) < m) left.push_back(b);
      if (boxes_.hi(b, axis) > m) right.push_back(b);
    }
    kept = {};

    Region g_left = gamma;
    g_left.hi[axis] = m;
    Region g_right = gamma;
    g_right.lo[axis] = m;
    const std::size_t next_axis = (axis + 1) % gamma.lo.size();
    run(std::move(left), g_left, c, next_axis, level + 1);
    run(std::move(right), g_right, c, next_axis, level + 1);
  }

 private:
  const FlatBoxes& boxes_;
  const SdcOptions& options_;
  Policy& policy_;
  SdcStats& stats_;
  std::vector<WeightedCoord> scratch_;
};

struct DistributionPolicy {
  DepthDistribution& acc;
  std::vector<std::vector<Interval>> per_axis;

  bool prune(const Region&, std::size_t) { return false; }

  void leaf(const FlatBoxes& boxes, std::span<const BoxId> ids, const Region& g,
            std::size_t c) {
    if (ids.empty()) {
      // Nothing left but the c covering boxes.
      acc[c] += g.volume();
      return;
    }
    group_by_axis(boxes, ids, g, per_axis);
    dd_accumulate(acc, slab_detail::dd_grouped(per_axis, g.domain()), c);
  }

  void small(const FlatBoxes& boxes, std::span<const BoxId> ids, const Region& g,
             std::size_t c) {
    dd_accumulate(acc, oracle_dd(sub_instance(boxes, ids, g)), c);
  }
};

struct KleePolicy {
  double total = 0.0;
  std::vector<std::vector<Interval>> per_axis;

  bool prune(const Region& g, std::size_t c) {
    if (c == 0) return false;
    total += g.volume();
    return true;
  }

  void leaf(const FlatBoxes& boxes, std::span<const BoxId> ids, const Region& g,
            std::size_t) {
    if (ids.empty()) return;
    group_by_axis(boxes, ids, g, per_axis);
    total += slab_detail::klee_grouped(per_axis, g.domain());
  }

  void small(const FlatBoxes& boxes, std::span<const BoxId> ids, const Region& g,
             std::size_t) {
    total += oracle_klee(sub_instance(boxes, ids, g));
  }
};

struct MaxDepthPolicy {
  std::size_t best = 0;
  std::vector<std::vector<Interval>> per_axis;

  bool prune(const Region&, std::size_t) { return false; }

  void leaf(const FlatBoxes& boxes, std::span<const BoxId> ids, const Region& g,
            std::size_t c) {
    std::size_t depth = c;
    if (!ids.empty()) {
      group_by_axis(boxes, ids, g, per_axis);
      depth += slab_detail::maxdepth_grouped(per_axis, g.domain());
    }
    best = std::max(best, depth);
  }

  void small(const FlatBoxes& boxes, std::span<const BoxId> ids, const Region& g,
             std::size_t c) {
    best = std::max(best, c + oracle_max_depth(sub_instance(boxes, ids, g)));
  }
};

template <class Policy>
void drive(const Instance& instance, const SdcOptions& options, Policy& policy,
           SdcStats* stats) {
  const FlatBoxes boxes(instance.boxes(), instance.dim());
  std::vector<BoxId> ids(boxes.size());
  for (std::size_t b = 0; b < ids.size(); ++b) ids[b] = static_cast<BoxId>(b);
  SdcStats local;
  Engine<Policy> engine(boxes, options, policy, stats ? *stats : local);
  engine.run(std::move(ids), Region(instance.domain()), 0, 0, 0);
}

}  // namespace

SimplifyResult simplify(std::span<const AxisBox> boxes, const DomainBox& gamma) {
  const FlatBoxes flat(boxes, gamma.dim());
  const Region g(gamma);
  SimplifyResult result;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    std::size_t non_spanning = 0;
    switch (relate(flat, static_cast<BoxId>(b), g, non_spanning)) {
      case Relation::covers: ++result.containing; break;
      case Relation::partial: result.kept.push_back(b); break;
      case Relation::dropped: break;
    }
  }
  return result;
}

std::optional<Cut> choose_cut(std::span<const AxisBox> boxes,
                              const DomainBox& gamma, std::size_t first_axis,
                              const SdcOptions& options) {
  const FlatBoxes flat(boxes, gamma.dim());
  const Region g(gamma);
  std::vector<BoxId> ids;
  for (std::size_t b : simplify(boxes, gamma).kept) ids.push_back(static_cast<BoxId>(b));
  std::vector<WeightedCoord> scratch;
  return select_cut(flat, ids, g, first_axis % gamma.dim(), options, scratch);
}

std::vector<FaceEvent> enumerate_faces(std::span<const AxisBox> boxes,
                                       const DomainBox& gamma,
                                       std::size_t first_axis,
                                       double weight_exponent) {
  const std::size_t d = gamma.dim();
  const FlatBoxes flat(boxes, d);
  const Region g(gamma);
  std::vector<FaceEvent> faces;
  for (std::size_t b : simplify(boxes, gamma).kept) {
    const auto id = static_cast<BoxId>(b);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        const double w = face_weight(position(i, first_axis % d, d),
                                     position(j, first_axis % d, d),
                                     weight_exponent);
        for (double xi : {flat.lo(id, i), flat.hi(id, i)}) {
          if (!inside(xi, g, i)) continue;
          for (double xj : {flat.lo(id, j), flat.hi(id, j)}) {
            if (!inside(xj, g, j)) continue;
            faces.push_back({b, i, j, xi, xj, w});
          }
        }
      }
    }
  }
  return faces;
}

DepthDistribution sdc_depth_distribution(const Instance& instance,
                                         const SdcOptions& options,
                                         SdcStats* stats) {
  DepthDistribution acc(instance.size());
  DistributionPolicy policy{acc, {}};
  drive(instance, options, policy, stats);
  acc.clamp_negligible();
  return acc;
}

double sdc_klee(const Instance& instance, const SdcOptions& options,
                SdcStats* stats) {
  KleePolicy policy;
  drive(instance, options, policy, stats);
  return policy.total;
}

std::size_t sdc_max_depth(const Instance& instance, const SdcOptions& options,
                          SdcStats* stats) {
  MaxDepthPolicy policy;
  drive(instance, options, policy, stats);
  return policy.best;
}

}  // namespace ddist
