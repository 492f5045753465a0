#include <algorithm>
#include <numeric>

#include "ddist/adaptive.hpp"
#include "json.hpp"

namespace ddist {

namespace {

struct Endpoint {
  double x;
  bool end;
  bool operator<(const Endpoint& o) const {
    return x < o.x || (x == o.x && !end && o.end);
  }
};

std::size_t max_stabbing(const Instance& instance, std::size_t axis) {
  std::vector<Endpoint> events;
  for (const auto& b : instance.boxes()) {
    const auto c = clip(b, instance.domain());
    if (!c) continue;
    events.push_back({c->lo(axis), false});
    events.push_back({c->hi(axis), true});
  }
  std::sort(events.begin(), events.end());
  std::size_t active = 0;
  std::size_t best = 0;
  for (const auto& e : events) {
    if (e.end) {
      --active;
    } else {
      best = std::max(best, ++active);
    }
  }
  return best;
}

// Calls visit(sub_instance) for every piece of the profile partition, with
// the boxes that meet the piece in positive length along the sweep axis.
template <class Visit>
void for_each_piece(const Instance& instance, Visit&& visit) {
  const ProfileReport report = profile(instance);
  const auto pieces = profile_partition(instance, report);
  const std::size_t axis = report.axis;
  const auto& boxes = instance.boxes();

  std::vector<std::size_t> by_lo(boxes.size());
  std::iota(by_lo.begin(), by_lo.end(), std::size_t{0});
  std::stable_sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) {
    return boxes[a].lo(axis) < boxes[b].lo(axis);
  });

  std::size_t next = 0;
  std::vector<std::size_t> active;
  for (const auto& piece : pieces) {
    const double left = piece.lo(axis);
    const double right = piece.hi(axis);
    while (next < by_lo.size() && boxes[by_lo[next]].lo(axis) < right) {
      active.push_back(by_lo[next++]);
    }
    std::vector<AxisBox> members;
    for (std::size_t b : active) {
      if (boxes[b].hi(axis) > left) members.push_back(boxes[b]);
    }
    std::erase_if(active, [&](std::size_t b) { return boxes[b].hi(axis) <= right; });
    visit(Instance(piece, std::move(members)));
  }
}

}  // namespace

ProfileReport profile(const Instance& instance) {
  ProfileReport report;
  report.per_dim.resize(instance.dim());
  for (std::size_t axis = 0; axis < instance.dim(); ++axis) {
    report.per_dim[axis] = max_stabbing(instance, axis);
  }
  const auto it = std::min_element(report.per_dim.begin(), report.per_dim.end());
  report.profile = *it;
  report.axis = static_cast<std::size_t>(it - report.per_dim.begin());
  return report;
}

std::string to_json(const ProfileReport& report) {
  nlohmann::ordered_json doc;
  doc["per_dim"] = report.per_dim;
  doc["profile"] = report.profile;
  doc["axis"] = report.axis;
  return doc.dump() + "\n";
}

std::vector<DomainBox> profile_partition(const Instance& instance,
                                         const ProfileReport& report) {
  const auto& domain = instance.domain();
  if (report.profile == 0) return {domain};
  const std::size_t axis = report.axis;

  std::vector<double> endpoints;
  for (const auto& b : instance.boxes()) {
    const auto c = clip(b, domain);
    if (!c) continue;
    endpoints.push_back(c->lo(axis));
    endpoints.push_back(c->hi(axis));
  }
  std::sort(endpoints.begin(), endpoints.end());

  std::vector<double> cuts;
  double last = domain.lo(axis);
  const std::size_t stride = 2 * report.profile;
  for (std::size_t i = stride - 1; i < endpoints.size(); i += stride) {
    const double x = endpoints[i];
    if (x >= domain.hi(axis)) break;
    if (x <= last) continue;
    cuts.push_back(x);
    last = x;
  }
  cuts.push_back(domain.hi(axis));

  std::vector<DomainBox> pieces;
  pieces.reserve(cuts.size());
  std::vector<double> lo(domain.box().lo().begin(), domain.box().lo().end());
  std::vector<double> hi(domain.box().hi().begin(), domain.box().hi().end());
  double left = domain.lo(axis);
  for (double right : cuts) {
    lo[axis] = left;
    hi[axis] = right;
    pieces.emplace_back(lo, hi);
    left = right;
  }
  return pieces;
}

DepthDistribution dd_profile(const Instance& instance, const SdcOptions& options) {
  DepthDistribution total(instance.size());
  for_each_piece(instance, [&](const Instance& piece) {
    dd_accumulate(total, sdc_depth_distribution(piece, options), 0);
  });
  total.clamp_negligible();
  return total;
}

double klee_profile(const Instance& instance, const SdcOptions& options) {
  double total = 0.0;
  for_each_piece(instance, [&](const Instance& piece) {
    total += sdc_klee(piece, options);
  });
  return total;
}

std::size_t maxdepth_profile(const Instance& instance, const SdcOptions& options) {
  std::size_t best = 0;
  for_each_piece(instance, [&](const Instance& piece) {
    best = std::max(best, sdc_max_depth(piece, options));
  });
  return best;
}

}  // namespace ddist
