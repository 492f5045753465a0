#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ddist/adaptive.hpp"

namespace ddist {

namespace {

bool boxes_meet(const AxisBox& a, const AxisBox& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::max(a.lo(i), b.lo(i)) > std::min(a.hi(i), b.hi(i))) return false;
  }
  return true;
}

// The step shared by the degeneracy solvers: for each box of the ordering
// whose clip has positive volume, visit(v, domain = clip(v), earlier
// neighbours of v).
template <class Visit>
void for_each_step(const Instance& instance, Visit&& visit) {
  const auto graph = intersection_graph(instance);
  const auto ordering = degeneracy_ordering(graph);
  std::vector<std::size_t> rank(graph.size());
  for (std::size_t i = 0; i < ordering.order.size(); ++i) rank[ordering.order[i]] = i;

  for (std::size_t i = 0; i < ordering.order.size(); ++i) {
    const std::size_t v = ordering.order[i];
    const auto c = clip(instance.boxes()[v], instance.domain());
    if (!c || !(volume(*c) > 0.0)) continue;
    std::vector<AxisBox> earlier;
    for (std::size_t u : graph.adjacency[v]) {
      if (rank[u] < i) earlier.push_back(instance.boxes()[u]);
    }
    visit(v, DomainBox(*c), std::move(earlier));
  }
}

}  // namespace

BoxIntersectionGraph intersection_graph(const Instance& instance) {
  const std::size_t n = instance.size();
  BoxIntersectionGraph g;
  g.adjacency.resize(n);

  std::vector<AxisBox> clipped;
  std::vector<std::size_t> live;
  clipped.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto c = clip(instance.boxes()[v], instance.domain());
    if (c) live.push_back(v);
    clipped.push_back(c ? std::move(*c) : instance.boxes()[v]);
  }
  // Sweep along axis 0 so only pairs overlapping there are tested in full.
  std::sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
    return clipped[a].lo(0) < clipped[b].lo(0) ||
           (clipped[a].lo(0) == clipped[b].lo(0) && a < b);
  });
  for (std::size_t x = 0; x < live.size(); ++x) {
    const std::size_t u = live[x];
    for (std::size_t y = x + 1; y < live.size(); ++y) {
      const std::size_t v = live[y];
      if (clipped[v].lo(0) > clipped[u].hi(0)) break;
      if (boxes_meet(clipped[u], clipped[v])) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
        ++g.edges;
      }
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::string write_edge_list(const BoxIntersectionGraph& graph) {
  std::ostringstream out;
  for (std::size_t u = 0; u < graph.size(); ++u) {
    for (std::size_t v : graph.adjacency[u]) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

DegeneracyOrdering degeneracy_ordering(const BoxIntersectionGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = graph.adjacency[v].size();
    queue.emplace(degree[v], v);
  }
  std::vector<bool> removed(n, false);
  DegeneracyOrdering result;
  result.order.reserve(n);
  while (!queue.empty()) {
    const auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.degeneracy = std::max(result.degeneracy, deg);
    result.order.push_back(v);
    for (std::size_t u : graph.adjacency[v]) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      queue.emplace(--degree[u], u);
    }
  }
  std::reverse(result.order.begin(), result.order.end());
  return result;
}

DepthDistribution dd_degeneracy(const Instance& instance, const SdcOptions& options) {
  DepthDistribution global(instance.size());
  global[0] = volume(instance.domain());
  for_each_step(instance, [&](std::size_t v, const DomainBox& domain,
                              std::vector<AxisBox> earlier) {
    earlier.insert(earlier.begin(), instance.boxes()[v]);
    const auto local = sdc_depth_distribution(Instance(domain, std::move(earlier)), options);
    // A point of depth j in the local problem had depth j-1 before v.
    for (std::size_t j = 1; j < local.size(); ++j) {
      global[j - 1] -= local[j];
      global[j] += local[j];
    }
  });
  global.clamp_negligible();
  return global;
}

double klee_degeneracy(const Instance& instance, const SdcOptions& options) {
  double total = 0.0;
  for_each_step(instance, [&](std::size_t, const DomainBox& domain,
                              std::vector<AxisBox> earlier) {
    const double covered_before = sdc_klee(Instance(domain, std::move(earlier)), options);
    total += volume(domain) - covered_before;
  });
  return total;
}

std::size_t maxdepth_degeneracy(const Instance& instance, const SdcOptions& options) {
  std::size_t best = 0;
  for_each_step(instance, [&](std::size_t, const DomainBox& domain,
                              std::vector<AxisBox> earlier) {
    best = std::max(best, 1 + sdc_max_depth(Instance(domain, std::move(earlier)), options));
  });
  return best;
}

}  // namespace ddist
