#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ddist/geom.hpp"
#include "ddist/measures.hpp"
#include "ddist/sdc.hpp"

namespace ddist {

struct ProfileReport {
  std::vector<std::size_t> per_dim;  // p_i: most boxes cut by a hyperplane orthogonal to axis i
  std::size_t profile = 0;           // min over axes
  std::size_t axis = 0;              // smallest axis attaining the minimum

  bool operator==(const ProfileReport&) const = default;
};

/// Sweeps each axis over the clipped boxes, starts before ends at ties.
/// An instance with no box meeting the domain has profile 0.
ProfileReport profile(const Instance& instance);

std::string to_json(const ProfileReport& report);

/// Sub-domains of the profile sweep: the domain cut orthogonally to the
/// profile axis after every 2p clipped endpoints, at endpoint coordinates.
/// The pieces tile the domain in increasing order.
std::vector<DomainBox> profile_partition(const Instance& instance,
                                         const ProfileReport& report);

DepthDistribution dd_profile(const Instance& instance,
                             const SdcOptions& options = {});
double klee_profile(const Instance& instance, const SdcOptions& options = {});
std::size_t maxdepth_profile(const Instance& instance,
                             const SdcOptions& options = {});

/// Undirected graph on box indices; u ~ v iff the two boxes, clipped to the
/// domain, share at least one point.
struct BoxIntersectionGraph {
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists
  std::size_t edges = 0;

  std::size_t size() const { return adjacency.size(); }
};

BoxIntersectionGraph intersection_graph(const Instance& instance);

/// "u v" per line with u < v, sorted.
std::string write_edge_list(const BoxIntersectionGraph& graph);

struct DegeneracyOrdering {
  std::vector<std::size_t> order;
  std::size_t degeneracy = 0;
};

/// Repeatedly removes a vertex of minimum remaining degree (smallest index
/// on ties). The order is the reverse removal sequence, so each vertex has
/// at most `degeneracy` neighbours before it.
DegeneracyOrdering degeneracy_ordering(const BoxIntersectionGraph& graph);

DepthDistribution dd_degeneracy(const Instance& instance,
                                const SdcOptions& options = {});
double klee_degeneracy(const Instance& instance, const SdcOptions& options = {});
std::size_t maxdepth_degeneracy(const Instance& instance,
                                const SdcOptions& options = {});

}  // namespace ddist
