#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "ddist/adaptive.hpp"
#include "ddist/oracle.hpp"
#include "support.hpp"

using namespace ddist;
using ddist::test::box2;
using ddist::test::max_diff;

namespace {

const GeneratorKind kKinds[] = {GeneratorKind::uniform, GeneratorKind::slabs,
                                GeneratorKind::cubes, GeneratorKind::containing_chain};

BoxIntersectionGraph graph_from_edges(std::size_t n,
                                      std::vector<std::pair<std::size_t, std::size_t>> edges) {
  BoxIntersectionGraph g;
  g.adjacency.resize(n);
  for (auto [u, v] : edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  g.edges = edges.size();
  return g;
}

// Smallest k such that peeling vertices of degree <= k empties the graph.
std::size_t peeling_degeneracy(const BoxIntersectionGraph& g) {
  for (std::size_t k = 0;; ++k) {
    std::vector<std::size_t> deg(g.size());
    std::vector<bool> gone(g.size(), false);
    for (std::size_t v = 0; v < g.size(); ++v) deg[v] = g.adjacency[v].size();
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (gone[v] || deg[v] > k) continue;
        gone[v] = true;
        progress = true;
        for (std::size_t u : g.adjacency[v]) {
          if (!gone[u]) --deg[u];
        }
      }
    }
    if (std::all_of(gone.begin(), gone.end(), [](bool x) { return x; })) return k;
  }
}

}  // namespace

TEST_CASE("profile examples") {
  const Instance three(DomainBox({0, 0}, {3, 1}),
                       {box2(0, 1, 0, 1), box2(2, 3, 0, 1), box2(0, 3, 0, 1)});
  const auto r = profile(three);
  CHECK(r.per_dim == std::vector<std::size_t>{2, 3});
  CHECK(r.profile == 2);
  CHECK(r.axis == 0);
  CHECK(to_json(r) == "{\"per_dim\":[2,3],\"profile\":2,\"axis\":0}\n");

  std::vector<AxisBox> stacked;
  for (int k = 0; k < 6; ++k) stacked.push_back(box2(k / 6.0 + 0.01, (k + 0.5) / 6.0, 0, 1));
  CHECK(profile(Instance(DomainBox::unit(2), stacked)).per_dim[0] == 1);

  const Instance copies(DomainBox::unit(3), std::vector<AxisBox>(4, DomainBox::unit(3).box()));
  CHECK(profile(copies).per_dim == std::vector<std::size_t>{4, 4, 4});

  const auto none = profile(Instance(DomainBox::unit(2), {}));
  CHECK(none.profile == 0);
  CHECK(none.per_dim == std::vector<std::size_t>{0, 0});
}

TEST_CASE("touching boxes are stabbed together") {
  const Instance touch(DomainBox::unit(1), {AxisBox({0}, {0.5}), AxisBox({0.5}, {1})});
  CHECK(profile(touch).profile == 2);
}

TEST_CASE("profile partition tiles the domain and bounds each piece") {
  for (int t = 0; t < 120; ++t) {
    const std::size_t d = 1 + t % 4;
    const auto inst = t % 5 == 0 ? generate_with_profile(40, d, 1 + t % 7, t)
                                 : generate(kKinds[t % 4], 1 + t % 30, d, 400 + t);
    const auto report = profile(inst);
    const auto pieces = profile_partition(inst, report);
    REQUIRE(!pieces.empty());
    const std::size_t a = report.axis;
    CHECK(pieces.front().lo(a) == inst.domain().lo(a));
    CHECK(pieces.back().hi(a) == inst.domain().hi(a));
    double vol = 0.0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (k > 0) CHECK(pieces[k].lo(a) == pieces[k - 1].hi(a));
      vol += volume(pieces[k]);
      std::size_t seen = 0;
      for (const auto& b : inst.boxes()) {
        const auto c = clip(b, pieces[k]);
        seen += c && c->hi(a) > pieces[k].lo(a) && c->lo(a) < pieces[k].hi(a);
      }
      CHECK(seen <= 3 * report.profile);
    }
    CHECK(vol == doctest::Approx(volume(inst.domain())));
  }
}

TEST_CASE("profile solvers") {
  const auto gamma = DomainBox::unit(2);
  const Instance single(gamma, {box2(0.2, 0.7, -1, 0.5)});
  CHECK(max_diff(dd_profile(single), {0.75, 0.25}) <= 1e-15);

  std::vector<AxisBox> disjoint;
  for (int k = 0; k < 5; ++k) disjoint.push_back(box2(0.2 * k + 0.05, 0.2 * k + 0.15, 0.1, 0.6));
  const Instance apart(gamma, disjoint);
  CHECK(max_diff(dd_profile(apart), oracle_dd(apart)) <= 1e-12);
  CHECK(klee_profile(apart) == doctest::Approx(5 * 0.1 * 0.5));
  CHECK(maxdepth_profile(apart) == 1);

  const Instance copies(gamma, std::vector<AxisBox>(6, gamma.box()));
  CHECK(klee_profile(copies) == doctest::Approx(1.0));
  CHECK(maxdepth_profile(copies) == 6);
}

TEST_CASE("intersection graph") {
  const auto gamma = DomainBox::unit(2);
  std::vector<AxisBox> disjoint;
  for (int k = 0; k < 4; ++k) disjoint.push_back(box2(0.25 * k, 0.25 * k + 0.2, 0, 1));
  CHECK(intersection_graph(Instance(gamma, disjoint)).edges == 0);

  const auto complete = intersection_graph(Instance(gamma, std::vector<AxisBox>(5, gamma.box())));
  CHECK(complete.edges == 10);

  // Unit squares each overlapping only the next one.
  std::vector<AxisBox> chain;
  for (int k = 0; k < 5; ++k) chain.push_back(box2(0.6 * k, 0.6 * k + 1, 0, 1));
  const auto path = intersection_graph(Instance(DomainBox({0, 0}, {4, 1}), chain));
  CHECK(path.edges == 4);
  CHECK(write_edge_list(path) == "0 1\n1 2\n2 3\n3 4\n");

  // Boundary contact counts as intersection; contact outside the domain does not.
  const Instance touch(gamma, {box2(0, 0.5, 0, 1), box2(0.5, 1, 0, 1), box2(1.5, 2, 0, 1),
                               box2(2, 3, 0, 1)});
  const auto g = intersection_graph(touch);
  CHECK(g.edges == 1);
  CHECK(g.adjacency[0] == std::vector<std::size_t>{1});
}

TEST_CASE("intersection graph matches pairwise tests") {
  for (int t = 0; t < 60; ++t) {
    const auto inst = generate(kKinds[t % 4], 25, 1 + t % 4, 10 + t);
    const auto g = intersection_graph(inst);
    std::size_t edges = 0;
    for (std::size_t u = 0; u < inst.size(); ++u) {
      for (std::size_t v = u + 1; v < inst.size(); ++v) {
        const auto cu = clip(inst.boxes()[u], inst.domain());
        const auto cv = clip(inst.boxes()[v], inst.domain());
        const bool meet = cu && cv && intersect(*cu, *cv).has_value();
        edges += meet;
        CHECK(std::binary_search(g.adjacency[u].begin(), g.adjacency[u].end(), v) == meet);
        CHECK(std::binary_search(g.adjacency[v].begin(), g.adjacency[v].end(), u) == meet);
      }
      CHECK(std::is_sorted(g.adjacency[u].begin(), g.adjacency[u].end()));
    }
    CHECK(g.edges == edges);
  }
}

TEST_CASE("degeneracy ordering examples") {
  CHECK(degeneracy_ordering(graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}})).degeneracy == 1);
  CHECK(degeneracy_ordering(
            graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
            .degeneracy == 3);
  const auto empty = degeneracy_ordering(graph_from_edges(4, {}));
  CHECK(empty.degeneracy == 0);
  // Removal takes 0,1,2,3 in turn; the order is its reverse.
  CHECK(empty.order == std::vector<std::size_t>{3, 2, 1, 0});
}

TEST_CASE("degeneracy ordering invariant on random graphs") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 30;
    std::bernoulli_distribution edge(0.05 + 0.01 * (t % 40));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (edge(rng)) edges.emplace_back(u, v);
      }
    }
    const auto g = graph_from_edges(n, edges);
    const auto ord = degeneracy_ordering(g);
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[ord.order[i]] = i;
    auto sorted = ord.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == i);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t before = 0;
      for (std::size_t u : g.adjacency[v]) before += rank[u] < rank[v];
      CHECK(before <= ord.degeneracy);
    }
    CHECK(ord.degeneracy == peeling_degeneracy(g));
  }
}

TEST_CASE("degeneracy solvers") {
  const auto gamma = DomainBox::unit(2);
  const Instance apart(gamma, {box2(0.1, 0.3, 0.1, 0.3), box2(0.5, 0.9, 0.2, 0.7)});
  CHECK(max_diff(dd_degeneracy(apart), {1 - 0.24, 0.24, 0}) <= 1e-15);
  CHECK(klee_degeneracy(apart) == doctest::Approx(0.24));

  CHECK(max_diff(dd_degeneracy(Instance(gamma, {gamma.box(), gamma.box()})), {0, 0, 1}) == 0.0);

  const auto chain = generate(GeneratorKind::containing_chain, 9, 3, 3);
  const auto outer = clip(chain.boxes()[0], chain.domain());
  CHECK(klee_degeneracy(chain) == doctest::Approx(volume(*outer)));
  CHECK(maxdepth_degeneracy(chain) == 9);

  const auto random = generate(GeneratorKind::uniform, 20, 2, 77);
  CHECK(max_diff(dd_degeneracy(random), oracle_dd(random)) <= 1e-9);
}

TEST_CASE("adaptive solvers agree with sdc") {
  for (int t = 0; t < 160; ++t) {
    const std::size_t d = 1 + t % 4;
    const auto inst = generate(kKinds[(t / 4) % 4], 1 + t % 16, d, 8800 + t);
    CAPTURE(t);
    const auto base = sdc_depth_distribution(inst);
    CHECK(max_diff(dd_profile(inst), base) <= 1e-9);
    CHECK(max_diff(dd_degeneracy(inst), base) <= 1e-9);
    CHECK(std::abs(klee_profile(inst) - sdc_klee(inst)) <= 1e-9);
    CHECK(std::abs(klee_degeneracy(inst) - sdc_klee(inst)) <= 1e-9);
    CHECK(maxdepth_profile(inst) == sdc_max_depth(inst));
    CHECK(maxdepth_degeneracy(inst) == sdc_max_depth(inst));
  }
}

TEST_CASE("degenerate boxes are harmless") {
  const auto gamma = DomainBox::unit(2);
  const Instance inst(gamma, {box2(0.5, 0.5, 0, 1), box2(0.2, 0.8, 0.2, 0.8), box2(0, 1, 0.3, 0.3),
                              box2(1, 2, 0, 1)});
  const auto want = oracle_dd(inst);
  CHECK(max_diff(dd_degeneracy(inst), want) <= 1e-12);
  CHECK(max_diff(dd_profile(inst), want) <= 1e-12);
  CHECK(maxdepth_degeneracy(inst) == 1);
}
