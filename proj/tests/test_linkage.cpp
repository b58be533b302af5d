#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "rl/catalog.hpp"
#include "rl/errors.hpp"
#include "rl/families.hpp"
#include "rl/linkage.hpp"
#include "support/oracles.hpp"

using namespace rl;

namespace {

Linkage lk(const Graph& g, std::vector<Path> paths) {
  return Linkage::from_paths(g, std::move(paths));
}

// Independent backtracking counter for (alpha,beta)-linkages: recursion over
// an adjacency map, all endpoint matchings, no shared code with the library
// enumerator.
struct CountOracle {
  std::map<int, std::vector<int>> adj;
  std::set<int> terminals;
  std::set<int> used;
  int count = 0;

  void count_linkages(const Graph& g, std::vector<int> a, std::vector<int> b) {
    for (auto [u, v] : g.edges()) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::sort(b.begin(), b.end());
    do {
      // A vertex in two different pairs admits no linkage.
      std::map<int, int> pairs_holding;
      for (std::size_t i = 0; i < a.size(); ++i) {
        pairs_holding[a[i]]++;
        if (b[i] != a[i]) pairs_holding[b[i]]++;
      }
      bool ok = true;
      for (auto [v, c] : pairs_holding)
        if (c > 1) ok = false;
      if (ok) {
        terminals.clear();
        for (std::size_t i = 0; i < a.size(); ++i) {
          terminals.insert(a[i]);
          terminals.insert(b[i]);
        }
        used.clear();
        rec(a, b, 0);
      }
    } while (std::next_permutation(b.begin(), b.end()));
  }

  void rec(const std::vector<int>& a, const std::vector<int>& b,
           std::size_t i) {
    if (i == a.size()) {
      ++count;
      return;
    }
    if (a[i] == b[i]) {
      if (used.count(a[i])) return;
      used.insert(a[i]);
      rec(a, b, i + 1);
      used.erase(a[i]);
      return;
    }
    std::vector<int> path{a[i]};
    used.insert(a[i]);
    walk(a, b, i, path);
    used.erase(a[i]);
  }

  void walk(const std::vector<int>& a, const std::vector<int>& b,
            std::size_t i, std::vector<int>& path) {
    for (int w : adj[path.back()]) {
      if (used.count(w)) continue;
      if (w == b[i]) {
        used.insert(w);
        path.push_back(w);
        rec(a, b, i + 1);
        path.pop_back();
        used.erase(w);
      } else if (!terminals.count(w)) {
        used.insert(w);
        path.push_back(w);
        walk(a, b, i, path);
        path.pop_back();
        used.erase(w);
      }
    }
  }
};

}  // namespace

TEST_CASE("canonical form orients and sorts") {
  Graph p5 = build({Family::path, {5}});
  Linkage a = lk(p5, {{3, 2, 1}, {5, 4}});
  Linkage b = lk(p5, {{4, 5}, {1, 2, 3}});
  CHECK(a == b);
  CHECK(a.paths()[0] == Path{1, 2, 3});
  CHECK(a.paths()[1] == Path{4, 5});
  CHECK(a.order() == 2);
  CHECK(a.vertex_count() == 5);
  CHECK(pattern_of(a) == Pattern{{1, 3}, {4, 5}});
  CHECK_THROWS_AS(lk(p5, {{1, 2}, {2, 3}}), precondition_error);
  CHECK_THROWS_AS(lk(p5, {{1, 3}}), precondition_error);
}

TEST_CASE("enumerate_linkages finds both matchings in K4") {
  Graph k4 = build({Family::complete, {4}});
  auto found = enumerate_linkages(k4, VertexSet::of(4, {1, 3}),
                                  VertexSet::of(4, {2, 4}));
  Linkage p = lk(k4, {{1, 2}, {3, 4}});
  Linkage q = lk(k4, {{1, 4}, {3, 2}});
  CHECK(found.size() >= 2);
  CHECK(std::count(found.begin(), found.end(), p) == 1);
  CHECK(std::count(found.begin(), found.end(), q) == 1);
}

TEST_CASE("unique path in a tree") {
  Graph p3 = build({Family::path, {3}});
  auto found =
      enumerate_linkages(p3, VertexSet::of(3, {1}), VertexSet::of(3, {3}));
  REQUIRE(found.size() == 1);
  CHECK(found[0] == lk(p3, {{1, 2, 3}}));
}

TEST_CASE("three-ring graph: enumeration matches the independent counter") {
  Graph g = build({Family::mary, {}});
  VertexSet alpha = VertexSet::of(12, {1, 2, 3, 4});
  VertexSet beta = VertexSet::of(12, {5, 6, 7, 8});
  auto found = enumerate_linkages(g, alpha, beta);

  Linkage l1 = lk(g, {{1, 6}, {2, 7}, {3, 8}, {4, 5}});
  Linkage l2 = lk(g, {{1, 5}, {2, 6}, {3, 7}, {4, 8}});
  CHECK(std::count(found.begin(), found.end(), l1) == 1);
  CHECK(std::count(found.begin(), found.end(), l2) == 1);

  CountOracle oracle;
  oracle.count_linkages(g, {1, 2, 3, 4}, {5, 6, 7, 8});
  CHECK(int(found.size()) == oracle.count);

  std::set<Linkage> dedup(found.begin(), found.end());
  CHECK(dedup.size() == found.size());
}

TEST_CASE("rigidity in K4 and in trees") {
  Graph k4 = build({Family::complete, {4}});
  Linkage p = lk(k4, {{1, 2}, {3, 4}});
  CHECK_FALSE(is_rigid(k4, p, VertexSet::of(4, {1, 3}), VertexSet::of(4, {2, 4})));
  CHECK_FALSE(is_rigid_any_labeling(k4, p).has_value());
  CHECK(is_unique_linkage(k4, p));
  CHECK(is_vital(k4, p));

  Graph w = build({Family::whirl, {}});
  Linkage tree_linkage = lk(w, {{6, 5, 2, 1, 4, 13, 14}, {10, 9, 3, 11, 12}});
  auto lab = is_rigid_any_labeling(w, tree_linkage);
  REQUIRE(lab.has_value());
  CHECK(is_rigid(w, tree_linkage, lab->alpha, lab->beta));
}

TEST_CASE("two parallel rails with nested rungs are rigid left-to-right") {
  // 1-2-3 over 4-5-6 with vertical rungs only.
  Graph g(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}});
  Linkage p = lk(g, {{1, 2, 3}, {4, 5, 6}});
  CHECK(is_rigid(g, p, VertexSet::of(6, {1, 4}), VertexSet::of(6, {3, 6})));
}

TEST_CASE("uniqueness distinguishes pattern from labeling") {
  Graph c4 = build({Family::cycle, {4}});
  CHECK_FALSE(is_unique_linkage(c4, lk(c4, {{1, 2}})));
  CHECK(is_unique_linkage(c4, lk(c4, {{1}})));
  Graph p4 = build({Family::path, {4}});
  CHECK(is_vital(p4, lk(p4, {{1, 2, 3, 4}})));
  CHECK_FALSE(is_vital(p4, lk(p4, {{1, 2, 3}})));
}

TEST_CASE("labels_linkage accepts only consistent labelings") {
  Graph p4 = build({Family::path, {4}});
  Linkage p = lk(p4, {{1, 2}, {3, 4}});
  CHECK(labels_linkage(p, VertexSet::of(4, {1, 3}), VertexSet::of(4, {2, 4})));
  CHECK(labels_linkage(p, VertexSet::of(4, {1, 4}), VertexSet::of(4, {2, 3})));
  CHECK_FALSE(labels_linkage(p, VertexSet::of(4, {1, 2}), VertexSet::of(4, {3, 4})));
  Linkage single = lk(p4, {{2}});
  CHECK(labels_linkage(single, VertexSet::of(4, {2}), VertexSet::of(4, {2})));
  CHECK_FALSE(labels_linkage(single, VertexSet::of(4, {2}), VertexSet::of(4, {3})));
}

TEST_CASE("rigid linkage number of paths and the whirl tree") {
  Graph p6 = build({Family::path, {6}});
  auto r = rigid_linkage_number(p6, 1);
  CHECK(r.value == 6);
  CHECK(r.exists);

  Graph w = build({Family::whirl, {}});
  CHECK(rigid_linkage_number(w, 1).value == 7);
  CHECK(rigid_linkage_number(w, 2).value == 12);
}

TEST_CASE("rl number equals the all-linkage oracle on small graphs") {
  // Oracle route: enumerate every linkage, keep the rigid ones, maximize.
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      std::map<int, int> best_by_order;
      SearchBudget budget;
      for_each_linkage(g, budget, [&](const Linkage& p) {
        if (is_rigid_any_labeling(g, p)) {
          auto& best = best_by_order[p.order()];
          best = std::max(best, p.vertex_count());
        }
        return true;
      });
      for (int t = 1; t <= n; ++t) {
        auto r = rigid_linkage_number(g, t);
        int want = best_by_order.count(t) ? best_by_order[t] : 0;
        CHECK(r.value == want);
        CHECK(r.exists == (want > 0));
        if (r.exists) {
          CHECK(r.witness.vertex_count() == r.value);
          CHECK(is_rigid(g, r.witness, r.alpha, r.beta));
        }
      }
    }
  }
}

TEST_CASE("shortest linkage sizes") {
  for (int n = 4; n <= 9; ++n) {
    Graph c = build({Family::cycle, {n}});
    int half = (n + 1) / 2;
    auto s = shortest_linkage_size(c, VertexSet::of(n, {1}),
                                   VertexSet::of(n, {half}));
    REQUIRE(s.has_value());
    CHECK(*s == half);
  }
  Graph g = build({Family::seth, {}});
  auto s = shortest_linkage_size(g, VertexSet::of(10, {1, 6}),
                                 VertexSet::of(10, {5, 9}));
  REQUIRE(s.has_value());
  CHECK(*s == 9);

  // alpha = beta: all one-vertex paths.
  Graph k4 = build({Family::complete, {4}});
  auto t = shortest_linkage_size(k4, VertexSet::of(4, {1, 2}),
                                 VertexSet::of(4, {1, 2}));
  REQUIRE(t.has_value());
  CHECK(*t == 2);

  // No linkage at all: two endpoints in different components.
  Graph two(4, {{1, 2}, {3, 4}});
  CHECK_FALSE(shortest_linkage_size(two, VertexSet::of(4, {1}),
                                    VertexSet::of(4, {3}))
                  .has_value());
}

TEST_CASE("rigid shortest certification") {
  Graph g = build({Family::seth, {}});
  Linkage p = Linkage::from_paths(g, {{1, 2, 3, 4, 5}, {6, 7, 8, 9}});
  CHECK(is_rigid_shortest(g, p, VertexSet::of(10, {1, 6}),
                          VertexSet::of(10, {5, 9})));

  for (int n = 4; n <= 9; ++n) {
    Graph c = build({Family::cycle, {n}});
    int half = (n + 1) / 2;
    Path arc;
    for (int v = 1; v <= half; ++v) arc.push_back(v);
    Linkage one = Linkage::from_paths(c, {arc});
    CHECK(is_rigid_shortest(c, one, VertexSet::of(n, {1}),
                            VertexSet::of(n, {half})));
  }

  // A rigid linkage is a rigid shortest linkage.
  Graph w = build({Family::whirl, {}});
  Linkage tp = Linkage::from_paths(w, {{6, 5, 2, 1, 4, 13, 14}});
  auto lab = is_rigid_any_labeling(w, tp);
  REQUIRE(lab.has_value());
  CHECK(is_rigid_shortest(w, tp, lab->alpha, lab->beta));
}

TEST_CASE("rigid shortest linkage numbers: small closed forms") {
  for (int n = 2; n <= 5; ++n) {
    Graph k = build({Family::complete, {n}});
    for (int t = 1; t <= n - 1; ++t)
      CHECK(rigid_shortest_linkage_number(k, t).value == t + 1);
  }
  Graph g = build({Family::seth, {}});
  CHECK(rigid_shortest_linkage_number(g, 1).value == 4);
}

TEST_CASE("rigid implies unique, sub-linkage and supergraph properties") {
  std::mt19937_64 rng(11);
  int tested = 0;
  for (int iter = 0; iter < 60 && tested < 12; ++iter) {
    int n = 5 + int(rng() % 3);
    Graph g = oracle::random_graph(n, 0.35, rng());
    SearchBudget budget;
    std::vector<Linkage> all;
    for_each_linkage(g, budget, [&](const Linkage& p) {
      all.push_back(p);
      return true;
    });
    for (const auto& p : all) {
      auto lab = is_rigid_any_labeling(g, p);
      if (!lab) continue;
      ++tested;
      CHECK(is_unique_linkage(g, p));

      // Truncation: drop the last vertex of the longest path; the truncated
      // linkage is rigid in the graph minus the dropped vertices.
      const Path* longest = nullptr;
      for (const auto& q : p.paths())
        if (!longest || q.size() > longest->size()) longest = &q;
      if (longest->size() >= 2) {
        bool front_is_alpha = lab->alpha.contains(longest->front()) &&
                              !lab->beta.contains(longest->front());
        Path shorter = *longest;
        int dropped;
        if (front_is_alpha) {
          dropped = shorter.back();
          shorter.pop_back();
        } else {
          dropped = shorter.front();
          shorter.erase(shorter.begin());
        }
        std::vector<Path> rest;
        for (const auto& q : p.paths())
          if (&q != longest) rest.push_back(q);
        rest.push_back(shorter);

        VertexSet keep = g.vertices();
        keep.remove(dropped);
        auto sub = induced_subgraph(g, keep);
        std::vector<Path> relabeled;
        for (auto q : rest) {
          for (int& v : q) v = sub.old_to_new[v];
          relabeled.push_back(q);
        }
        Linkage pp = Linkage::from_paths(sub.graph, relabeled);
        VertexSet a2(sub.graph.order()), b2(sub.graph.order());
        for (int v : lab->alpha)
          if (v != dropped) a2.add(sub.old_to_new[v]);
        for (int v : lab->beta)
          if (v != dropped) b2.add(sub.old_to_new[v]);
        int newend = sub.old_to_new[front_is_alpha ? shorter.back()
                                                   : shorter.front()];
        if (front_is_alpha)
          b2.add(newend);
        else
          a2.add(newend);
        CHECK(is_rigid(sub.graph, pp, a2, b2));
      }

      // Removing an edge off the linkage keeps it rigid.
      std::vector<std::pair<int, int>> spare;
      auto pe = p.edges();
      for (auto e : g.edges())
        if (!std::binary_search(pe.begin(), pe.end(), e)) spare.push_back(e);
      if (!spare.empty()) {
        auto drop = spare[rng() % spare.size()];
        std::vector<std::pair<int, int>> edges;
        for (auto e : g.edges())
          if (e != drop) edges.push_back(e);
        Graph h(n, edges);
        CHECK(is_rigid(h, p, lab->alpha, lab->beta));
      }
      if (tested >= 12) break;
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("colex subset order") {
  auto subs = subsets_colex(4, 2);
  std::vector<std::vector<int>> want = {{1, 2}, {1, 3}, {2, 3},
                                        {1, 4}, {2, 4}, {3, 4}};
  CHECK(subs == want);
  CHECK(subsets_colex(3, 0) == std::vector<std::vector<int>>{{}});
  CHECK(subsets_colex(3, 3).size() == 1);
}

TEST_CASE("budget exhaustion raises") {
  Graph k7 = build({Family::complete, {7}});
  SearchBudget tiny(50);
  CHECK_THROWS_AS(
      enumerate_linkages(k7, VertexSet::of(7, {1, 2}), VertexSet::of(7, {6, 7}),
                         std::nullopt, std::nullopt, &tiny),
      budget_exceeded);
}
