#include <doctest.h>

#include <set>

#include "rl/catalog.hpp"
#include "rl/errors.hpp"
#include "rl/families.hpp"
#include "rl/forcing.hpp"
#include "rl/structure.hpp"
#include "support/oracles.hpp"

using namespace rl;

TEST_CASE("treewidth of the standard families") {
  CHECK(treewidth_exact(build({Family::path, {7}})).width == 1);
  CHECK(treewidth_exact(build({Family::whirl, {}}), 15).width == 1);
  for (int n = 2; n <= 7; ++n)
    CHECK(treewidth_exact(build({Family::complete, {n}})).width == n - 1);
  for (int n = 3; n <= 8; ++n)
    CHECK(treewidth_exact(build({Family::cycle, {n}})).width == 2);
  CHECK(treewidth_exact(Graph(1, {})).width == 0);
  CHECK_THROWS_AS(treewidth_exact(build({Family::whirl, {}})), budget_exceeded);
}

TEST_CASE("witness decompositions satisfy the axioms") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 1 + int(rng() % 8);
    Graph g = oracle::random_graph(n, 0.4, rng());
    auto r = treewidth_exact(g);
    CHECK(valid_decomposition(g, r.decomposition));
    int width = -1;
    for (int i = 1; i <= r.decomposition.tree.order(); ++i)
      width = std::max(width, r.decomposition.bags[i].count() - 1);
    CHECK(width == r.width);
  }
}

TEST_CASE("treewidth bound from spanning rigid linkages") {
  Graph w = build({Family::whirl, {}});
  Linkage p4 = Linkage::from_paths(
      w, {{6, 5, 2, 1, 4, 13, 14}, {10, 9, 3, 11, 12}, {8, 7}, {15}});
  CHECK(check_tw_bound(w, p4, 15));

  Graph p5 = build({Family::path, {5}});
  CHECK(check_tw_bound(p5, Linkage::from_paths(p5, {{1, 2, 3, 4, 5}})));

  Graph k4 = build({Family::complete, {4}});
  Linkage bad = Linkage::from_paths(k4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(check_tw_bound(k4, bad), precondition_error);
}

TEST_CASE("two parallel paths via the forcing characterization") {
  for (int n = 3; n <= 8; ++n)
    CHECK(is_two_parallel_paths(build({Family::cycle, {n}})));
  CHECK_FALSE(is_two_parallel_paths(build({Family::mary, {}})));
  CHECK_FALSE(is_two_parallel_paths(build({Family::seth, {}})));
  CHECK_THROWS_AS(is_two_parallel_paths(build({Family::path, {6}})),
                  precondition_error);
}

TEST_CASE("chord and rung classification") {
  Graph k3 = build({Family::complete, {3}});
  Linkage p = Linkage::from_paths(k3, {{1, 2, 3}});
  auto chords = linkage_chords(k3, p);
  REQUIRE(chords.size() == 1);
  CHECK(chords[0] == std::pair<int, int>{1, 3});
  CHECK(linkage_rungs(k3, p).empty());

  Graph xx = build({Family::xx, {}});
  Linkage rails = Linkage::from_paths(xx, {{1, 2, 3}, {4, 5, 6}});
  CHECK(linkage_chords(xx, rails).empty());
  CHECK(linkage_rungs(xx, rails).size() == 4);
}

TEST_CASE("rigid linkages never carry chords") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      SearchBudget budget;
      for_each_linkage(g, budget, [&](const Linkage& p) {
        if (p.order() <= 2 && is_rigid_any_labeling(g, p))
          CHECK(linkage_chords(g, p).empty());
        return true;
      });
    }
  }
}

TEST_CASE("crossing rungs form the obstruction, nested rungs do not") {
  Graph x = build({Family::x, {}});
  Linkage p = Linkage::from_paths(x, {{1, 2}, {3, 4}});
  CHECK(has_x_minor(x, p, VertexSet::of(4, {1, 3}), VertexSet::of(4, {2, 4})));

  Graph ladder(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}});
  Linkage rails = Linkage::from_paths(ladder, {{1, 2, 3}, {4, 5, 6}});
  CHECK_FALSE(has_x_minor(ladder, rails, VertexSet::of(6, {1, 4}),
                          VertexSet::of(6, {3, 6})));

  Graph k3 = build({Family::complete, {3}});
  Linkage chorded = Linkage::from_paths(k3, {{1, 2, 3}});
  CHECK_THROWS_AS(has_x_minor(k3, chorded, VertexSet::of(3, {1}),
                              VertexSet::of(3, {3})),
                  precondition_error);
}

TEST_CASE("order-2 spanning chordless linkages: rigid iff no crossing minor") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      SearchBudget budget;
      for_each_linkage(g, budget, [&](const Linkage& p) {
        if (p.order() != 2 || !p.spanning(g)) return true;
        if (!linkage_chords(g, p).empty()) {
          CHECK_FALSE(is_rigid_any_labeling(g, p).has_value());
          return true;
        }
        // Per-labeling equivalence.
        const auto& paths = p.paths();
        for (int flip = 0; flip < 2; ++flip) {
          VertexSet alpha(n), beta(n);
          auto add = [&](const Path& q, bool front_alpha) {
            if (q.size() == 1) {
              alpha.add(q.front());
              beta.add(q.front());
            } else {
              alpha.add(front_alpha ? q.front() : q.back());
              beta.add(front_alpha ? q.back() : q.front());
            }
          };
          add(paths[0], true);
          add(paths[1], flip == 0);
          bool rigid = is_rigid(g, p, alpha, beta);
          CHECK(rigid == !has_x_minor(g, p, alpha, beta));
        }
        return true;
      });
    }
  }
}

TEST_CASE("two-parallel-paths equivalence on non-path graphs, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (is_path_graph(g)) continue;
      bool two_pp = is_two_parallel_paths(g);

      // Search for a spanning rigid linkage of order 2 via chain sets.
      bool found = false;
      for (int mask = 1; mask < (1 << n) && !found; ++mask) {
        if (__builtin_popcount(unsigned(mask)) != 2) continue;
        VertexSet b0(n);
        for (int v = 1; v <= n; ++v)
          if ((mask >> (v - 1)) & 1) b0.add(v);
        for (const Linkage& c : rl_chain_sets(g, b0))
          if (c.order() == 2 && c.spanning(g)) found = true;
      }
      CHECK(two_pp == found);
    }
  }
}

TEST_CASE("rigid order-2 linkages are chordless with no crossing minor, n = 7") {
  // Candidates come from chain sets of two-vertex starts and are then
  // certified directly, so the assertion only ever sees certified-rigid
  // linkages.
  long certified = 0;
  for (const Graph& g : connected_graphs(7)) {
    std::set<Linkage> seen;
    for (int a = 1; a <= 7; ++a)
      for (int b = a; b <= 7; ++b) {
        VertexSet b0 = VertexSet::of(7, {a, b});
        for (const Linkage& cs : rl_chain_sets(g, b0)) {
          if (cs.order() != 2 || !seen.insert(cs).second) continue;
          auto lab = is_rigid_any_labeling(g, cs);
          if (!lab) continue;
          ++certified;
          CHECK(linkage_chords(g, cs).empty());
          CHECK_FALSE(has_x_minor(g, cs, lab->alpha, lab->beta));
        }
      }
  }
  CHECK(certified > 1000);
}
