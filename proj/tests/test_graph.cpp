#include <doctest.h>

#include <set>

#include "rl/errors.hpp"
#include "rl/families.hpp"
#include "rl/graph.hpp"
#include "support/oracles.hpp"

using namespace rl;

namespace {

std::set<int> to_set(const VertexSet& s) {
  auto v = s.to_vector();
  return std::set<int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  s.add(1);
  s.add(64);
  s.add(65);
  CHECK(s.count() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min() == 1);
  CHECK(s.to_vector() == std::vector<int>{1, 64, 65});
  s.remove(64);
  CHECK(s.to_vector() == std::vector<int>{1, 65});
  CHECK(VertexSet::of(5, {2, 4}).subset_of(VertexSet::full(5)));
  CHECK_THROWS_AS(s.add(71), invalid_input);
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), invalid_input);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), invalid_input);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), invalid_input);
  Graph g(3, {{1, 2}, {2, 3}});
  CHECK(g.adjacent(2, 1));
  CHECK(g.degree(2) == 2);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("components of the paw minus {2,3}") {
  Graph paw = build({Family::paw, {}});
  auto comps = components(paw, VertexSet::of(4, {2, 3}));
  REQUIRE(comps.size() == 2);
  CHECK(to_set(comps[0]) == std::set<int>{1});
  CHECK(to_set(comps[1]) == std::set<int>{4});
}

TEST_CASE("removing everything leaves no components") {
  Graph paw = build({Family::paw, {}});
  CHECK(components(paw, VertexSet::full(4)).empty());
}

TEST_CASE("components agree with flood fill on the three-ring graph") {
  Graph g = build({Family::mary, {}});
  VertexSet removed = VertexSet::of(12, {1, 2, 3, 4, 6});
  auto got = components(g, removed);
  auto want = oracle::components(12, g.edges(), {1, 2, 3, 4, 6});
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(got[i].to_vector() == want[i]);
}

TEST_CASE("boundary examples") {
  Graph paw = build({Family::paw, {}});
  CHECK(to_set(boundary(paw, VertexSet::of(4, {1}))) == std::set<int>{2});
  CHECK(boundary(paw, VertexSet(4)).empty());

  Graph g = build({Family::mary, {}});
  CHECK(to_set(boundary(g, VertexSet::of(12, {9, 10, 11, 12}))) ==
        std::set<int>{5, 6, 7, 8});
}

TEST_CASE("induced subgraph of K4 on three vertices is K3") {
  Graph k4 = build({Family::complete, {4}});
  auto sub = induced_subgraph(k4, VertexSet::of(4, {1, 2, 3}));
  CHECK(sub.graph == build({Family::complete, {3}}));
  CHECK(sub.old_to_new[4] == 0);
}

TEST_CASE("whirl tree minus its center splits into 3 components") {
  Graph w = build({Family::whirl, {}});
  VertexSet keep = VertexSet::full(15);
  keep.remove(1);
  auto sub = induced_subgraph(w, keep);
  CHECK(components(sub.graph, VertexSet(14)).size() == 3);
}

TEST_CASE("induced path recognition") {
  Graph c4 = build({Family::cycle, {4}});
  CHECK(is_induced_path(c4, {1, 2, 3}));
  Graph k3 = build({Family::complete, {3}});
  CHECK_FALSE(is_induced_path(k3, {1, 2, 3}));

  Graph g = build({Family::mary, {}});
  Path p = {9, 5, 1, 6, 10};
  CHECK(is_induced_path(g, p) == oracle::induced_path(g.edges(), p));
  CHECK(is_induced_path(g, p));
}

TEST_CASE("structure primitives agree with edge-list oracles on random graphs") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 1000; ++iter) {
    int n = 1 + int(rng() % 12);
    Graph g = oracle::random_graph(n, 0.4, rng());

    std::set<int> removed;
    for (int v = 1; v <= n; ++v)
      if (rng() % 3 == 0) removed.insert(v);
    VertexSet rem(n);
    for (int v : removed) rem.add(v);

    auto got = components(g, rem);
    auto want = oracle::components(n, g.edges(), removed);
    REQUIRE(got.size() == want.size());
    VertexSet unioned(n);
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].to_vector() == want[i]);
      CHECK_FALSE(got[i].empty());
      CHECK_FALSE(got[i].intersects(unioned));
      unioned |= got[i];
    }
    CHECK(unioned == g.vertices() - rem);

    std::set<int> xs;
    for (int v = 1; v <= n; ++v)
      if (rng() % 2) xs.insert(v);
    VertexSet x(n);
    for (int v : xs) x.add(v);
    auto bd = boundary(g, x);
    CHECK(to_set(bd) == oracle::boundary(g.edges(), xs));
    CHECK_FALSE(bd.intersects(x));

    auto sub = induced_subgraph(g, x);
    for (auto [a, b] : sub.graph.edges())
      CHECK(g.adjacent(sub.new_to_old[a], sub.new_to_old[b]));
    int expect_edges = 0;
    for (auto [a, b] : g.edges())
      if (xs.count(a) && xs.count(b)) ++expect_edges;
    CHECK(sub.graph.edge_count() == expect_edges);
  }
}

TEST_CASE("path graph recognition") {
  CHECK(is_path_graph(build({Family::path, {1}})));
  CHECK(is_path_graph(build({Family::path, {6}})));
  CHECK_FALSE(is_path_graph(build({Family::cycle, {4}})));
  CHECK_FALSE(is_path_graph(build({Family::paw, {}})));
  CHECK_FALSE(is_path_graph(Graph(2, {})));
}
