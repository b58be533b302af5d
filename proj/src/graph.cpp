#include "rl/graph.hpp"

#include <string>

#include "rl/errors.hpp"

namespace rl {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list)
    : n_(n) {
  if (n < 0) throw invalid_input("negative vertex count");
  adj_.assign(n + 1, VertexSet(n));
  for (auto [i, j] : edge_list) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw invalid_input("edge endpoint out of range: " + std::to_string(i) +
                          " " + std::to_string(j));
    if (i == j) throw invalid_input("loop at vertex " + std::to_string(i));
    if (adj_[i].contains(j))
      throw invalid_input("duplicate edge " + std::to_string(i) + " " +
                          std::to_string(j));
    adj_[i].add(j);
    adj_[j].add(i);
    ++m_;
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int i = 1; i <= n_; ++i)
    for (int j : adj_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  VertexSet left = g.vertices() - removed;
  std::vector<VertexSet> out;
  while (!left.empty()) {
    int seed = left.min();
    VertexSet comp(n);
    VertexSet frontier(n);
    comp.add(seed);
    frontier.add(seed);
    while (!frontier.empty()) {
      VertexSet grow(n);
      for (int v : frontier) grow |= g.neighbors(v);
      grow &= left;
      grow -= comp;
      comp |= grow;
      frontier = grow;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;  // seeds taken in increasing order => sorted by minimum vertex
}

VertexSet boundary(const Graph& g, const VertexSet& x) {
  VertexSet out(g.order());
  for (int v : x) out |= g.neighbors(v);
  out -= x;
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.order() + 1, 0);
  out.new_to_old.assign(1, 0);
  for (int v : keep) {
    out.new_to_old.push_back(v);
    out.old_to_new[v] = int(out.new_to_old.size()) - 1;
  }
  std::vector<std::pair<int, int>> es;
  for (auto [i, j] : g.edges())
    if (keep.contains(i) && keep.contains(j))
      es.emplace_back(out.old_to_new[i], out.old_to_new[j]);
  out.graph = Graph(keep.count(), es);
  return out;
}

bool is_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t k = 0; k < p.size(); ++k) {
    int v = p[k];
    if (v < 1 || v > g.order() || seen.contains(v)) return false;
    seen.add(v);
    if (k > 0 && !g.adjacent(p[k - 1], v)) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, const Path& p) {
  if (!is_path(g, p)) return false;
  for (std::size_t a = 0; a + 2 <= p.size(); ++a)
    for (std::size_t b = a + 2; b < p.size(); ++b)
      if (g.adjacent(p[a], p[b])) return false;
  return true;
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 0) return false;
  if (!is_connected(g)) return false;
  if (g.edge_count() != g.order() - 1) return false;  // rules out cycles
  for (int v = 1; v <= g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return components(g, VertexSet(g.order())).size() == 1;
}

}  // namespace rl
