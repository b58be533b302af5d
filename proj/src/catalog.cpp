#include "rl/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "rl/errors.hpp"

namespace rl {

namespace {

int edge_index(int i, int j) {  // i < j, 1-based
  return (j - 1) * (j - 2) / 2 + (i - 1);
}

std::uint64_t edge_mask(const Graph& g, const std::vector<int>& relabel) {
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) {
    int a = relabel[u], b = relabel[v];
    if (a > b) std::swap(a, b);
    mask |= std::uint64_t{1} << edge_index(a, b);
  }
  return mask;
}

// Color refinement: repeatedly rank vertices by (color, sorted neighbor
// colors).  A round that does not raise the class count cannot have moved
// anything, so the partition is equitable and we stop.  Color ids follow the
// sorted signature order, which keeps the partition canonical.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  int classes_before = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sorted(n);
    for (int v = 1; v <= n; ++v) {
      std::vector<int> s{color[v]};
      for (int u : g.neighbors(v)) s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
      sorted[v - 1] = {std::move(s), v};
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n + 1, 0);
    int classes = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sorted[k].first != sorted[k - 1].first) ++classes;
      next[sorted[k].second] = classes;
    }
    color = next;
    if (classes == classes_before) return;
    classes_before = classes;
  }
}

struct CanonSearch {
  const Graph& g;
  std::uint64_t best = ~std::uint64_t{0};

  void descend(std::vector<int> color) {
    refine(g, color);
    const int n = g.order();
    // First cell with more than one vertex, by color.
    std::vector<std::vector<int>> cells;
    int max_color = 0;
    for (int v = 1; v <= n; ++v) max_color = std::max(max_color, color[v]);
    cells.assign(max_color + 1, {});
    for (int v = 1; v <= n; ++v) cells[color[v]].push_back(v);
    int split = -1;
    for (int c = 0; c <= max_color && split < 0; ++c)
      if (cells[c].size() > 1) split = c;
    if (split < 0) {
      std::vector<int> relabel(n + 1, 0);
      for (int v = 1; v <= n; ++v) relabel[v] = color[v] + 1;
      best = std::min(best, edge_mask(g, relabel));
      return;
    }
    for (int v : cells[split]) {
      std::vector<int> branch(color.size());
      for (int u = 1; u <= n; ++u)
        branch[u] = color[u] * 2 + (color[u] == split && u != v ? 1 : 0);
      descend(std::move(branch));
    }
  }
};

Graph from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if ((mask >> edge_index(i, j)) & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  if (g.order() > 11) throw precondition_error("canonical key limited to n <= 11");
  if (g.order() == 0) return 0;
  CanonSearch s{g};
  s.descend(std::vector<int>(g.order() + 1, 0));
  return s.best;
}

const std::vector<Graph>& all_graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;
  if (n > 9) throw precondition_error("catalog limited to n <= 9");

  std::vector<Graph> out;
  if (n == 0) {
    out.push_back(Graph(0, {}));
  } else {
    const std::vector<Graph>& parents = all_graphs(n - 1);
    std::set<std::uint64_t> seen;
    for (const Graph& p : parents) {
      auto base_edges = p.edges();
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1));
           ++nbrs) {
        auto edges = base_edges;
        for (int v = 1; v < n; ++v)
          if ((nbrs >> (v - 1)) & 1) edges.emplace_back(v, n);
        seen.insert(canonical_key(Graph(n, edges)));
      }
    }
    for (std::uint64_t key : seen) out.push_back(from_mask(n, key));
  }
  auto [it, inserted] = cache.emplace(n, std::move(out));
  return it->second;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace rl
