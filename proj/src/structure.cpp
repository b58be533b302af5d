#include "rl/structure.hpp"

#include <algorithm>
#include <climits>

#include "rl/errors.hpp"
#include "rl/forcing.hpp"

namespace rl {

bool valid_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.order();
  const int k = td.tree.order();
  if (int(td.bags.size()) != k + 1) return false;
  if (k == 0) return n == 0;
  if (td.tree.edge_count() != k - 1 || !is_connected(td.tree)) return false;

  VertexSet covered(n);
  for (int i = 1; i <= k; ++i) covered |= td.bags[i];
  if (covered != g.vertices()) return false;

  for (auto [u, v] : g.edges()) {
    bool hit = false;
    for (int i = 1; i <= k && !hit; ++i)
      hit = td.bags[i].contains(u) && td.bags[i].contains(v);
    if (!hit) return false;
  }

  // Bags containing v must induce a connected subtree.
  for (int v = 1; v <= n; ++v) {
    VertexSet holding(k);
    for (int i = 1; i <= k; ++i)
      if (td.bags[i].contains(v)) holding.add(i);
    if (holding.empty()) return false;
    VertexSet rest = td.tree.vertices() - holding;
    if (components(td.tree, rest).size() != 1) return false;
  }
  return true;
}

namespace {

// Vertices outside S∪{v} reachable from v through S.
VertexSet reach_through(const Graph& g, const VertexSet& s, int v) {
  VertexSet inside(g.order());
  inside.add(v);
  VertexSet frontier = inside;
  VertexSet out(g.order());
  while (!frontier.empty()) {
    VertexSet nbrs(g.order());
    for (int x : frontier) nbrs |= g.neighbors(x);
    out |= nbrs - s - inside;
    VertexSet grow = (nbrs & s) - inside;
    inside |= grow;
    frontier = grow;
  }
  out.remove(v);
  return out;
}

}  // namespace

TreewidthResult treewidthExactImpl(const Graph& g) {
  const int n = g.order();
  TreewidthResult result;
  if (n == 0) {
    result.width = -1;
    result.decomposition = TreeDecomposition{Graph(0, {}), {VertexSet(0)}};
    return result;
  }

  // dp[S] = least, over orderings eliminating exactly S first, of the largest
  // elimination degree seen; the degree of v eliminated after S\{v} is the
  // number of vertices outside reachable from v through S\{v}.
  std::vector<int> dp(std::size_t(1) << n, INT_MAX);
  std::vector<int> pick(std::size_t(1) << n, 0);
  dp[0] = -1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s(n);
    for (int v = 1; v <= n; ++v)
      if ((mask >> (v - 1)) & 1) s.add(v);
    for (int v = 1; v <= n; ++v) {
      if (!((mask >> (v - 1)) & 1)) continue;
      std::uint64_t prev = mask & ~(std::uint64_t{1} << (v - 1));
      if (dp[prev] == INT_MAX) continue;
      VertexSet swo = s;
      swo.remove(v);
      int deg = reach_through(g, swo, v).count();
      int cand = std::max(dp[prev], deg);
      if (cand < dp[mask]) {
        dp[mask] = cand;
        pick[mask] = v;
      }
    }
  }
  result.width = dp.back();

  // Recover the elimination order and build the decomposition by simulated
  // elimination with fill-in.
  std::vector<int> order;
  std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  while (mask) {
    int v = pick[mask];
    order.push_back(v);
    mask &= ~(std::uint64_t{1} << (v - 1));
  }
  std::reverse(order.begin(), order.end());  // order[0] eliminated first

  std::vector<VertexSet> fill(n + 1, VertexSet(n));
  for (int v = 1; v <= n; ++v) fill[v] = g.neighbors(v);
  std::vector<int> position(n + 1, 0);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<VertexSet> bags(n + 1, VertexSet(n));
  VertexSet remaining = g.vertices();
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    remaining.remove(v);
    VertexSet nbrs = fill[v] & remaining;
    bags[i + 1] = nbrs;
    bags[i + 1].add(v);
    for (int a : nbrs)
      for (int b : nbrs)
        if (a != b) fill[a].add(b);
  }

  // Attach bag i to the bag of the earliest-eliminated remaining neighbor;
  // bags with none (last of a component) chain to the next bag.
  std::vector<std::pair<int, int>> tree_edges;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VertexSet rest = bags[i + 1];
    rest.remove(v);
    int parent;
    if (!rest.empty()) {
      parent = n;
      for (int u : rest) parent = std::min(parent, position[u]);
      parent += 1;
    } else {
      parent = i + 2;  // arbitrary attachment keeps the tree connected
    }
    if (parent >= 1 && parent <= n && parent != i + 1)
      tree_edges.emplace_back(i + 1, parent);
  }
  // Deduplicate (attachment may repeat an edge in tiny cases).
  std::sort(tree_edges.begin(), tree_edges.end(),
            [](auto a, auto b) {
              auto na = std::minmax(a.first, a.second);
              auto nb = std::minmax(b.first, b.second);
              return na < nb;
            });
  std::vector<std::pair<int, int>> dedup;
  for (auto e : tree_edges) {
    auto norm = std::minmax(e.first, e.second);
    if (dedup.empty() || std::minmax(dedup.back().first, dedup.back().second) !=
                             norm)
      dedup.push_back(e);
  }
  result.decomposition.tree = Graph(n, dedup);
  result.decomposition.bags = bags;
  return result;
}

TreewidthResult treewidth_exact(const Graph& g, int max_n) {
  if (g.order() > max_n)
    throw budget_exceeded("graph too large for exact treewidth");
  if (g.order() > 25) throw budget_exceeded("subset table would not fit");
  auto r = treewidthExactImpl(g);
  if (g.order() > 0 && !valid_decomposition(g, r.decomposition))
    throw error("internal: witness decomposition failed validation");
  return r;
}

bool check_tw_bound(const Graph& g, const Linkage& p, int max_n,
                    SearchBudget* budget) {
  if (!p.spanning(g))
    throw precondition_error("linkage does not span the graph");
  if (!is_rigid_any_labeling(g, p, budget))
    throw precondition_error("linkage is not rigid");
  return treewidth_exact(g, max_n).width <= p.order();
}

bool is_two_parallel_paths(const Graph& g) {
  if (is_path_graph(g))
    throw precondition_error("graph is a path; characterization excludes it");
  return zero_forcing_number(g) == 2;
}

namespace {

std::vector<std::pair<int, int>> non_path_edges(const Graph& g,
                                                const Linkage& p) {
  auto pe = p.edges();
  std::vector<std::pair<int, int>> out;
  for (auto e : g.edges())
    if (!std::binary_search(pe.begin(), pe.end(), e)) out.push_back(e);
  return out;
}

int path_index_of(const Linkage& p, int v) {
  for (std::size_t i = 0; i < p.paths().size(); ++i)
    for (int x : p.paths()[i])
      if (x == v) return int(i);
  return -1;
}

}  // namespace

std::vector<std::pair<int, int>> linkage_chords(const Graph& g,
                                                const Linkage& p) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : non_path_edges(g, p)) {
    int iu = path_index_of(p, u), iv = path_index_of(p, v);
    if (iu >= 0 && iu == iv) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::pair<int, int>> linkage_rungs(const Graph& g,
                                               const Linkage& p) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : non_path_edges(g, p)) {
    int iu = path_index_of(p, u), iv = path_index_of(p, v);
    if (!(iu >= 0 && iu == iv)) out.emplace_back(u, v);
  }
  return out;
}

bool has_x_minor(const Graph& g, const Linkage& p, const VertexSet& alpha,
                 const VertexSet& beta) {
  if (p.order() != 2) throw precondition_error("linkage must have order 2");
  if (!labels_linkage(p, alpha, beta))
    throw precondition_error("labeling does not fit the linkage");
  if (!linkage_chords(g, p).empty())
    throw precondition_error("linkage has a chord");

  // Positions along each path counted from the alpha endpoint.
  const int n = g.order();
  std::vector<int> pos(n + 1, -1), which(n + 1, -1);
  int idx = 0;
  for (const auto& path : p.paths()) {
    Path q = path;
    if (q.size() > 1 && !(alpha.contains(q.front()) && !beta.contains(q.front())))
      std::reverse(q.begin(), q.end());
    for (std::size_t k = 0; k < q.size(); ++k) {
      pos[q[k]] = int(k);
      which[q[k]] = idx;
    }
    ++idx;
  }

  // Rungs between the two paths, written as (vertex on path 0, vertex on 1).
  std::vector<std::pair<int, int>> cross;
  for (auto [u, v] : linkage_rungs(g, p)) {
    if (which[u] == 0 && which[v] == 1) cross.emplace_back(u, v);
    else if (which[u] == 1 && which[v] == 0) cross.emplace_back(v, u);
  }

  for (const auto& [x1, y2] : cross)
    for (const auto& [y1, x2] : cross)
      if (pos[x1] < pos[y1] && pos[x2] < pos[y2]) return true;
  return false;
}

}  // namespace rl
