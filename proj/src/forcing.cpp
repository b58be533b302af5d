#include "rl/forcing.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "rl/errors.hpp"

namespace rl {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<VertexSet, VertexSet>& p) const {
    return p.first.hash() * 31 + p.second.hash();
  }
};

}  // namespace

ForcingState initial_state(const Graph& g, const VertexSet& b0) {
  if (!b0.subset_of(g.vertices()))
    throw precondition_error("initial set outside the graph");
  return ForcingState{b0, b0, {}};
}

std::vector<RlMove> rl_moves(const Graph& g, const ForcingState& s) {
  std::vector<RlMove> out;
  VertexSet inactive = s.blue - s.active;
  for (const auto& comp : components(g, s.blue)) {
    if (boundary(g, comp).intersects(inactive)) continue;
    for (int u : s.active) {
      VertexSet white_in_comp = g.neighbors(u) & comp;
      if (white_in_comp.count() == 1)
        out.push_back(RlMove{comp, u, white_in_comp.min()});
    }
  }
  // components() is sorted by minimum vertex and the active set iterates in
  // increasing order, so the listing is already (component, u, w)-ordered.
  return out;
}

ForcingState rl_apply(const Graph& g, const ForcingState& s, const RlMove& m) {
  if (!s.active.contains(m.u) || s.blue.contains(m.w))
    throw illegal_move("u must be active and w white");
  // Recheck the rule against the current state.
  VertexSet inactive = s.blue - s.active;
  auto comps = components(g, s.blue);
  const VertexSet* k = nullptr;
  for (const auto& c : comps)
    if (c.contains(m.w)) k = &c;
  if (!k || *k != m.component)
    throw illegal_move("component does not match the current state");
  if (boundary(g, *k).intersects(inactive))
    throw illegal_move("component boundary holds an inactive blue vertex");
  VertexSet white_in_comp = g.neighbors(m.u) & *k;
  if (white_in_comp.count() != 1 || white_in_comp.min() != m.w)
    throw illegal_move("w is not the unique white neighbor of u in K");
  ForcingState next = s;
  next.blue.add(m.w);
  next.active.remove(m.u);
  next.active.add(m.w);
  next.forces.emplace_back(m.u, m.w);
  return next;
}

ZResult z_closure(const Graph& g, const VertexSet& b0) {
  if (!b0.subset_of(g.vertices()))
    throw precondition_error("initial set outside the graph");
  ZResult r{b0, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u : r.blue) {
      VertexSet white = g.neighbors(u) - r.blue;
      if (white.count() == 1) {
        int w = white.min();
        r.blue.add(w);
        r.forces.emplace_back(u, w);
        changed = true;
        break;  // restart scan: smallest forcing vertex first
      }
    }
  }
  return r;
}

namespace {

// Closure of blue u {v}, starting from an already-closed set.  Closures are
// monotone and idempotent, so extending a cached closure is sound and saves
// re-deriving the shared prefix for every candidate set.
VertexSet extend_closure(const Graph& g, const VertexSet& closed, int v) {
  VertexSet blue = closed;
  blue.add(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u : blue) {
      VertexSet white = g.neighbors(u) - blue;
      if (white.count() == 1) {
        blue.add(white.min());
        changed = true;
      }
    }
  }
  return blue;
}

bool subset_forces(const Graph& g, const VertexSet& closed, int next, int left,
                   const VertexSet& all) {
  if (closed == all) return left == 0;  // smaller sets were already rejected
  if (left == 0) return false;
  for (int v = next; v <= g.order(); ++v) {
    if (closed.contains(v)) continue;  // adding a forced vertex gains nothing
    if (subset_forces(g, extend_closure(g, closed, v), v + 1, left - 1, all))
      return true;
  }
  return false;
}

}  // namespace

int zero_forcing_number(const Graph& g, int max_n) {
  const int n = g.order();
  if (n == 0) throw precondition_error("empty graph");
  if (n > max_n)
    throw budget_exceeded("graph too large for exact zero forcing search");
  VertexSet all = g.vertices();
  for (int k = 1; k < n; ++k)
    if (subset_forces(g, VertexSet(n), 1, k, all)) return k;
  return n;
}

std::vector<ForcingState> rl_explore(const Graph& g, const VertexSet& b0,
                                     const std::optional<VertexSet>& goal,
                                     SearchBudget* budget) {
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  std::unordered_set<std::pair<VertexSet, VertexSet>, PairHash> seen;
  std::vector<ForcingState> out;
  std::unordered_set<std::pair<VertexSet, VertexSet>, PairHash> collected;

  auto dfs = [&](auto&& self, const ForcingState& s) -> void {
    bud.tick();
    if (!seen.insert({s.blue, s.active}).second) return;
    auto moves = rl_moves(g, s);
    bool take = goal ? (s.active == *goal) : moves.empty();
    if (take && collected.insert({s.blue, s.active}).second) out.push_back(s);
    for (const auto& m : moves) self(self, rl_apply(g, s, m));
  };
  dfs(dfs, initial_state(g, b0));
  return out;
}

int rl_forcing_number(const Graph& g, SearchBudget* budget) {
  const int n = g.order();
  if (n == 0) throw precondition_error("empty graph");
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  VertexSet all = g.vertices();
  for (int k = 1; k <= n; ++k) {
    for (const auto& sub : subsets_colex(n, k)) {
      VertexSet b0 = VertexSet::of(n, sub);
      // Reachability of the all-blue state in the process tree.
      std::unordered_set<std::pair<VertexSet, VertexSet>, PairHash> seen;
      bool found = false;
      auto dfs = [&](auto&& self, const ForcingState& s) -> void {
        if (found) return;
        bud.tick();
        if (s.blue == all) {
          found = true;
          return;
        }
        if (!seen.insert({s.blue, s.active}).second) return;
        for (const auto& m : rl_moves(g, s)) {
          self(self, rl_apply(g, s, m));
          if (found) return;
        }
      };
      dfs(dfs, initial_state(g, b0));
      if (found) return k;
    }
  }
  return n;
}

ChainSet extract_chain_set(const Graph& g, const ForcingState& s) {
  std::map<int, int> next;
  VertexSet forced(g.order());
  for (auto [u, w] : s.forces) {
    next[u] = w;
    forced.add(w);
  }
  VertexSet b0 = s.blue;
  for (auto [u, w] : s.forces) b0.remove(w);
  std::vector<Path> chains;
  for (int v : b0) {
    Path chain{v};
    auto it = next.find(v);
    while (it != next.end()) {
      chain.push_back(it->second);
      it = next.find(it->second);
    }
    chains.push_back(std::move(chain));
  }
  ChainSet cs;
  cs.chains = Linkage::from_paths(g, std::move(chains));
  cs.start = b0;
  cs.end = s.active;
  return cs;
}

namespace {

// Canonical key for the chains built so far: paths sorted by start vertex.
std::vector<Path> chain_key(const std::map<int, Path>& tails) {
  std::vector<Path> key;
  key.reserve(tails.size());
  for (const auto& [start, chain] : tails) key.push_back(chain);
  return key;
}

}  // namespace

std::set<Linkage> rl_chain_sets(const Graph& g, const VertexSet& b0,
                                SearchBudget* budget) {
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  std::set<Linkage> out;
  std::set<std::vector<Path>> seen;

  // tip -> full chain from its B_0 start
  std::map<int, Path> chains;
  for (int v : b0) chains[v] = {v};

  auto dfs = [&](auto&& self, const ForcingState& s,
                 std::map<int, Path>& tails) -> void {
    bud.tick();
    if (!seen.insert(chain_key(tails)).second) return;
    std::vector<Path> paths;
    for (const auto& [tip, chain] : tails) paths.push_back(chain);
    out.insert(Linkage::from_paths(g, paths));
    for (const auto& m : rl_moves(g, s)) {
      auto node = tails.extract(m.u);
      Path chain = std::move(node.mapped());
      chain.push_back(m.w);
      tails[m.w] = std::move(chain);
      ForcingState ns = rl_apply(g, s, m);
      self(self, ns, tails);
      auto back = tails.extract(m.w);
      Path restored = std::move(back.mapped());
      restored.pop_back();
      tails[m.u] = std::move(restored);
    }
  };
  ForcingState s0 = initial_state(g, b0);
  dfs(dfs, s0, chains);
  return out;
}

std::set<Linkage> z_chain_sets(const Graph& g, const VertexSet& b0,
                               SearchBudget* budget) {
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  std::set<Linkage> out;
  std::set<std::vector<Path>> seen;

  std::map<int, Path> chains;
  for (int v : b0) chains[v] = {v};

  auto dfs = [&](auto&& self, const VertexSet& blue,
                 std::map<int, Path>& tails) -> void {
    bud.tick();
    if (!seen.insert(chain_key(tails)).second) return;
    // Legal Z-forces: blue u with exactly one white neighbor w.  Forcing u
    // must still be a chain tip that has not forced yet.
    bool any = false;
    for (int u : blue) {
      VertexSet white = g.neighbors(u) - blue;
      if (white.count() != 1) continue;
      int w = white.min();
      any = true;
      auto node = tails.extract(u);
      Path chain = std::move(node.mapped());
      chain.push_back(w);
      tails[w] = std::move(chain);
      VertexSet nb = blue;
      nb.add(w);
      self(self, nb, tails);
      auto back = tails.extract(w);
      Path restored = std::move(back.mapped());
      restored.pop_back();
      tails[u] = std::move(restored);
    }
    if (!any) {
      std::vector<Path> paths;
      for (const auto& [tip, chain] : tails) paths.push_back(chain);
      out.insert(Linkage::from_paths(g, paths));
    }
  };
  dfs(dfs, b0, chains);
  return out;
}

bool z_process_is_rl_process(const Graph& g, const VertexSet& b0,
                             const std::vector<std::pair<int, int>>& forces) {
  ForcingState s = initial_state(g, b0);
  for (auto [u, w] : forces) {
    auto moves = rl_moves(g, s);
    const RlMove* hit = nullptr;
    for (const auto& m : moves)
      if (m.u == u && m.w == w) hit = &m;
    if (!hit) return false;
    s = rl_apply(g, s, *hit);
  }
  return true;
}

ForcingState realize_rigid_linkage(const Graph& g, const Linkage& p,
                                   const VertexSet& alpha,
                                   const VertexSet& beta) {
  if (!labels_linkage(p, alpha, beta))
    throw precondition_error("linkage is not an (alpha,beta)-linkage");
  const int n = g.order();

  // Orient every path from its alpha endpoint.  labels_linkage guarantees a
  // longer path has one endpoint in alpha \ beta and the other in beta \ alpha.
  std::vector<Path> oriented;
  for (const auto& path : p.paths()) {
    Path q = path;
    if (q.size() > 1 && !(alpha.contains(q.front()) && !beta.contains(q.front())))
      std::reverse(q.begin(), q.end());
    oriented.push_back(q);
  }

  ForcingState s = initial_state(g, alpha);
  std::vector<std::size_t> frontier(oriented.size(), 1);  // next white index

  while (true) {
    bool done = true;
    for (std::size_t i = 0; i < oriented.size(); ++i)
      if (frontier[i] < oriented[i].size()) done = false;
    if (done) break;

    // Effective white vertices: components of g - blue meeting a white beta
    // vertex.
    VertexSet effective(n);
    for (const auto& comp : components(g, s.blue))
      if (comp.intersects(beta)) effective |= comp;

    bool advanced = false;
    for (std::size_t i = 0; i < oriented.size() && !advanced; ++i) {
      if (frontier[i] >= oriented[i].size()) continue;
      int u = oriented[i][frontier[i] - 1];
      int w = oriented[i][frontier[i]];
      if (!effective.contains(w)) continue;
      if ((g.neighbors(u) & effective).count() != 1) continue;
      // w is the unique effective white neighbor of u, which makes this a
      // legal RL-force; go through rl_apply anyway to keep the invariant.
      const VertexSet* comp = nullptr;
      auto comps = components(g, s.blue);
      for (const auto& c : comps)
        if (c.contains(w)) comp = &c;
      if (!comp) continue;
      try {
        s = rl_apply(g, s, RlMove{*comp, u, w});
      } catch (const illegal_move&) {
        throw not_rigid("guided force was not a legal RL-move");
      }
      ++frontier[i];
      advanced = true;
    }
    if (!advanced)
      throw not_rigid("guided construction stalled; linkage is not rigid");
  }

  if (s.active != beta)
    throw not_rigid("process finished with active set different from beta");
  return s;
}

}  // namespace rl
