#include "rl/linkage.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "rl/errors.hpp"

namespace rl {

namespace {

Path oriented(Path p) {
  if (p.size() > 1 && p.back() < p.front()) std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

Linkage Linkage::from_paths(const Graph& g, std::vector<Path> paths) {
  VertexSet seen(g.order());
  Linkage out;
  for (auto& p : paths) {
    if (!is_path(g, p)) throw precondition_error("not a path in the graph");
    for (int v : p) {
      if (seen.contains(v))
        throw precondition_error("paths are not vertex-disjoint");
      seen.add(v);
    }
    out.paths_.push_back(oriented(std::move(p)));
  }
  std::sort(out.paths_.begin(), out.paths_.end(),
            [](const Path& a, const Path& b) { return a.front() < b.front(); });
  return out;
}

int Linkage::vertex_count() const {
  int c = 0;
  for (const auto& p : paths_) c += int(p.size());
  return c;
}

VertexSet Linkage::vertex_set(int n) const {
  VertexSet s(n);
  for (const auto& p : paths_)
    for (int v : p) s.add(v);
  return s;
}

bool Linkage::spanning(const Graph& g) const {
  return vertex_count() == g.order();
}

std::vector<std::pair<int, int>> Linkage::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : paths_)
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      out.emplace_back(std::min(p[k], p[k + 1]), std::max(p[k], p[k + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

Pattern pattern_of(const Linkage& p) {
  Pattern pat;
  for (const auto& path : p.paths())
    pat.emplace_back(std::min(path.front(), path.back()),
                     std::max(path.front(), path.back()));
  std::sort(pat.begin(), pat.end());
  return pat;
}

bool labels_linkage(const Linkage& p, const VertexSet& alpha,
                    const VertexSet& beta) {
  if (alpha.count() != p.order() || beta.count() != p.order()) return false;
  VertexSet arec(alpha.universe()), brec(beta.universe());
  for (const auto& path : p.paths()) {
    int a = path.front(), b = path.back();
    if (a == b) {
      if (!alpha.contains(a) || !beta.contains(a)) return false;
      arec.add(a);
      brec.add(a);
      continue;
    }
    bool aA = alpha.contains(a) && !beta.contains(a);
    bool aB = beta.contains(a) && !alpha.contains(a);
    bool bA = alpha.contains(b) && !beta.contains(b);
    bool bB = beta.contains(b) && !alpha.contains(b);
    if (aA && bB) {
      arec.add(a);
      brec.add(b);
    } else if (bA && aB) {
      arec.add(b);
      brec.add(a);
    } else {
      return false;
    }
  }
  return arec == alpha && brec == beta;
}

namespace {

// Backtracking engine: builds vertex-disjoint paths realizing the given
// endpoint pairs, one pair at a time, extending the current path one vertex
// at a time in increasing neighbor order.  Interior vertices may not touch
// any terminal.  shrink_bound, when set, turns the search into
// branch-and-bound on the total vertex count.
struct PairSearch {
  const Graph& g;
  const Pattern& pairs;
  SearchBudget& budget;
  std::optional<int> max_total;
  int* shrink_bound = nullptr;
  const std::function<bool(const Linkage&)>* emit = nullptr;

  VertexSet terminals;
  VertexSet used;
  std::vector<Path> built;
  std::vector<int> suffix_min;  // minimum vertices still needed from pair i on
  int used_count = 0;
  bool stopped = false;

  explicit PairSearch(const Graph& g_, const Pattern& pairs_,
                      SearchBudget& budget_)
      : g(g_), pairs(pairs_), budget(budget_), terminals(g_.order()),
        used(g_.order()) {}

  bool feasible_terminals() {
    // A vertex occurring in two different pairs admits no linkage.
    for (const auto& [a, b] : pairs) {
      if (a < 1 || a > g.order() || b < 1 || b > g.order())
        throw precondition_error("endpoint outside the graph");
      if (terminals.contains(a)) return false;
      terminals.add(a);
      if (b != a) {
        if (terminals.contains(b)) return false;
        terminals.add(b);
      }
    }
    return true;
  }

  void run() {
    if (!feasible_terminals()) return;
    suffix_min.assign(pairs.size() + 1, 0);
    for (int i = int(pairs.size()) - 1; i >= 0; --i)
      suffix_min[i] =
          suffix_min[i + 1] + (pairs[i].first == pairs[i].second ? 1 : 2);
    place(0);
  }

  // In shrink mode only strict improvements matter; otherwise the static
  // cap is inclusive.
  bool prune(int min_final) const {
    if (shrink_bound) return min_final >= *shrink_bound;
    if (max_total) return min_final > *max_total;
    return false;
  }

  void place(std::size_t i) {
    if (stopped) return;
    budget.tick();
    if (prune(used_count + suffix_min[i])) return;
    if (i == pairs.size()) {
      if (shrink_bound) *shrink_bound = used_count;
      if (emit && !(*emit)(Linkage::from_paths(g, built))) stopped = true;
      return;
    }
    auto [a, b] = pairs[i];
    if (a == b) {
      built.push_back({a});
      used.add(a);
      ++used_count;
      place(i + 1);
      --used_count;
      used.remove(a);
      built.pop_back();
      return;
    }
    Path cur = {a};
    used.add(a);
    ++used_count;
    extend(i, cur, b);
    --used_count;
    used.remove(a);
  }

  void extend(std::size_t i, Path& cur, int goal) {
    if (stopped) return;
    budget.tick();
    if (prune(used_count + 1 + suffix_min[i + 1])) return;
    for (int w : g.neighbors(cur.back())) {
      if (stopped) return;
      if (used.contains(w)) continue;
      if (w == goal) {
        cur.push_back(w);
        used.add(w);
        ++used_count;
        built.push_back(cur);
        place(i + 1);
        built.pop_back();
        --used_count;
        used.remove(w);
        cur.pop_back();
      } else if (!terminals.contains(w)) {
        cur.push_back(w);
        used.add(w);
        ++used_count;
        extend(i, cur, goal);
        --used_count;
        used.remove(w);
        cur.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_pattern_linkage(const Graph& g, const Pattern& pairs,
                              SearchBudget& budget,
                              std::optional<int> max_total_vertices,
                              const std::function<bool(const Linkage&)>& emit) {
  PairSearch s(g, pairs, budget);
  s.max_total = max_total_vertices;
  s.emit = &emit;
  s.run();
}

namespace {

// Visits every endpoint matching between alpha \ beta and beta \ alpha;
// common vertices become one-vertex paths.  Callback gets the pair list.
template <typename F>
void for_each_matching(const Graph& g, const VertexSet& alpha,
                       const VertexSet& beta, F&& f) {
  if (alpha.count() != beta.count())
    throw precondition_error("|alpha| != |beta|");
  if (alpha.universe() != g.order() || beta.universe() != g.order())
    throw precondition_error("vertex set does not match the graph");
  VertexSet common = alpha & beta;
  std::vector<int> a = (alpha - common).to_vector();
  std::vector<int> b = (beta - common).to_vector();
  std::vector<int> perm = b;  // already sorted ascending
  Pattern pairs;
  do {
    pairs.clear();
    for (int c : common) pairs.emplace_back(c, c);
    for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], perm[i]);
    if (!f(pairs)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<Linkage> enumerate_linkages(const Graph& g, const VertexSet& alpha,
                                        const VertexSet& beta,
                                        std::optional<int> max_count,
                                        std::optional<int> max_total_vertices,
                                        SearchBudget* budget) {
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  std::vector<Linkage> out;
  std::set<Linkage> seen;
  for_each_matching(g, alpha, beta, [&](const Pattern& pairs) {
    for_each_pattern_linkage(g, pairs, bud, max_total_vertices,
                             [&](const Linkage& p) {
                               if (seen.insert(p).second) out.push_back(p);
                               return !(max_count &&
                                        int(out.size()) >= *max_count);
                             });
    return !(max_count && int(out.size()) >= *max_count);
  });
  return out;
}

bool is_rigid(const Graph& g, const Linkage& p, const VertexSet& alpha,
              const VertexSet& beta, SearchBudget* budget) {
  if (!labels_linkage(p, alpha, beta))
    throw precondition_error("linkage is not an (alpha,beta)-linkage");
  auto found = enumerate_linkages(g, alpha, beta, 2, std::nullopt, budget);
  return found.size() == 1 && found[0] == p;
}

std::optional<EndpointLabeling> is_rigid_any_labeling(const Graph& g,
                                                      const Linkage& p,
                                                      SearchBudget* budget) {
  const int n = g.order();
  std::vector<const Path*> longs;
  VertexSet singles(n);
  for (const auto& path : p.paths()) {
    if (path.size() == 1)
      singles.add(path.front());
    else
      longs.push_back(&path);
  }
  // (alpha,beta) and (beta,alpha) coincide, so the first long path's front
  // endpoint is pinned to alpha.
  const std::size_t free = longs.empty() ? 0 : longs.size() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    VertexSet alpha = singles, beta = singles;
    if (!longs.empty()) {
      alpha.add(longs[0]->front());
      beta.add(longs[0]->back());
    }
    for (std::size_t i = 1; i < longs.size(); ++i) {
      bool flip = (mask >> (i - 1)) & 1;
      alpha.add(flip ? longs[i]->back() : longs[i]->front());
      beta.add(flip ? longs[i]->front() : longs[i]->back());
    }
    if (is_rigid(g, p, alpha, beta, budget)) return EndpointLabeling{alpha, beta};
  }
  return std::nullopt;
}

bool is_unique_linkage(const Graph& g, const Linkage& p, SearchBudget* budget) {
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  Pattern pat = pattern_of(p);
  int count = 0;
  bool same = false;
  for_each_pattern_linkage(g, pat, bud, std::nullopt, [&](const Linkage& q) {
    ++count;
    if (q == p) same = true;
    return count < 2;
  });
  if (!same && count < 2)
    throw precondition_error("linkage not found under its own pattern");
  return count == 1;
}

bool is_vital(const Graph& g, const Linkage& p, SearchBudget* budget) {
  return p.spanning(g) && is_unique_linkage(g, p, budget);
}

std::vector<std::vector<int>> subsets_colex(int n, int t) {
  std::vector<std::vector<int>> out;
  if (t < 0 || t > n) return out;
  if (t == 0) return {{}};
  std::vector<int> s(t);
  for (int i = 0; i < t; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    int i = 0;
    while (i < t) {
      int cap = (i + 1 < t) ? s[i + 1] : n + 1;
      if (s[i] + 1 < cap) break;
      ++i;
    }
    if (i == t) break;
    ++s[i];
    for (int j = 0; j < i; ++j) s[j] = j + 1;
  }
  return out;
}

namespace {

// Count (alpha,beta)-linkages up to 2; returns the single linkage if unique.
struct UniqueProbe {
  int count = 0;
  Linkage only;
};

UniqueProbe probe_unique(const Graph& g, const VertexSet& alpha,
                         const VertexSet& beta, SearchBudget& budget,
                         std::optional<int> max_total) {
  UniqueProbe r;
  for_each_matching(g, alpha, beta, [&](const Pattern& pairs) {
    for_each_pattern_linkage(g, pairs, budget, max_total,
                             [&](const Linkage& p) {
                               if (r.count == 0) r.only = p;
                               return ++r.count < 2;
                             });
    return r.count < 2;
  });
  return r;
}

void consider(ExtremalResult& best, int value, const Linkage& w,
              const VertexSet& a, const VertexSet& b) {
  if (!best.exists || value > best.value ||
      (value == best.value && w < best.witness)) {
    best = {value, true, w, a, b};
  }
}

}  // namespace

ExtremalResult rigid_linkage_number(const Graph& g, int t,
                                    SearchBudget* budget) {
  const int n = g.order();
  if (t < 1 || t > n) throw precondition_error("t out of range");
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  ExtremalResult best;
  auto subs = subsets_colex(n, t);
  for (std::size_t ai = 0; ai < subs.size() && !(best.exists && best.value == n);
       ++ai) {
    VertexSet alpha = VertexSet::of(n, subs[ai]);
    for (std::size_t bi = ai; bi < subs.size(); ++bi) {
      VertexSet beta = VertexSet::of(n, subs[bi]);
      auto r = probe_unique(g, alpha, beta, bud, std::nullopt);
      if (r.count == 1)
        consider(best, r.only.vertex_count(), r.only, alpha, beta);
      if (best.exists && best.value == n) break;
    }
  }
  return best;
}

std::optional<int> shortest_linkage_size(const Graph& g,
                                         const VertexSet& alpha,
                                         const VertexSet& beta,
                                         SearchBudget* budget) {
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  int bound = INT_MAX;
  for_each_matching(g, alpha, beta, [&](const Pattern& pairs) {
    PairSearch s(g, pairs, bud);
    s.shrink_bound = &bound;
    std::function<bool(const Linkage&)> sink = [](const Linkage&) {
      return true;
    };
    s.emit = &sink;
    s.run();
    return true;
  });
  if (bound == INT_MAX) return std::nullopt;
  return bound;
}

bool is_rigid_shortest(const Graph& g, const Linkage& p, const VertexSet& alpha,
                       const VertexSet& beta, SearchBudget* budget) {
  if (!labels_linkage(p, alpha, beta))
    throw precondition_error("linkage is not an (alpha,beta)-linkage");
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  auto s = shortest_linkage_size(g, alpha, beta, &bud);
  if (!s) throw precondition_error("no (alpha,beta)-linkage exists");
  if (p.vertex_count() != *s) return false;
  auto r = probe_unique(g, alpha, beta, bud, *s);
  return r.count == 1 && r.only == p;
}

ExtremalResult rigid_shortest_linkage_number(const Graph& g, int t,
                                             SearchBudget* budget) {
  const int n = g.order();
  if (t < 1 || t > n) throw precondition_error("t out of range");
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;
  ExtremalResult best;
  auto subs = subsets_colex(n, t);
  for (std::size_t ai = 0; ai < subs.size() && !(best.exists && best.value == n);
       ++ai) {
    VertexSet alpha = VertexSet::of(n, subs[ai]);
    for (std::size_t bi = ai; bi < subs.size(); ++bi) {
      VertexSet beta = VertexSet::of(n, subs[bi]);
      auto s = shortest_linkage_size(g, alpha, beta, &bud);
      if (!s) continue;
      if (best.exists && *s < best.value) continue;
      auto r = probe_unique(g, alpha, beta, bud, *s);
      if (r.count == 1) consider(best, *s, r.only, alpha, beta);
      if (best.exists && best.value == n) break;
    }
  }
  return best;
}

namespace {

// All linkages: paths are generated from their smaller endpoint, starts
// strictly increasing, so each linkage appears exactly once.
struct AllLinkages {
  const Graph& g;
  SearchBudget& budget;
  const std::function<bool(const Linkage&)>& emit;
  VertexSet used;
  std::vector<Path> built;
  bool stopped = false;

  AllLinkages(const Graph& g_, SearchBudget& b,
              const std::function<bool(const Linkage&)>& e)
      : g(g_), budget(b), emit(e), used(g_.order()) {}

  void rec(int last_start) {
    if (stopped) return;
    for (int v = last_start + 1; v <= g.order(); ++v) {
      if (used.contains(v)) continue;
      Path cur = {v};
      used.add(v);
      close_or_extend(v, cur);
      used.remove(v);
      if (stopped) return;
    }
  }

  void close_or_extend(int start, Path& cur) {
    if (stopped) return;
    budget.tick();
    if (cur.size() == 1 || cur.back() > start) {
      built.push_back(cur);
      if (!emit(Linkage::from_paths(g, built))) {
        stopped = true;
        built.pop_back();
        return;
      }
      rec(start);
      built.pop_back();
      if (stopped) return;
    }
    for (int w : g.neighbors(cur.back())) {
      if (used.contains(w)) continue;
      cur.push_back(w);
      used.add(w);
      close_or_extend(start, cur);
      used.remove(w);
      cur.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_linkage(const Graph& g, SearchBudget& budget,
                      const std::function<bool(const Linkage&)>& emit) {
  AllLinkages a(g, budget, emit);
  a.rec(0);
}

}  // namespace rl
