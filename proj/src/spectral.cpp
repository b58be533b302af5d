#include "rl/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "rl/errors.hpp"
#include "rl/families.hpp"

namespace rl {

SymMatrix sample_matrix(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = g.order();
  SymMatrix a = SymMatrix::zero_exact(n);
  // Raw engine output keeps the draw identical across platforms.
  for (int i = 1; i <= n; ++i) {
    long num = long(rng() % 513) - 256;  // [-256, 256] / 256
    Rat v(num, 256);
    v.canonicalize();
    a.set(i, i, v);
  }
  for (auto [i, j] : g.edges()) {
    long mag = 128 + long(rng() % 385);  // [128, 512] / 256 = [1/2, 2]
    bool neg = rng() & 1;
    Rat v(neg ? -mag : mag, 256);
    v.canonicalize();
    a.set(i, j, v);
  }
  return a;
}

int GeneralizedLinearSubgraph::edge_count() const {
  int e = 0;
  for (const auto& p : linkage.paths()) e += int(p.size()) - 1;
  e += int(edge_components.size());
  for (const auto& c : cycles) e += int(c.size());
  return e;
}

int GeneralizedLinearSubgraph::cycle_count() const { return int(cycles.size()); }

Rat weight_cycle_part(const SymMatrix& a, const GeneralizedLinearSubgraph& c) {
  Rat w(1);
  for (int v : c.isolated) w *= a.rat(v, v);
  for (auto [i, j] : c.edge_components) w *= a.rat(i, j) * a.rat(i, j);
  for (const auto& cyc : c.cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k)
      w *= a.rat(cyc[k], cyc[(k + 1) % cyc.size()]);
  return w;
}

Rat weight_linkage(const SymMatrix& a, const Linkage& p) {
  Rat w(1);
  for (auto [i, j] : p.edges()) w *= a.rat(i, j);
  return w;
}

namespace {

// Enumerates the generalized linear subgraphs of g restricted to rest: each
// vertex ends up isolated, in a 2-vertex component, or on a cycle.  The
// smallest remaining vertex anchors each choice, so nothing repeats.
struct CyclePartEnum {
  const Graph& g;
  SearchBudget& budget;
  GeneralizedLinearSubgraph* h;
  const std::function<bool(const GeneralizedLinearSubgraph&)>* visit;
  bool stopped = false;

  void run(VertexSet rest) {
    if (stopped) return;
    budget.tick();
    int v = rest.min();
    if (v == 0) {
      if (!(*visit)(*h)) stopped = true;
      return;
    }
    VertexSet without = rest;
    without.remove(v);

    h->isolated.add(v);
    run(without);
    h->isolated.remove(v);
    if (stopped) return;

    for (int u : g.neighbors(v) & without) {
      VertexSet rest2 = without;
      rest2.remove(u);
      h->edge_components.emplace_back(v, u);
      run(rest2);
      h->edge_components.pop_back();
      if (stopped) return;
    }

    // Cycles anchored at v, second vertex smaller than the last to fix the
    // orientation.
    std::vector<int> path{v};
    VertexSet on_path(g.order());
    on_path.add(v);
    cycle_dfs(v, path, on_path, without);
  }

  void cycle_dfs(int anchor, std::vector<int>& path, VertexSet& on_path,
                 const VertexSet& avail) {
    if (stopped) return;
    budget.tick();
    int tip = path.back();
    for (int u : g.neighbors(tip) & avail) {
      if (on_path.contains(u)) continue;
      path.push_back(u);
      on_path.add(u);
      if (path.size() >= 3 && g.adjacent(u, anchor) && path[1] < u) {
        VertexSet rest2 = avail;
        for (int x : path)
          if (x != anchor) rest2.remove(x);
        h->cycles.push_back(path);
        run(rest2);
        h->cycles.pop_back();
      }
      if (!stopped) cycle_dfs(anchor, path, on_path, avail);
      on_path.remove(u);
      path.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_linear_subgraph(
    const Graph& g, const VertexSet& alpha, const VertexSet& beta,
    const std::vector<int>& sigma, SearchBudget& budget,
    const std::function<bool(const GeneralizedLinearSubgraph&)>& visit) {
  std::vector<int> av = alpha.to_vector(), bv = beta.to_vector();
  if (av.size() != bv.size() || sigma.size() != av.size())
    throw precondition_error("alpha, beta, sigma sizes disagree");
  Pattern pairs;
  for (std::size_t i = 0; i < av.size(); ++i) {
    int a = av[i], b = bv[std::size_t(sigma[i])];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  bool stopped = false;
  for_each_pattern_linkage(
      g, pairs, budget, std::nullopt, [&](const Linkage& p) {
        GeneralizedLinearSubgraph h;
        h.linkage = p;
        h.isolated = VertexSet(g.order());
        CyclePartEnum ce{g, budget, &h, &visit};
        ce.run(g.vertices() - p.vertex_set(g.order()));
        stopped = ce.stopped;
        return !stopped;
      });
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

Rat cycledet(const Graph& g, const SymMatrix& a, const VertexSet& alpha,
             const VertexSet& beta, SearchBudget* budget) {
  if (!a.exact()) throw precondition_error("cycledet needs a rational matrix");
  if (!a.conforms_to(g)) throw precondition_error("matrix does not fit the graph");
  if (alpha.count() != beta.count())
    throw precondition_error("|alpha| != |beta|");
  SearchBudget local;
  SearchBudget& bud = budget ? *budget : local;

  const int t = alpha.count();
  std::vector<int> sigma(t);
  for (int i = 0; i < t; ++i) sigma[i] = i;

  Rat total(0);
  do {
    Rat inner(0);
    for_each_linear_subgraph(
        g, alpha, beta, sigma, bud, [&](const GeneralizedLinearSubgraph& h) {
          Rat w = weight_linkage(a, h.linkage) * weight_cycle_part(a, h);
          Rat term = (h.edge_count() % 2 ? Rat(-1) : Rat(1)) * w;
          for (int c = 0; c < h.cycle_count(); ++c) term *= Rat(-2);
          inner += term;
          return true;
        });
    total += Rat(permutation_sign(sigma)) * inner;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  long index_sum = 0;
  for (int v : alpha) index_sum += v;
  for (int v : beta) index_sum += v;
  return (index_sum % 2 ? Rat(-1) : Rat(1)) * total;
}

MinorIdentityReport rigid_minor_identity(const Graph& g, const SymMatrix& a,
                                         const Linkage& p,
                                         const VertexSet& alpha,
                                         const VertexSet& beta,
                                         SearchBudget* budget) {
  if (!is_rigid(g, p, alpha, beta, budget))
    throw precondition_error("linkage is not (alpha,beta)-rigid");
  MinorIdentityReport r;
  r.lhs = a.minor_matrix(alpha, beta).determinant();
  Rat sub = a.minor_matrix(p.vertex_set(g.order()), p.vertex_set(g.order()))
                .determinant();
  r.rhs = weight_linkage(a, p) * sub;
  if (r.lhs == 0 && r.rhs == 0)
    r.sign = 0;
  else if (r.lhs == r.rhs)
    r.sign = 1;
  else if (r.lhs == -r.rhs)
    r.sign = -1;
  else
    r.sign = 0;
  r.holds = (r.lhs == r.rhs) || (r.lhs == -r.rhs);
  return r;
}

SpectrumReport spectrum(const SymMatrix& a, double tol) {
  if (tol <= 0) throw precondition_error("tolerance must be positive");
  const int n = a.order();
  SpectrumReport rep;
  if (n == 0) return rep;

  Eigen::MatrixXd m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = a.value(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());

  double scale = std::max(1.0, std::max(std::abs(ev.front()), std::abs(ev.back())));
  double teff = tol * scale;
  for (int i = 0; i + 1 < n; ++i) {
    double gap = ev[i + 1] - ev[i];
    if (gap >= teff && gap < 10 * teff)
      throw clustering_ambiguous("eigenvalue gap inside the ambiguity band");
  }

  std::size_t start = 0;
  for (std::size_t i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev[i] - ev[i - 1] >= teff) {
      double sum = 0;
      for (std::size_t k = start; k < i; ++k) sum += ev[k];
      rep.values.push_back(sum / double(i - start));
      rep.mults.push_back(int(i - start));
      start = i;
    }
  }
  rep.m_desc = rep.mults;
  std::sort(rep.m_desc.begin(), rep.m_desc.end(), std::greater<int>());
  rep.q = conjugate_partition(rep.m_desc);
  return rep;
}

std::vector<int> conjugate_partition(const std::vector<int>& m_desc) {
  std::vector<int> q;
  if (m_desc.empty()) return q;
  for (int i = 1; i <= m_desc[0]; ++i) {
    int count = 0;
    for (int m : m_desc)
      if (m >= i) ++count;
    q.push_back(count);
  }
  return q;
}

NullityReport verify_nullity_bound(const Graph& g, const SymMatrix& a,
                                   const Linkage& p, const VertexSet& alpha,
                                   const VertexSet& beta, SearchBudget* budget) {
  if (!a.exact()) throw precondition_error("nullity bound needs a rational matrix");
  if (!is_rigid(g, p, alpha, beta, budget))
    throw precondition_error("linkage is not (alpha,beta)-rigid");
  NullityReport r;
  const int n = a.order();
  r.order = p.order();
  r.null_full = n - a.to_rat_matrix().rank();
  VertexSet pv = p.vertex_set(n);
  r.null_sub = (n - pv.count()) - a.minor_matrix(pv, pv).rank();
  r.slack = r.null_sub - (r.null_full - r.order);
  r.holds = r.slack >= 0;
  return r;
}

MultiplicityReport verify_multiplicity_bound(const Graph& g, const SymMatrix& a,
                                             const Linkage& p,
                                             const VertexSet& alpha,
                                             const VertexSet& beta, double tol,
                                             SearchBudget* budget) {
  if (!is_rigid(g, p, alpha, beta, budget))
    throw precondition_error("linkage is not (alpha,beta)-rigid");
  const int t = p.order();
  SpectrumReport full = spectrum(a, tol);
  SymMatrix sub = a.delete_vertices(p.vertex_set(a.order()));
  SpectrumReport subrep = spectrum(sub, tol);

  double scale = 1.0;
  for (double v : full.values) scale = std::max(scale, std::abs(v));
  double window = 10 * tol * scale;

  MultiplicityReport rep;
  rep.holds = true;
  for (std::size_t i = 0; i < full.values.size(); ++i) {
    if (full.mults[i] <= t) continue;
    MultiplicityEntry e;
    e.lambda = full.values[i];
    e.mult_full = full.mults[i];
    e.mult_sub = 0;
    for (std::size_t j = 0; j < subrep.values.size(); ++j)
      if (std::abs(subrep.values[j] - e.lambda) <= window)
        e.mult_sub += subrep.mults[j];
    e.slack = e.mult_sub - (e.mult_full - t);
    e.holds = e.slack >= 0;
    rep.holds = rep.holds && e.holds;
    rep.entries.push_back(e);
  }
  return rep;
}

QBoundReport verify_q_bounds(const Graph& g, const SymMatrix& a, int t,
                             bool use_rsl, double tol, SearchBudget* budget) {
  if (!a.conforms_to(g))
    throw precondition_error("matrix does not fit the graph");
  SpectrumReport rep = spectrum(a, tol);
  QBoundReport r;
  r.t = t;
  r.sum_q = 0;
  for (int j = 1; j <= t; ++j)
    r.sum_q += (j <= int(rep.q.size())) ? rep.q[j - 1] : 0;
  ExtremalResult ext = use_rsl ? rigid_shortest_linkage_number(g, t, budget)
                               : rigid_linkage_number(g, t, budget);
  r.linkage_max = ext.value;
  r.exists = ext.exists;
  r.holds = r.sum_q >= ext.value;
  r.q_value = rep.q1();
  r.ceil_bound = ext.value > 0 ? (ext.value + t - 1) / t : 0;
  r.q_holds = r.q_value >= r.ceil_bound;
  return r;
}

TightSpectrumReport tight_rl_spectrum_check(const Graph& g, const SymMatrix& a,
                                            const Linkage& p, int t, double tol,
                                            SearchBudget* budget) {
  TightSpectrumReport rep;
  rep.preconditions_hold = true;
  rep.matches = false;

  SpectrumReport full = spectrum(a, tol);
  ExtremalResult rl = rigid_linkage_number(g, t, budget);
  int sum_q = 0;
  for (int j = 1; j <= t; ++j)
    sum_q += (j <= int(full.q.size())) ? full.q[j - 1] : 0;
  if (!rl.exists || rl.value != sum_q) {
    rep.preconditions_hold = false;
    rep.detail = "RL(t) does not meet sum of q_i";
    return rep;
  }
  if (p.order() != t || p.vertex_count() != rl.value) {
    rep.preconditions_hold = false;
    rep.detail = "linkage does not attain RL(t)";
    return rep;
  }
  if (!is_rigid_any_labeling(g, p, budget)) {
    rep.preconditions_hold = false;
    rep.detail = "linkage is not rigid";
    return rep;
  }

  for (std::size_t i = 0; i < full.values.size(); ++i)
    if (full.mults[i] > t)
      rep.expected.emplace_back(full.values[i], full.mults[i] - t);

  SymMatrix sub = a.delete_vertices(p.vertex_set(a.order()));
  if (sub.order() == 0) {
    rep.matches = rep.expected.empty();
    return rep;
  }
  SpectrumReport subrep = spectrum(sub, tol);
  for (std::size_t j = 0; j < subrep.values.size(); ++j)
    rep.got.emplace_back(subrep.values[j], subrep.mults[j]);

  double scale = 1.0;
  for (double v : full.values) scale = std::max(scale, std::abs(v));
  double window = 10 * tol * scale;
  if (rep.got.size() == rep.expected.size()) {
    rep.matches = true;
    for (std::size_t i = 0; i < rep.got.size(); ++i)
      if (std::abs(rep.got[i].first - rep.expected[i].first) > window ||
          rep.got[i].second != rep.expected[i].second)
        rep.matches = false;
  }
  return rep;
}

TkReport tk_relation_check(int k, double tol) {
  if (k < 2) throw precondition_error("tk check needs k >= 2");
  SymMatrix e = tk_e_matrix(k);
  SpectrumReport rep = spectrum(e, tol);

  TkReport r;
  r.k = k;
  r.mult_list = rep.m_desc;
  std::vector<int> expect = {3 * k + 2, 3 * k - 2, 3 * k - 3, 2, 2, 1, 1, 1};
  std::sort(expect.begin(), expect.end(), std::greater<int>());
  r.mult_list_ok = (rep.m_desc == expect);

  double lam_sum = 0;
  for (std::size_t i = 0; i < rep.values.size(); ++i)
    lam_sum += rep.values[i] * rep.mults[i];
  r.trace_residual = std::abs(e.trace() - lam_sum);

  r.holds = r.mult_list_ok && r.trace_residual <= tol * 10;
  if (k >= 3 && r.mult_list_ok) {
    // Group eigenvalues by their multiplicity class; ties only occur inside
    // classes with equal coefficients, so the relation is well defined.
    auto values_with_mult = [&](int m) {
      std::vector<double> out;
      for (std::size_t i = 0; i < rep.values.size(); ++i)
        if (rep.mults[i] == m) out.push_back(rep.values[i]);
      return out;
    };
    double l1 = values_with_mult(3 * k + 2).at(0);
    double l2 = values_with_mult(3 * k - 2).at(0);
    double l3 = values_with_mult(3 * k - 3).at(0);
    auto twos = values_with_mult(2);
    auto ones = values_with_mult(1);
    double lhs = l1 + 3 * l2 + 3 * l3;
    double rhs = 2 * twos.at(0) + 2 * twos.at(1) + ones.at(0) + ones.at(1) +
                 ones.at(2);
    r.relation_residual = std::abs(lhs - rhs);
    r.holds = r.holds && *r.relation_residual <= tol;
  }
  return r;
}

}  // namespace rl
