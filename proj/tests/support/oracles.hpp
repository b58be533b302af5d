#ifndef RL_TEST_ORACLES_HPP
#define RL_TEST_ORACLES_HPP

// Independent re-derivations used as oracles.  These deliberately avoid the
// library's bitset routines: everything here works off explicit edge lists
// and plain integer arithmetic.

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "rl/graph.hpp"
#include "rl/matrix.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

// Flood fill over an explicit edge list.
inline std::vector<std::vector<int>> components(int n, const EdgeList& edges,
                                                const std::set<int>& removed) {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : edges) {
    if (removed.count(a) || removed.count(b)) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> comp(n + 1, -1);
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= n; ++v) {
    if (removed.count(v) || comp[v] >= 0) continue;
    std::vector<int> stack{v}, members;
    comp[v] = int(out.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = comp[v];
          stack.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<int> boundary(const EdgeList& edges, const std::set<int>& x) {
  std::set<int> out;
  for (auto [a, b] : edges) {
    if (x.count(a) && !x.count(b)) out.insert(b);
    if (x.count(b) && !x.count(a)) out.insert(a);
  }
  return out;
}

// Chord scan: p is an induced path iff consecutive pairs are the only
// adjacent pairs among its vertices.
inline bool induced_path(const EdgeList& edges, const std::vector<int>& p) {
  std::set<std::pair<int, int>> es;
  for (auto [a, b] : edges) {
    es.insert({a, b});
    es.insert({b, a});
  }
  std::set<int> seen;
  for (int v : p)
    if (!seen.insert(v).second) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      bool adjacent = es.count({p[i], p[j]}) > 0;
      if (adjacent != (j == i + 1)) return false;
    }
  return true;
}

// Seeded Erdos-Renyi-style graph, deterministic across runs.
inline rl::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (double(rng() % 1000000) / 1000000.0 < p) edges.emplace_back(i, j);
  return rl::Graph(n, edges);
}

// Fraction-free Bareiss determinant over integers after clearing each row's
// denominators; a different algorithm and a different arithmetic path from
// the library's rational elimination.
inline rl::Rat bareiss_determinant(const rl::RatMatrix& m) {
  const int n = m.rows();
  if (n == 0) return rl::Rat(1);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpq_class scale(1);
  for (int i = 0; i < n; ++i) {
    mpz_class lcm(1);
    for (int j = 0; j < n; ++j) {
      mpz_class den = m.at(i + 1, j + 1).get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    for (int j = 0; j < n; ++j) {
      mpq_class scaled = m.at(i + 1, j + 1) * mpq_class(lcm);
      scaled.canonicalize();
      a[i][j] = scaled.get_num();
    }
    scale *= mpq_class(lcm);
  }

  mpz_class prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return rl::Rat(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  mpq_class det = mpq_class(a[n - 1][n - 1]) * sign / scale;
  det.canonicalize();
  return det;
}

}  // namespace oracle

#endif
