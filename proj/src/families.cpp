#include "rl/families.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "rl/errors.hpp"

namespace rl {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph path_graph(int n) {
  EdgeList e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw invalid_input("cycle needs n >= 3");
  EdgeList e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  EdgeList e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw invalid_input("complete_bipartite needs m,n >= 1");
  EdgeList e;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) e.emplace_back(i, m + j);
  return Graph(m + n, e);
}

Graph hypercube(int n) {
  if (n < 1) throw invalid_input("hypercube needs n >= 1");
  if (n > 20) throw invalid_input("hypercube too large");
  int size = 1 << n;
  EdgeList e;
  for (int u = 0; u < size; ++u)
    for (int b = 0; b < n; ++b) {
      int v = u ^ (1 << b);
      if (u < v) e.emplace_back(u + 1, v + 1);
    }
  return Graph(size, e);
}

Graph paw_graph() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Inner 4-cycle 1-2-3-4, middle ring 5..8 joined to two inner vertices each,
// pendant ring 9..12.
Graph mary_graph() {
  return Graph(12, {{1, 2}, {2, 3}, {3, 4}, {4, 1},
                    {1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 8},
                    {4, 8}, {4, 5},
                    {5, 9}, {6, 10}, {7, 11}, {8, 12}});
}

// Bottom rail 1..5, top rail 6..9, extra vertex 10 hanging off the left end.
Graph seth_graph() {
  return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                    {6, 7}, {7, 8}, {8, 9},
                    {1, 6}, {1, 10}, {5, 9}, {3, 9}, {3, 7},
                    {6, 10}, {2, 10}});
}

// Center 1 with arms 2, 3, 4; arms 2 and 3 carry two 2-vertex legs each,
// arm 4 carries one 2-vertex leg and one pendant.
Graph whirl_graph() {
  return Graph(15, {{1, 2}, {1, 3}, {1, 4},
                    {2, 5}, {5, 6}, {2, 7}, {7, 8},
                    {3, 9}, {9, 10}, {3, 11}, {11, 12},
                    {4, 13}, {13, 14}, {4, 15}});
}

// k claws sharing one identified leaf: common vertex 1, claw centers
// 2..k+1, two remaining leaves per center.
Graph hk_graph(int k) {
  if (k < 1) throw invalid_input("hk needs k >= 1");
  EdgeList e;
  for (int j = 0; j < k; ++j) {
    int c = 2 + j;
    e.emplace_back(1, c);
    e.emplace_back(c, k + 2 + 2 * j);
    e.emplace_back(c, k + 3 + 2 * j);
  }
  return Graph(3 * k + 1, e);
}

// Center 1, level-1 vertices 2..4, k level-2 vertices per branch, two
// pendant leaves per level-2 vertex; 9k+4 vertices in total.
Graph tk_graph(int k) {
  if (k < 1) throw invalid_input("tk needs k >= 1");
  EdgeList e;
  int level2_base = 5;
  int level3_base = 5 + 3 * k;
  for (int b = 0; b < 3; ++b) {
    int arm = 2 + b;
    e.emplace_back(1, arm);
    for (int j = 0; j < k; ++j) {
      int mid = level2_base + b * k + j;
      e.emplace_back(arm, mid);
      int m = b * k + j;
      e.emplace_back(mid, level3_base + 2 * m);
      e.emplace_back(mid, level3_base + 2 * m + 1);
    }
  }
  return Graph(9 * k + 4, e);
}

// Star center 1, three arms, two leaves per arm.
Graph bftree_graph() {
  return Graph(10, {{1, 2}, {1, 3}, {1, 4},
                    {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9}, {4, 10}});
}

Graph xx_graph() {
  return Graph(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6},
                   {1, 5}, {3, 5}, {2, 4}, {2, 6}});
}

Graph x_graph() { return Graph(4, {{1, 2}, {3, 4}, {1, 4}, {2, 3}}); }

void need_params(const FamilySpec& s, std::size_t k) {
  if (s.params.size() != k)
    throw invalid_input("family " + family_name(s.family) + " expects " +
                        std::to_string(k) + " parameter(s)");
}

}  // namespace

Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
      need_params(spec, 1);
      if (spec.params[0] < 1) throw invalid_input("path needs n >= 1");
      return path_graph(spec.params[0]);
    case Family::cycle:
      need_params(spec, 1);
      return cycle_graph(spec.params[0]);
    case Family::complete:
      need_params(spec, 1);
      if (spec.params[0] < 1) throw invalid_input("complete needs n >= 1");
      return complete_graph(spec.params[0]);
    case Family::complete_bipartite:
      need_params(spec, 2);
      return complete_bipartite(spec.params[0], spec.params[1]);
    case Family::hypercube:
      need_params(spec, 1);
      return hypercube(spec.params[0]);
    case Family::paw:
      need_params(spec, 0);
      return paw_graph();
    case Family::mary:
      need_params(spec, 0);
      return mary_graph();
    case Family::seth:
      need_params(spec, 0);
      return seth_graph();
    case Family::whirl:
      need_params(spec, 0);
      return whirl_graph();
    case Family::hk:
      need_params(spec, 1);
      return hk_graph(spec.params[0]);
    case Family::tk:
      need_params(spec, 1);
      return tk_graph(spec.params[0]);
    case Family::bftree:
      need_params(spec, 0);
      return bftree_graph();
    case Family::xx:
      need_params(spec, 0);
      return xx_graph();
    case Family::x:
      need_params(spec, 0);
      return x_graph();
  }
  throw invalid_input("unknown family");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw precondition_error("product factors must be nonempty");
  const int hn = h.order();
  auto id = [hn](int u, int v) { return (u - 1) * hn + v; };
  EdgeList e;
  for (int u = 1; u <= g.order(); ++u)
    for (auto [a, b] : h.edges()) e.emplace_back(id(u, a), id(u, b));
  for (auto [a, b] : g.edges())
    for (int v = 1; v <= hn; ++v) e.emplace_back(id(a, v), id(b, v));
  return Graph(g.order() * hn, e);
}

namespace {

const std::map<std::string, Family>& name_table() {
  static const std::map<std::string, Family> table = {
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"complete", Family::complete},
      {"complete_bipartite", Family::complete_bipartite},
      {"hypercube", Family::hypercube},
      {"paw", Family::paw},
      {"mary", Family::mary},
      {"seth", Family::seth},
      {"whirl", Family::whirl},
      {"hk", Family::hk},
      {"tk", Family::tk},
      {"bftree", Family::bftree},
      {"xx", Family::xx},
      {"x", Family::x},
  };
  return table;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  std::string name = text;
  std::vector<int> params;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        params.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw invalid_input("bad family parameter: " + item);
      }
    }
  }
  auto it = name_table().find(name);
  if (it == name_table().end()) throw invalid_input("unknown family: " + name);
  return FamilySpec{it->second, params};
}

std::string family_name(Family f) {
  for (const auto& [name, fam] : name_table())
    if (fam == f) return name;
  return "?";
}

std::string spec_name(const FamilySpec& spec) {
  std::string out = family_name(spec.family);
  for (std::size_t i = 0; i < spec.params.size(); ++i)
    out += (i ? "," : ":") + std::to_string(spec.params[i]);
  return out;
}

std::vector<std::string> family_catalog() {
  return {
      "path:n            path on n vertices",
      "cycle:n           cycle on n vertices (n >= 3)",
      "complete:n        complete graph K_n",
      "complete_bipartite:m,n",
      "hypercube:n       n-dimensional hypercube Q_n",
      "paw               triangle with a pendant vertex",
      "mary              three nested 4-rings, 12 vertices",
      "seth              two rails with crossing ties, 10 vertices",
      "whirl             generalized 3-whirl tree, 15 vertices",
      "hk:k              k claws with one leaf identified, 3k+1 vertices",
      "tk:k              claw of hk branches, 9k+4 vertices",
      "bftree            double star on 10 vertices",
      "xx                6-vertex crossing-rung fixture",
      "x                 4-vertex crossing-rung fixture",
  };
}

SymMatrix whirl_fixture_matrix() {
  Graph w = whirl_graph();
  SymMatrix a = SymMatrix::zero_floating(15);
  for (auto [i, j] : w.edges()) a.set_value(i, j, 1.0);
  // Short arm reweighted so the arm spectrum lines up with the long arms'
  // symmetric eigenvalues {0, +-sqrt(3)} and shares eigenvalue 1 with an
  // eigenvector vanishing at the attachment vertex.
  a.set_value(1, 4, 2.0);
  a.set_value(14, 13, std::sqrt(1.5));
  a.set_value(13, 4, std::sqrt(0.75));
  a.set_value(4, 15, std::sqrt(0.5));
  a.set_value(1, 1, 1.0);
  a.set_value(13, 13, -0.5);
  a.set_value(4, 4, 0.5);
  a.set_value(15, 15, 1.0);
  return a;
}

SymMatrix balanced_bipartite_flat_matrix(int n) {
  // Off-diagonal block with orthogonal equal-norm all-nonzero rows, so the
  // square of the matrix is a multiple of the identity.
  std::vector<std::vector<int>> block;
  if (n == 3) {
    block = {{1, 2, 2}, {2, 1, -2}, {2, -2, 1}};
  } else if (n == 4) {
    block = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  } else {
    throw invalid_input("flat matrix fixture exists for n = 3 and 4 only");
  }
  SymMatrix a = SymMatrix::zero_exact(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.set(i + 1, n + j + 1, Rat(block[i][j]));
  return a;
}

SymMatrix tk_e_matrix(int k) {
  if (k < 2) throw precondition_error("tk matrix fixture needs k >= 2");
  Graph t = tk_graph(k);
  SymMatrix a = SymMatrix::zero_floating(t.order());
  for (auto [i, j] : t.edges()) a.set_value(i, j, 1.0);
  a.set_value(1, 1, std::sqrt(2.0));
  return a;
}

std::vector<FixtureRecord> fixture_corpus() {
  std::vector<FixtureRecord> out;
  auto add_int = [&](std::string id, FamilySpec g, Quantity q, int t,
                     long expected, Source s, std::string note) {
    FixtureRecord r;
    r.id = std::move(id);
    r.graph = std::move(g);
    r.quantity = q;
    r.t = t;
    r.expected = expected;
    r.source = s;
    r.note = std::move(note);
    out.push_back(std::move(r));
  };

  add_int("paw.z", {Family::paw, {}}, Quantity::z_number, 0, 2, Source::known,
          "pair {2,3} forces the paw");
  add_int("mary.z", {Family::mary, {}}, Quantity::z_number, 0, 4, Source::known,
          "{4,9,10,11} is a minimum forcing set");
  add_int("seth.z", {Family::seth, {}}, Quantity::z_number, 0, 3, Source::known,
          "two rails plus the hanging vertex");

  for (int t = 1; t <= 4; ++t)
    add_int("whirl.rl." + std::to_string(t), {Family::whirl, {}},
            Quantity::rl_number, t, std::vector<long>{7, 12, 14, 15}[t - 1],
            Source::known, "whirl tree rigid linkage numbers");

  add_int("seth.rsl.1", {Family::seth, {}}, Quantity::rsl_number, 1, 4,
          Source::known, "unique shortest 4-vertex path 1-2-3-4");
  add_int("seth.rsl.2", {Family::seth, {}}, Quantity::rsl_number, 2, 9,
          Source::known, "rails from {1,6} to {5,9}");

  for (int n = 2; n <= 7; ++n)
    for (int t = 1; t <= n - 1; ++t)
      add_int("complete" + std::to_string(n) + ".rsl." + std::to_string(t),
              {Family::complete, {n}}, Quantity::rsl_number, t, t + 1,
              Source::known, "complete graph closed form t+1");

  for (int n = 3; n <= 9; ++n) {
    add_int("cycle" + std::to_string(n) + ".rsl.1", {Family::cycle, {n}},
            Quantity::rsl_number, 1, (n + 1) / 2, Source::known,
            "half arc of the cycle");
    add_int("cycle" + std::to_string(n) + ".rsl.2", {Family::cycle, {n}},
            Quantity::rsl_number, 2, n, Source::known,
            "long arc plus the leftover vertex");
  }

  for (int m = 1; m <= 4; ++m)
    for (int n = std::max(m, 2); m + n <= 8; ++n) {
      std::string base = "kb" + std::to_string(m) + std::to_string(n);
      long rsl1 = (m >= 2) ? 2 : 3;
      add_int(base + ".rsl.1", {Family::complete_bipartite, {m, n}},
              Quantity::rsl_number, 1, rsl1, Source::known,
              "complete bipartite closed form");
      for (int t = 2; t <= m + n - 2; ++t)
        add_int(base + ".rsl." + std::to_string(t),
                {Family::complete_bipartite, {m, n}}, Quantity::rsl_number, t,
                t + 2, Source::known, "complete bipartite closed form t+2");
    }

  for (int t = 1; t <= 4; ++t)
    add_int("q3.rsl." + std::to_string(t), {Family::hypercube, {3}},
            Quantity::rsl_number, t, 2 * t, Source::known,
            "cube closed form 2t");

  // Spectra.
  for (int n = 3; n <= 6; ++n) {
    FixtureRecord r;
    r.id = "complete" + std::to_string(n) + ".spectrum";
    r.graph = {Family::complete, {n}};
    r.quantity = Quantity::spectrum;
    r.expected_spectrum = {{-1.0, n - 1}, {double(n - 1), 1}};
    r.source = Source::known;
    r.note = "adjacency of the complete graph";
    out.push_back(std::move(r));
  }
  for (int k = 2; k <= 5; ++k) {
    FixtureRecord r;
    r.id = "hk" + std::to_string(k) + ".spectrum";
    r.graph = {Family::hk, {k}};
    r.quantity = Quantity::spectrum;
    r.expected_spectrum = {{-std::sqrt(double(k + 2)), 1},
                           {-std::sqrt(2.0), k - 1},
                           {0.0, k + 1},
                           {std::sqrt(2.0), k - 1},
                           {std::sqrt(double(k + 2)), 1}};
    r.source = Source::known;
    r.note = "identified claws adjacency spectrum";
    out.push_back(std::move(r));
  }
  for (int n = 3; n <= 4; ++n) {
    FixtureRecord r;
    r.id = "knn" + std::to_string(n) + ".spectrum";
    r.graph = {Family::complete_bipartite, {n, n}};
    r.quantity = Quantity::spectrum;
    r.expected_spectrum = {{-double(n), 1}, {0.0, 2 * n - 2}, {double(n), 1}};
    r.source = Source::trivial;
    r.note = "balanced complete bipartite adjacency";
    out.push_back(std::move(r));
  }
  for (int k = 2; k <= 3; ++k) {
    FixtureRecord r;
    r.id = "tk" + std::to_string(k) + ".mults";
    r.graph = {Family::tk, {k}};
    r.quantity = Quantity::multiplicity_list;
    r.expected_mults = {3 * k + 2, 3 * k - 2, 3 * k - 3, 2, 2, 1, 1, 1};
    r.source = Source::known;
    r.note = "modified adjacency with sqrt(2) at the center";
    out.push_back(std::move(r));
  }
  {
    FixtureRecord r;
    r.id = "whirl.qlist";
    r.graph = {Family::whirl, {}};
    r.quantity = Quantity::multiplicity_list;
    r.expected_mults = {4, 3, 2, 2, 2, 1, 1};
    r.source = Source::derived;
    r.note = "constructed fixture matrix, q-list (7,5,2,1)";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rl
