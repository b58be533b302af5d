#ifndef RL_GRAPH_HPP
#define RL_GRAPH_HPP

#include <utility>
#include <vector>

#include "rl/vertex_set.hpp"

namespace rl {

// A path is an ordered sequence of distinct vertices, consecutive ones
// adjacent in the host graph.  A single vertex is a valid path.
using Path = std::vector<int>;

// Simple undirected graph on vertices 1..n with per-vertex neighbor bitsets.
// Validated at construction; immutable afterwards and safe to share.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  VertexSet vertices() const { return VertexSet::full(n_); }

  // Edges as (i, j) with i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Label-sensitive equality; isomorphism is out of scope.
  bool operator==(const Graph& o) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;  // index 1..n, [0] unused
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // size old n+1; 0 where removed
  std::vector<int> new_to_old;  // size new n+1
};

// Connected components of g - removed, sorted by minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

// Vertices outside x with at least one neighbor in x.
VertexSet boundary(const Graph& g, const VertexSet& x);

// Subgraph induced on keep, with the relabeling maps.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Is the sequence a path in g (distinct vertices, consecutive adjacent)?
bool is_path(const Graph& g, const Path& p);

// Does p's vertex set induce exactly the path p (no chords)?
bool is_induced_path(const Graph& g, const Path& p);

// Is g itself a path graph (P_1 included, empty graph excluded)?
bool is_path_graph(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace rl

#endif
