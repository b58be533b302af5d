#ifndef RL_LINKAGE_HPP
#define RL_LINKAGE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rl/budget.hpp"
#include "rl/graph.hpp"

namespace rl {

// Set of pairwise vertex-disjoint paths, kept in canonical form: each path
// oriented so its smaller endpoint comes first, paths sorted by first vertex.
// Two labelings of the same subgraph compare equal.
class Linkage {
 public:
  Linkage() = default;

  // Validates that every path is a path in g and that paths are disjoint.
  static Linkage from_paths(const Graph& g, std::vector<Path> paths);

  const std::vector<Path>& paths() const { return paths_; }
  int order() const { return int(paths_.size()); }

  int vertex_count() const;
  VertexSet vertex_set(int n) const;
  bool spanning(const Graph& g) const;

  // Path edges as (i, j), i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Linkage& o) const = default;
  auto operator<=>(const Linkage& o) const = default;

 private:
  std::vector<Path> paths_;
};

// Endpoint pairs, one per path; (v, v) for a one-vertex path.  Sorted.
using Pattern = std::vector<std::pair<int, int>>;

Pattern pattern_of(const Linkage& p);

struct EndpointLabeling {
  VertexSet alpha, beta;
};

// Does (alpha, beta) label p?  One-vertex paths must lie in both sets, each
// longer path must have one endpoint in alpha and the other in beta, and the
// sets must be used up exactly.
bool labels_linkage(const Linkage& p, const VertexSet& alpha,
                    const VertexSet& beta);

// All (alpha, beta)-linkages, deduplicated, in deterministic order.  Stops
// after max_count results when given; drops linkages with more than
// max_total_vertices vertices when given.
std::vector<Linkage> enumerate_linkages(
    const Graph& g, const VertexSet& alpha, const VertexSet& beta,
    std::optional<int> max_count = std::nullopt,
    std::optional<int> max_total_vertices = std::nullopt,
    SearchBudget* budget = nullptr);

// All linkages whose i-th path connects the i-th endpoint pair.  The visitor
// returns false to stop.  Shared engine behind the certification operations.
void for_each_pattern_linkage(const Graph& g, const Pattern& pairs,
                              SearchBudget& budget,
                              std::optional<int> max_total_vertices,
                              const std::function<bool(const Linkage&)>& emit);

// Every linkage of g (all patterns, all sizes, the empty linkage excluded).
void for_each_linkage(const Graph& g, SearchBudget& budget,
                      const std::function<bool(const Linkage&)>& emit);

// Is p the unique (alpha, beta)-linkage in g?
bool is_rigid(const Graph& g, const Linkage& p, const VertexSet& alpha,
              const VertexSet& beta, SearchBudget* budget = nullptr);

// Try all endpoint labelings of p (up to swapping alpha and beta); return a
// witnessing pair, or nothing.
std::optional<EndpointLabeling> is_rigid_any_labeling(
    const Graph& g, const Linkage& p, SearchBudget* budget = nullptr);

// Is p the only linkage in g with its pattern?
bool is_unique_linkage(const Graph& g, const Linkage& p,
                       SearchBudget* budget = nullptr);

// Unique and spanning.
bool is_vital(const Graph& g, const Linkage& p, SearchBudget* budget = nullptr);

// Result of an extremal search.  When no order-t rigid (shortest) linkage
// exists, value is 0 and exists is false.
struct ExtremalResult {
  int value = 0;
  bool exists = false;
  Linkage witness;
  VertexSet alpha, beta;
};

// RL_G(t): maximum number of vertices in an order-t rigid linkage.
ExtremalResult rigid_linkage_number(const Graph& g, int t,
                                    SearchBudget* budget = nullptr);

// Smallest |V(P)| over (alpha, beta)-linkages, or nothing if none exists.
std::optional<int> shortest_linkage_size(const Graph& g,
                                         const VertexSet& alpha,
                                         const VertexSet& beta,
                                         SearchBudget* budget = nullptr);

// Is p the unique (alpha, beta)-linkage attaining the minimum vertex count?
bool is_rigid_shortest(const Graph& g, const Linkage& p,
                       const VertexSet& alpha, const VertexSet& beta,
                       SearchBudget* budget = nullptr);

// RSL_G(t): maximum number of vertices in an order-t rigid shortest linkage.
ExtremalResult rigid_shortest_linkage_number(const Graph& g, int t,
                                             SearchBudget* budget = nullptr);

// t-subsets of {1..n} in colexicographic order.
std::vector<std::vector<int>> subsets_colex(int n, int t);

}  // namespace rl

#endif
