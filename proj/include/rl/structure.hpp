#ifndef RL_STRUCTURE_HPP
#define RL_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "rl/budget.hpp"
#include "rl/graph.hpp"
#include "rl/linkage.hpp"

namespace rl {

struct TreeDecomposition {
  Graph tree;                   // on bag indices 1..k
  std::vector<VertexSet> bags;  // bags[0] unused, bags[i] for tree vertex i
};

// All three tree-decomposition axioms: vertex cover, edge cover, and
// connectedness of the bags containing each vertex.
bool valid_decomposition(const Graph& g, const TreeDecomposition& td);

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over elimination orderings, with a
// witnessing decomposition validated against the axioms.
TreewidthResult treewidth_exact(const Graph& g, int max_n = 10);

// For a spanning rigid linkage p of order t: does tw(g) <= t hold?
bool check_tw_bound(const Graph& g, const Linkage& p, int max_n = 10,
                    SearchBudget* budget = nullptr);

// Decided through Z(G) = 2.  Raises precondition_error when g is a path,
// which the characterization excludes.
bool is_two_parallel_paths(const Graph& g);

// Edges off the linkage with both endpoints in a single path.
std::vector<std::pair<int, int>> linkage_chords(const Graph& g,
                                                const Linkage& p);

// The remaining non-path edges.
std::vector<std::pair<int, int>> linkage_rungs(const Graph& g,
                                               const Linkage& p);

// Does the chordless order-2 labeled linkage admit the crossing-rung minor
// that obstructs rigidity?  Scans rung pairs per the constructive test: rungs
// (x1, y2) and (y1, x2) with x1 before y1 on the first path and x2 before y2
// on the second, positions counted from the alpha ends.
bool has_x_minor(const Graph& g, const Linkage& p, const VertexSet& alpha,
                 const VertexSet& beta);

}  // namespace rl

#endif
