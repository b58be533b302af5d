#ifndef RL_FORCING_HPP
#define RL_FORCING_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rl/budget.hpp"
#include "rl/graph.hpp"
#include "rl/linkage.hpp"

namespace rl {

// Snapshot of a forcing process.  Immutable value: rl_apply returns a new
// state.  The active set always has |B_0| members; activity is handed from
// the forcing vertex to the forced one.
struct ForcingState {
  VertexSet blue;
  VertexSet active;
  std::vector<std::pair<int, int>> forces;  // (u, w) in order performed

  bool operator==(const ForcingState& o) const {
    return blue == o.blue && active == o.active && forces == o.forces;
  }
};

ForcingState initial_state(const Graph& g, const VertexSet& b0);

// A legal next force under the rigid-linkage color change rule: component K
// of g - blue whose boundary holds no inactive blue vertex, an active u whose
// only white neighbor inside K is w.
struct RlMove {
  VertexSet component;
  int u = 0;
  int w = 0;
};

std::vector<RlMove> rl_moves(const Graph& g, const ForcingState& s);

ForcingState rl_apply(const Graph& g, const ForcingState& s, const RlMove& m);

// Plain zero forcing run to exhaustion with the deterministic tie-break
// (smallest forcing vertex, then smallest forced vertex).
struct ZResult {
  VertexSet blue;                           // derived set
  std::vector<std::pair<int, int>> forces;
};

ZResult z_closure(const Graph& g, const VertexSet& b0);

// Minimum size of a zero forcing set.  Exact subset search; graphs beyond
// the limit raise budget_exceeded.
int zero_forcing_number(const Graph& g, int max_n = 20);

// Depth-first walk of the nondeterministic process tree, memoized on
// (blue, active).  Without a goal, returns the maximal states (no legal
// moves); with one, every reachable state whose active set equals the goal.
// Deduplicated on (blue, active), deterministic order.
std::vector<ForcingState> rl_explore(const Graph& g, const VertexSet& b0,
                                     const std::optional<VertexSet>& goal =
                                         std::nullopt,
                                     SearchBudget* budget = nullptr);

// Minimum |B_0| from which some process colors everything blue.  Computed by
// its own reachability search, not by delegating to zero_forcing_number.
int rl_forcing_number(const Graph& g, SearchBudget* budget = nullptr);

struct ChainSet {
  Linkage chains;
  VertexSet start;  // B_0
  VertexSet end;    // final active set
};

ChainSet extract_chain_set(const Graph& g, const ForcingState& s);

// Chain sets of every process starting from b0, stopping anywhere (a process
// may stop while forces remain).  Memoized on the chain set itself, since
// distinct histories reaching one (blue, active) pair can carry different
// chains.
std::set<Linkage> rl_chain_sets(const Graph& g, const VertexSet& b0,
                                SearchBudget* budget = nullptr);

// Chain sets of complete zero forcing runs from b0, over all force orders.
std::set<Linkage> z_chain_sets(const Graph& g, const VertexSet& b0,
                               SearchBudget* budget = nullptr);

// Replays Z-closure force lists as RL-moves; used to check that any zero
// forcing process is a rigid linkage forcing process.
bool z_process_is_rl_process(const Graph& g, const VertexSet& b0,
                             const std::vector<std::pair<int, int>>& forces);

// Builds an RL-process with B_0 = alpha whose chain set is exactly p, forcing
// only along p and only when the forced vertex is the sole effective white
// neighbor of its forcer.  Raises not_rigid if the construction stalls.
ForcingState realize_rigid_linkage(const Graph& g, const Linkage& p,
                                   const VertexSet& alpha,
                                   const VertexSet& beta);

}  // namespace rl

#endif
