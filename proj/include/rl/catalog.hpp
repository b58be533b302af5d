#ifndef RL_CATALOG_HPP
#define RL_CATALOG_HPP

#include <cstdint>
#include <vector>

#include "rl/graph.hpp"

namespace rl {

// Edge bitmask of the canonically relabeled graph; equal keys mean isomorphic
// graphs.  Individualization-refinement search, minimum over discrete leaves.
// Limited to n <= 11 so the mask fits 64 bits.
std::uint64_t canonical_key(const Graph& g);

// All graphs on n vertices up to isomorphism, canonical representatives in
// increasing key order.  Built by vertex augmentation; results are cached.
const std::vector<Graph>& all_graphs(int n);

std::vector<Graph> connected_graphs(int n);

}  // namespace rl

#endif
