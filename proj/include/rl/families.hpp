#ifndef RL_FAMILIES_HPP
#define RL_FAMILIES_HPP

#include <string>
#include <vector>

#include "rl/graph.hpp"
#include "rl/matrix.hpp"

namespace rl {

// Named constructions used throughout the test corpus.  "mary" is the
// 12-vertex three-ring example, "seth" the 10-vertex two-rail example,
// "whirl" the 15-vertex generalized 3-whirl tree, "tk"/"hk" the identified
// claw trees, "bftree" the double star on 10 vertices, "xx"/"x" the small
// crossing-rung fixtures.
enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  hypercube,
  paw,
  mary,
  seth,
  whirl,
  hk,
  tk,
  bftree,
  xx,
  x,
};

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

Graph build(const FamilySpec& spec);

Graph cartesian_product(const Graph& g, const Graph& h);

// "cycle:5", "complete_bipartite:2,3", "paw".
FamilySpec parse_family(const std::string& text);
std::string family_name(Family f);
std::string spec_name(const FamilySpec& spec);
std::vector<std::string> family_catalog();

// Fixture matrices.

// Matrix on the whirl tree whose eigenvalue multiplicities are
// (4,3,2,2,2,1,1), so its q-list is (7,5,2,1).  Floating backing: three edge
// weights are square roots.
SymMatrix whirl_fixture_matrix();

// Matrix on K_{n,n} (n = 3 or 4) with two distinct eigenvalues of equal
// multiplicity, built from an orthogonal all-nonzero block.
SymMatrix balanced_bipartite_flat_matrix(int n);

// Adjacency of tk with the center diagonal entry replaced by sqrt(2).
SymMatrix tk_e_matrix(int k);

// Machine-readable expected values replayed by tests and verify-all.
enum class Quantity { z_number, rl_number, rsl_number, spectrum, multiplicity_list };

// known: value taken as given from prior work; trivial: immediate from the
// definitions; derived: frozen output of an independent computation.
enum class Source { known, trivial, derived };

struct FixtureRecord {
  std::string id;
  FamilySpec graph;
  Quantity quantity;
  int t = 0;                                           // rl/rsl order
  long expected = 0;                                   // integer quantities
  std::vector<std::pair<double, int>> expected_spectrum;  // (value, mult)
  std::vector<int> expected_mults;                     // multiplicity_list
  Source source;
  std::string note;
};

std::vector<FixtureRecord> fixture_corpus();

}  // namespace rl

#endif
