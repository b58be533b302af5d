#ifndef RL_SPECTRAL_HPP
#define RL_SPECTRAL_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rl/budget.hpp"
#include "rl/graph.hpp"
#include "rl/linkage.hpp"
#include "rl/matrix.hpp"

namespace rl {

// Reproducible matrix with the pattern of g: off-diagonal entries are dyadic
// rationals with magnitude in [1/2, 2] and random sign, diagonal entries
// dyadic in [-1, 1].  Same seed, same matrix.
SymMatrix sample_matrix(const Graph& g, std::uint64_t seed);

// Spanning subgraph split into a pattern-constrained linkage part and a
// remainder whose components are isolated vertices, edges, or cycles.
struct GeneralizedLinearSubgraph {
  Linkage linkage;
  VertexSet isolated;
  std::vector<std::pair<int, int>> edge_components;
  std::vector<std::vector<int>> cycles;  // length >= 3, canonical orientation

  int edge_count() const;   // |E(H)|, linkage edges included
  int cycle_count() const;  // c(H)
};

// Weight of the cycle part: product of diagonal entries over isolated
// vertices, squared entries over 2-vertex components, plain entries over
// cycle edges.
Rat weight_cycle_part(const SymMatrix& a, const GeneralizedLinearSubgraph& c);

// Product of entries over the linkage's path edges.
Rat weight_linkage(const SymMatrix& a, const Linkage& p);

// Streams every spanning H = P u C where P realizes the pattern
// {{alpha_i, beta_sigma(i)}} and C covers the rest.  sigma is a permutation
// of 0..t-1 over the sorted alpha/beta vectors.  With t = 0 this streams all
// generalized linear subgraphs of g.
void for_each_linear_subgraph(
    const Graph& g, const VertexSet& alpha, const VertexSet& beta,
    const std::vector<int>& sigma, SearchBudget& budget,
    const std::function<bool(const GeneralizedLinearSubgraph&)>& visit);

// det(A(alpha,beta)) through the combinatorial expansion
//   (-1)^{sum(alpha_i + beta_i)} * sum_sigma sgn(sigma)
//       * sum_H (-1)^{|E(H)|} (-2)^{c(H)} w(H).
// Exact; the matrix must conform to g and carry rational entries.
Rat cycledet(const Graph& g, const SymMatrix& a, const VertexSet& alpha,
             const VertexSet& beta, SearchBudget* budget = nullptr);

struct MinorIdentityReport {
  Rat lhs;   // det(A(alpha,beta))
  Rat rhs;   // w(P) * det(A(V(P)))
  int sign;  // lhs == sign * rhs; 0 when both vanish
  bool holds;
};

// |det(A(alpha,beta))| = |w(P)| * |det(A(V(P)))| for an (alpha,beta)-rigid p.
// The sign is reported, not predicted.
MinorIdentityReport rigid_minor_identity(const Graph& g, const SymMatrix& a,
                                         const Linkage& p,
                                         const VertexSet& alpha,
                                         const VertexSet& beta,
                                         SearchBudget* budget = nullptr);

// Eigenvalues clustered into multiplicities.  The threshold is relative to
// the spectral scale; a consecutive gap inside [tol, 10 tol) of that scale
// raises clustering_ambiguous instead of guessing.
struct SpectrumReport {
  std::vector<double> values;  // cluster means, ascending
  std::vector<int> mults;      // aligned with values
  std::vector<int> m_desc;     // multiplicities, non-increasing
  std::vector<int> q;          // q[i-1] = #eigenvalues with multiplicity >= i

  int q1() const { return q.empty() ? 0 : q[0]; }
};

SpectrumReport spectrum(const SymMatrix& a, double tol = 1e-9);

struct NullityReport {
  int null_full;
  int null_sub;
  int order;  // t
  int slack;  // null_sub - (null_full - t)
  bool holds;
};

// null(A(V(P))) >= null(A) - t, exact ranks over the rationals.
NullityReport verify_nullity_bound(const Graph& g, const SymMatrix& a,
                                   const Linkage& p, const VertexSet& alpha,
                                   const VertexSet& beta,
                                   SearchBudget* budget = nullptr);

struct MultiplicityEntry {
  double lambda;
  int mult_full;
  int mult_sub;
  int slack;
  bool holds;
};

struct MultiplicityReport {
  std::vector<MultiplicityEntry> entries;  // eigenvalues with mult > t
  bool holds;
};

// mult_{A(V(P))}(lambda) >= mult_A(lambda) - t for every eigenvalue.
MultiplicityReport verify_multiplicity_bound(const Graph& g, const SymMatrix& a,
                                             const Linkage& p,
                                             const VertexSet& alpha,
                                             const VertexSet& beta,
                                             double tol = 1e-9,
                                             SearchBudget* budget = nullptr);

struct QBoundReport {
  int t;
  int sum_q;        // q_1 + ... + q_t
  int linkage_max;  // RL(t) or RSL(t)
  bool exists;      // an order-t rigid (shortest) linkage exists
  bool holds;       // sum_q >= linkage_max
  int q_value;      // q_1
  int ceil_bound;   // ceil(linkage_max / t)
  bool q_holds;     // q_value >= ceil_bound
};

QBoundReport verify_q_bounds(const Graph& g, const SymMatrix& a, int t,
                             bool use_rsl, double tol = 1e-9,
                             SearchBudget* budget = nullptr);

struct TightSpectrumReport {
  bool preconditions_hold;  // RL(t) = sum q_i and |V(p)| = RL(t), p rigid
  std::string detail;
  std::vector<std::pair<double, int>> expected;  // (lambda, m - t), m > t
  std::vector<std::pair<double, int>> got;       // spectrum of A(V(p))
  bool matches;
};

// The spectrum of A(V(p)) must be { lambda^(m_lambda - t) : m_lambda > t }
// under the tightness hypothesis.
TightSpectrumReport tight_rl_spectrum_check(const Graph& g, const SymMatrix& a,
                                            const Linkage& p, int t,
                                            double tol = 1e-8,
                                            SearchBudget* budget = nullptr);

struct TkReport {
  int k;
  std::vector<int> mult_list;  // observed, non-increasing
  bool mult_list_ok;           // equals (3k+2, 3k-2, 3k-3, 2, 2, 1, 1, 1)
  std::optional<double> relation_residual;  // k >= 3 only
  double trace_residual;
  bool holds;
};

// Builds the modified adjacency matrix of tk and checks its multiplicity
// list, the eigenvalue linear relation (k >= 3), and the trace identity.
TkReport tk_relation_check(int k, double tol = 1e-8);

// Conjugate partition of a non-increasing multiplicity list.
std::vector<int> conjugate_partition(const std::vector<int>& m_desc);

}  // namespace rl

#endif
