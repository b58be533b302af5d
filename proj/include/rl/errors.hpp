#ifndef RL_ERRORS_HPP
#define RL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph/matrix input (bad edge list, asymmetric matrix, parse failure).
struct invalid_input : error {
  using error::error;
};

// An exhaustive search ran past its configured node budget.
struct budget_exceeded : error {
  using error::error;
};

// An operation was called outside its stated precondition.
struct precondition_error : error {
  using error::error;
};

// rl_apply was handed a move that is not currently legal.
struct illegal_move : error {
  using error::error;
};

// Eigenvalue gap fell inside the ambiguity band; multiplicities unreliable.
struct clustering_ambiguous : error {
  using error::error;
};

// The guided forcing construction stalled: the input linkage was not rigid.
struct not_rigid : error {
  using error::error;
};

}  // namespace rl

#endif
