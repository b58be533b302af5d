#ifndef RL_BUDGET_HPP
#define RL_BUDGET_HPP

#include <cstdint>

#include "rl/errors.hpp"

namespace rl {

// Node counter shared by the combinatorial searches.  Every search step calls
// tick(); exceeding the limit raises budget_exceeded instead of hanging.
class SearchBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;  // 1e8 nodes

  explicit SearchBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void tick(std::uint64_t cost = 1) {
    used_ += cost;
    if (used_ > limit_) throw budget_exceeded("search budget exhausted");
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace rl

#endif
