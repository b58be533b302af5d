#ifndef RL_VERIFY_HPP
#define RL_VERIFY_HPP

#include <string>

#include "rl/budget.hpp"
#include "rl/families.hpp"

namespace rl {

struct ReplayResult {
  bool ok;
  std::string got;  // printable form of the computed value
};

// Recomputes the quantity a fixture record pins and compares.  Shared by the
// command-line corpus driver and the tests (which also feed it corrupted
// records to prove mismatches surface).
ReplayResult replay_fixture(const FixtureRecord& r, SearchBudget& budget);

}  // namespace rl

#endif
