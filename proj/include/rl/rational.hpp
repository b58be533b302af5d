#ifndef RL_RATIONAL_HPP
#define RL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace rl {

using Rat = mpq_class;

// Accepts "p/q", plain integers, and decimal literals like "-0.25".
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& r);

}  // namespace rl

#endif
