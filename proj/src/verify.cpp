#include "rl/verify.hpp"

#include <cmath>
#include <sstream>

#include "rl/forcing.hpp"
#include "rl/linkage.hpp"
#include "rl/spectral.hpp"

namespace rl {

namespace {

std::string ints(const std::vector<int>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

ReplayResult replay_fixture(const FixtureRecord& r, SearchBudget& budget) {
  Graph g = build(r.graph);
  switch (r.quantity) {
    case Quantity::z_number: {
      int z = zero_forcing_number(g);
      return {z == int(r.expected), std::to_string(z)};
    }
    case Quantity::rl_number: {
      auto got = rigid_linkage_number(g, r.t, &budget);
      return {got.exists && got.value == int(r.expected),
              std::to_string(got.value)};
    }
    case Quantity::rsl_number: {
      auto got = rigid_shortest_linkage_number(g, r.t, &budget);
      return {got.exists && got.value == int(r.expected),
              std::to_string(got.value)};
    }
    case Quantity::spectrum: {
      auto rep = spectrum(adjacency_matrix(g), 1e-9);
      bool ok = rep.values.size() == r.expected_spectrum.size();
      if (ok)
        for (std::size_t i = 0; i < rep.values.size(); ++i)
          ok = ok &&
               std::abs(rep.values[i] - r.expected_spectrum[i].first) < 1e-8 &&
               rep.mults[i] == r.expected_spectrum[i].second;
      std::ostringstream out;
      out << "[";
      for (std::size_t i = 0; i < rep.values.size(); ++i)
        out << (i ? "," : "") << rep.values[i] << "^" << rep.mults[i];
      out << "]";
      return {ok, out.str()};
    }
    case Quantity::multiplicity_list: {
      SymMatrix a;
      if (r.graph.family == Family::tk)
        a = tk_e_matrix(r.graph.params.at(0));
      else if (r.graph.family == Family::whirl)
        a = whirl_fixture_matrix();
      else
        a = adjacency_matrix(g);
      auto rep = spectrum(a, 1e-8);
      return {rep.m_desc == r.expected_mults, ints(rep.m_desc)};
    }
  }
  return {false, "?"};
}

}  // namespace rl
