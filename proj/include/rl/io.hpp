#ifndef RL_IO_HPP
#define RL_IO_HPP

#include <string>

#include "rl/graph.hpp"
#include "rl/matrix.hpp"

namespace rl {

// JSON form: { "n": int, "edges": [[i,j],...] } with 1-based endpoints.
Graph graph_from_json(const std::string& text);

// Plain text form: first line n, then one "i j" pair per line.
Graph graph_from_text(const std::string& text);

// Dispatch on the leading character; files starting with '{' are JSON.
Graph load_graph(const std::string& path);

std::string graph_to_json(const Graph& g);

// { "n": int, "entries": [[...], ...] }; entries are "p/q" strings, integers,
// or decimal floats.  All-rational input gets an exact backing.
SymMatrix matrix_from_json(const std::string& text);

SymMatrix load_matrix(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace rl

#endif
