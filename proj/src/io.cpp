#include "rl/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rl/errors.hpp"

namespace rl {

using nlohmann::json;

Graph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw invalid_input("graph json needs fields n and edges");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw invalid_input("edge entries must be pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> nums;
  int x;
  while (in >> x) nums.push_back(x);
  in.clear();
  std::string junk;
  if (in >> junk) throw invalid_input("bad token in edge list: " + junk);
  if (nums.empty()) throw invalid_input("edge list must start with n");
  if (nums.size() % 2 == 0)
    throw invalid_input("dangling endpoint in edge list");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i + 1 < nums.size(); i += 2)
    edges.emplace_back(nums[i], nums[i + 1]);
  return Graph(nums[0], edges);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw invalid_input("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{')
    return graph_from_json(text);
  return graph_from_text(text);
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump();
}

SymMatrix matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad matrix json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw invalid_input("matrix json needs fields n and entries");
  int n = j["n"].get<int>();
  const auto& rows = j["entries"];
  if (int(rows.size()) != n) throw invalid_input("row count mismatch");

  bool exact = true;
  for (const auto& row : rows)
    for (const auto& cell : row)
      if (cell.is_number_float()) exact = false;

  SymMatrix a = exact ? SymMatrix::zero_exact(n) : SymMatrix::zero_floating(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[i - 1];
    if (int(row.size()) != n) throw invalid_input("column count mismatch");
    for (int k = 1; k <= n; ++k) {
      const auto& cell = row[k - 1];
      if (exact) {
        Rat v = cell.is_string() ? rat_from_string(cell.get<std::string>())
                                 : Rat(cell.get<long>());
        if (i <= k) a.set(i, k, v);
        else if (a.rat(k, i) != v) throw invalid_input("matrix not symmetric");
      } else {
        double v = cell.is_string()
                       ? rat_from_string(cell.get<std::string>()).get_d()
                       : cell.get<double>();
        if (i <= k) a.set_value(i, k, v);
        else if (a.value(k, i) != v) throw invalid_input("matrix not symmetric");
      }
    }
  }
  return a;
}

SymMatrix load_matrix(const std::string& path) {
  return matrix_from_json(read_file(path));
}

}  // namespace rl
