// rllab: rigid-linkage forcing, linkage certification, and eigenvalue
// multiplicity bound verification on small graphs.
//
// Exit codes: 0 verified/success, 1 property violation, 2 search budget
// exhausted, 3 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rl/catalog.hpp"
#include "rl/errors.hpp"
#include "rl/families.hpp"
#include "rl/forcing.hpp"
#include "rl/io.hpp"
#include "rl/linkage.hpp"
#include "rl/spectral.hpp"
#include "rl/structure.hpp"
#include "rl/verify.hpp"

using nlohmann::json;
using namespace rl;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBudget = 2;
constexpr int kBadInput = 3;

struct Options {
  std::string graph_file;
  std::string family;
  std::string output;
  std::uint64_t budget = SearchBudget::kDefaultLimit;
  std::uint64_t seed = 0;
};

std::uint64_t env_budget() {
  const char* s = std::getenv("RLLAB_BUDGET");
  if (!s) return SearchBudget::kDefaultLimit;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw invalid_input("RLLAB_BUDGET is not a number");
  }
}

void add_common(CLI::App* cmd, Options& opt, bool graph_needed = true) {
  if (graph_needed) {
    cmd->add_option("--graph", opt.graph_file, "graph file (json or edge list)");
    cmd->add_option("--family", opt.family, "family spec, e.g. cycle:5");
  }
  cmd->add_option("--output", opt.output, "write the report here instead of stdout");
  cmd->add_option("--budget", opt.budget, "search node budget");
  cmd->add_option("--seed", opt.seed, "base seed for sampled matrices");
}

Graph resolve_graph(const Options& opt) {
  if (!opt.graph_file.empty() && !opt.family.empty())
    throw invalid_input("give either --graph or --family, not both");
  if (!opt.graph_file.empty()) return load_graph(opt.graph_file);
  if (!opt.family.empty()) return build(parse_family(opt.family));
  throw invalid_input("a graph is required (--graph or --family)");
}

json graph_source(const Options& opt) {
  json j;
  if (!opt.family.empty()) j["family"] = opt.family;
  if (!opt.graph_file.empty()) j["file"] = opt.graph_file;
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw invalid_input("bad vertex list: " + text);
    }
  }
  return out;
}

std::vector<Path> parse_paths(const std::string& text) {
  std::vector<Path> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(parse_int_list(part));
  return out;
}

json vec_json(const VertexSet& s) { return json(s.to_vector()); }

json linkage_json(const Linkage& p) {
  json out = json::array();
  for (const auto& path : p.paths()) out.push_back(path);
  return out;
}

json state_json(const ForcingState& s) {
  return json{{"blue", vec_json(s.blue)}, {"active", vec_json(s.active)}};
}

void emit(const Options& opt, const json& report) {
  if (opt.output.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream f(opt.output);
    if (!f) throw invalid_input("cannot write " + opt.output);
    f << report.dump(2) << "\n";
  }
}

json certificate(const json& query, long value, const json& witness,
                 bool exhaustive) {
  return json{{"query", query},
              {"value", value},
              {"witness", witness},
              {"exhaustive", exhaustive}};
}

json witness_json(const ExtremalResult& r) {
  if (!r.exists) return nullptr;
  return json{{"alpha", vec_json(r.alpha)},
              {"beta", vec_json(r.beta)},
              {"paths", linkage_json(r.witness)}};
}

// force --rule z|rl --initial ... [--goal ...]
int run_force(const Options& opt, const std::string& rule,
              const std::string& initial, const std::string& goal) {
  Graph g = resolve_graph(opt);
  VertexSet b0 = VertexSet::of(g.order(), parse_int_list(initial));
  json rep;
  rep["config"] = {{"command", "force"},
                   {"graph", graph_source(opt)},
                   {"rule", rule},
                   {"initial", parse_int_list(initial)}};
  SearchBudget budget(opt.budget);

  if (rule == "z") {
    auto r = z_closure(g, b0);
    rep["forces"] = r.forces;
    rep["derived_set"] = vec_json(r.blue);
    ForcingState s = initial_state(g, b0);
    json steps = json::array();
    steps.push_back(state_json(s));
    for (auto [u, w] : r.forces) {
      s.blue.add(w);
      s.active.remove(u);
      s.active.add(w);
      s.forces.emplace_back(u, w);
      steps.push_back(state_json(s));
    }
    rep["steps"] = steps;
    rep["chains"] = linkage_json(extract_chain_set(g, s).chains);
    emit(opt, rep);
    return kOk;
  }
  if (rule != "rl") throw invalid_input("--rule must be z or rl");

  std::optional<VertexSet> goal_set;
  if (!goal.empty()) {
    rep["config"]["goal"] = parse_int_list(goal);
    goal_set = VertexSet::of(g.order(), parse_int_list(goal));
  }
  auto terminals = rl_explore(g, b0, goal_set, &budget);
  if (terminals.empty()) {
    rep["trace"] = nullptr;
  } else {
    const ForcingState& pick = terminals.front();
    json steps = json::array();
    ForcingState s = initial_state(g, b0);
    steps.push_back(state_json(s));
    for (auto [u, w] : pick.forces) {
      for (const auto& m : rl_moves(g, s))
        if (m.u == u && m.w == w) {
          s = rl_apply(g, s, m);
          break;
        }
      steps.push_back(state_json(s));
    }
    rep["trace"] = {{"forces", pick.forces},
                    {"steps", steps},
                    {"chains", linkage_json(extract_chain_set(g, pick).chains)}};
  }
  json terms = json::array();
  for (const auto& t : terminals)
    terms.push_back({{"blue", vec_json(t.blue)},
                     {"active", vec_json(t.active)},
                     {"forces", t.forces},
                     {"size", t.blue.count()}});
  rep["terminal_states"] = terms;
  emit(opt, rep);
  return kOk;
}

int run_certify(const Options& opt, const std::string& property,
                const std::string& paths, const std::string& alpha,
                const std::string& beta) {
  Graph g = resolve_graph(opt);
  SearchBudget budget(opt.budget);
  json query{{"command", "certify"},
             {"graph", graph_source(opt)},
             {"property", property}};

  if (property == "two-parallel-paths") {
    bool v = is_two_parallel_paths(g);
    emit(opt, certificate(query, v, nullptr, true));
    return kOk;
  }

  Linkage p = Linkage::from_paths(g, parse_paths(paths));
  query["paths"] = linkage_json(p);
  VertexSet a(g.order()), b(g.order());
  bool have_ab = !alpha.empty() && !beta.empty();
  if (have_ab) {
    a = VertexSet::of(g.order(), parse_int_list(alpha));
    b = VertexSet::of(g.order(), parse_int_list(beta));
    query["alpha"] = vec_json(a);
    query["beta"] = vec_json(b);
  }

  bool value = false;
  json witness = nullptr;
  if (property == "rigid") {
    if (have_ab) {
      value = is_rigid(g, p, a, b, &budget);
    } else {
      auto lab = is_rigid_any_labeling(g, p, &budget);
      value = lab.has_value();
      if (lab)
        witness = {{"alpha", vec_json(lab->alpha)}, {"beta", vec_json(lab->beta)}};
    }
  } else if (property == "unique") {
    value = is_unique_linkage(g, p, &budget);
  } else if (property == "vital") {
    value = is_vital(g, p, &budget);
  } else if (property == "rigid-shortest") {
    if (!have_ab) throw invalid_input("rigid-shortest needs --alpha and --beta");
    value = is_rigid_shortest(g, p, a, b, &budget);
  } else if (property == "x-minor") {
    if (!have_ab) throw invalid_input("x-minor needs --alpha and --beta");
    value = has_x_minor(g, p, a, b);
  } else {
    throw invalid_input("unknown property: " + property);
  }
  emit(opt, certificate(query, value, witness, true));
  return kOk;
}

int run_extremal(const Options& opt, int t, bool rsl) {
  Graph g = resolve_graph(opt);
  SearchBudget budget(opt.budget);
  auto r = rsl ? rigid_shortest_linkage_number(g, t, &budget)
               : rigid_linkage_number(g, t, &budget);
  json query{{"command", rsl ? "rsl-number" : "rl-number"},
             {"graph", graph_source(opt)},
             {"t", t}};
  json rep = certificate(query, r.value, witness_json(r), true);
  rep["exists"] = r.exists;
  emit(opt, rep);
  return kOk;
}

int run_z_number(const Options& opt) {
  Graph g = resolve_graph(opt);
  json query{{"command", "z-number"}, {"graph", graph_source(opt)}};
  int z = zero_forcing_number(g);
  emit(opt, certificate(query, z, nullptr, true));
  return kOk;
}

int run_det_expand(const Options& opt, const std::string& matrix_file,
                   bool use_seed, const std::string& alpha,
                   const std::string& beta) {
  Graph g = resolve_graph(opt);
  SymMatrix a = matrix_file.empty() ? sample_matrix(g, opt.seed)
                                    : load_matrix(matrix_file);
  if (!matrix_file.empty() && !a.exact())
    throw invalid_input("determinant expansion needs rational entries");
  (void)use_seed;
  SearchBudget budget(opt.budget);
  VertexSet av = VertexSet::of(g.order(), parse_int_list(alpha));
  VertexSet bv = VertexSet::of(g.order(), parse_int_list(beta));
  Rat value = cycledet(g, a, av, bv, &budget);
  Rat direct = a.minor_matrix(av, bv).determinant();
  json rep;
  rep["config"] = {{"command", "det-expand"},
                   {"graph", graph_source(opt)},
                   {"matrix", matrix_file.empty() ? json{{"seed", opt.seed}}
                                                  : json{{"file", matrix_file}}},
                   {"alpha", parse_int_list(alpha)},
                   {"beta", parse_int_list(beta)}};
  rep["value"] = rat_to_string(value);
  rep["elimination_value"] = rat_to_string(direct);
  rep["agree"] = (value == direct);
  emit(opt, rep);
  return value == direct ? kOk : kViolation;
}

int run_spectra(const Options& opt, bool fixture, double tol) {
  json rep;
  rep["config"] = {{"command", "spectra"},
                   {"graph", graph_source(opt)},
                   {"fixture", fixture},
                   {"tol", tol}};
  SymMatrix a;
  if (fixture) {
    if (opt.family.empty())
      throw invalid_input("--fixture needs a --family");
    FamilySpec spec = parse_family(opt.family);
    if (spec.family == Family::whirl) {
      a = whirl_fixture_matrix();
    } else if (spec.family == Family::tk) {
      a = tk_e_matrix(spec.params.at(0));
    } else if (spec.family == Family::complete_bipartite &&
               spec.params.size() == 2 && spec.params[0] == spec.params[1]) {
      a = balanced_bipartite_flat_matrix(spec.params[0]);
    } else {
      throw invalid_input("no fixture matrix for this family");
    }
  } else {
    a = adjacency_matrix(resolve_graph(opt));
  }
  auto rep_spec = spectrum(a, tol);
  rep["values"] = rep_spec.values;
  rep["multiplicities"] = rep_spec.mults;
  rep["m_desc"] = rep_spec.m_desc;
  rep["q"] = rep_spec.q;
  emit(opt, rep);
  return kOk;
}

int run_verify_bounds(const Options& opt, int t, bool rsl, int seeds,
                      double tol) {
  Graph g = resolve_graph(opt);
  SearchBudget budget(opt.budget);
  json rep;
  rep["config"] = {{"command", "verify-bounds"}, {"graph", graph_source(opt)},
                   {"t", t},           {"rsl", rsl},
                   {"seeds", seeds},   {"seed", opt.seed},
                   {"tol", tol}};
  json runs = json::array();
  bool all_hold = true;
  for (int s = 0; s < seeds; ++s) {
    SymMatrix a = sample_matrix(g, opt.seed + std::uint64_t(s));
    auto qb = verify_q_bounds(g, a, t, rsl, tol, &budget);
    all_hold = all_hold && qb.holds && qb.q_holds;
    runs.push_back({{"seed", opt.seed + std::uint64_t(s)},
                    {"sum_q", qb.sum_q},
                    {"linkage_max", qb.linkage_max},
                    {"holds", qb.holds},
                    {"q", qb.q_value},
                    {"ceil_bound", qb.ceil_bound},
                    {"q_holds", qb.q_holds}});
  }
  rep["runs"] = runs;
  rep["all_hold"] = all_hold;
  emit(opt, rep);
  return all_hold ? kOk : kViolation;
}

int run_treewidth(const Options& opt, int max_n) {
  Graph g = resolve_graph(opt);
  auto r = treewidth_exact(g, max_n);
  json rep;
  rep["config"] = {{"command", "treewidth"}, {"graph", graph_source(opt)}};
  rep["width"] = r.width;
  json bags = json::array();
  for (int i = 1; i <= r.decomposition.tree.order(); ++i)
    bags.push_back(vec_json(r.decomposition.bags[i]));
  rep["bags"] = bags;
  rep["tree_edges"] = r.decomposition.tree.edges();
  emit(opt, rep);
  return kOk;
}

int run_families_list(const Options& opt) {
  json rep = json::array();
  for (const auto& line : family_catalog()) rep.push_back(line);
  emit(opt, rep);
  return kOk;
}

int run_verify_all(const Options& opt, const std::string& filter) {
  json rep;
  rep["config"] = {{"command", "verify-all"}, {"filter", filter}};
  json records = json::array();
  bool all_ok = true;
  for (const auto& r : fixture_corpus()) {
    std::string fam = spec_name(r.graph);
    if (!filter.empty() && r.id.find(filter) == std::string::npos &&
        fam.find(filter) == std::string::npos)
      continue;
    SearchBudget budget(opt.budget);
    auto t0 = std::chrono::steady_clock::now();
    auto [ok, got] = replay_fixture(r, budget);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    all_ok = all_ok && ok;
    json expected;
    if (r.quantity == Quantity::spectrum) {
      expected = json::array();
      for (auto [v, m] : r.expected_spectrum) expected.push_back({v, m});
    } else if (r.quantity == Quantity::multiplicity_list) {
      expected = r.expected_mults;
    } else {
      expected = r.expected;
    }
    records.push_back({{"id", r.id},
                       {"graph", fam},
                       {"note", r.note},
                       {"expected", expected},
                       {"got", got},
                       {"ok", ok},
                       {"ms", ms}});
    std::cerr << (ok ? "pass  " : "FAIL  ") << r.id << "  (" << r.note << ")\n";
  }
  rep["records"] = records;
  rep["all_ok"] = all_ok;
  emit(opt, rep);
  return all_ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigid linkages, forcing processes, and eigenvalue bounds"};
  app.require_subcommand(1);

  Options opt;
  try {
    opt.budget = env_budget();
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }

  std::string rule = "rl", initial, goal;
  auto* force = app.add_subcommand("force", "run a forcing process");
  add_common(force, opt);
  force->add_option("--rule", rule, "z or rl");
  force->add_option("--initial", initial, "initial blue vertices 1,2,3")
      ->required();
  force->add_option("--goal", goal, "stop states whose active set equals this");

  std::string property, paths, alpha, beta;
  auto* certify = app.add_subcommand("certify", "certify a linkage property");
  add_common(certify, opt);
  certify->add_option("--property", property)->required();
  certify->add_option("--paths", paths, "semicolon-separated paths: 1,2,3;4,5");
  certify->add_option("--alpha", alpha);
  certify->add_option("--beta", beta);

  int t = 1;
  auto* rl_num = app.add_subcommand("rl-number", "maximum order-t rigid linkage");
  add_common(rl_num, opt);
  rl_num->add_option("--t", t)->required();

  auto* rsl_num =
      app.add_subcommand("rsl-number", "maximum order-t rigid shortest linkage");
  add_common(rsl_num, opt);
  rsl_num->add_option("--t", t)->required();

  auto* z_num = app.add_subcommand("z-number", "zero forcing number");
  add_common(z_num, opt);

  std::string matrix_file;
  auto* det = app.add_subcommand("det-expand", "combinatorial minor expansion");
  add_common(det, opt);
  det->add_option("--matrix", matrix_file, "matrix json file");
  det->add_option("--alpha", alpha, "deleted rows");
  det->add_option("--beta", beta, "deleted columns");

  bool fixture = false;
  double tol = 1e-9;
  auto* spectra = app.add_subcommand("spectra", "eigenvalues with multiplicities");
  add_common(spectra, opt);
  spectra->add_flag("--fixture", fixture, "use the family's fixture matrix");
  spectra->add_option("--tol", tol, "clustering tolerance");

  bool use_rsl = false;
  int seeds = 10;
  auto* vb = app.add_subcommand("verify-bounds", "q-sum lower bounds");
  add_common(vb, opt);
  vb->add_option("--t", t)->required();
  vb->add_flag("--rsl", use_rsl, "use the shortest-linkage number");
  vb->add_option("--seeds", seeds, "number of sampled matrices");
  vb->add_option("--tol", tol);

  int max_n = 10;
  auto* tw = app.add_subcommand("treewidth", "exact treewidth");
  add_common(tw, opt);
  tw->add_option("--max-n", max_n, "size guard for the subset table");

  auto* fam = app.add_subcommand("families", "list the graph catalog");
  add_common(fam, opt, false);
  fam->allow_extras();  // accepts the word "list"

  std::string filter;
  auto* va = app.add_subcommand("verify-all", "replay the fixture corpus");
  add_common(va, opt, false);
  va->add_option("--filter", filter, "substring filter on record id or family");

  CLI11_PARSE(app, argc, argv);

  try {
    if (force->parsed()) return run_force(opt, rule, initial, goal);
    if (certify->parsed()) return run_certify(opt, property, paths, alpha, beta);
    if (rl_num->parsed()) return run_extremal(opt, t, false);
    if (rsl_num->parsed()) return run_extremal(opt, t, true);
    if (z_num->parsed()) return run_z_number(opt);
    if (det->parsed())
      return run_det_expand(opt, matrix_file, matrix_file.empty(), alpha, beta);
    if (spectra->parsed()) return run_spectra(opt, fixture, tol);
    if (vb->parsed()) return run_verify_bounds(opt, t, use_rsl, seeds, tol);
    if (tw->parsed()) return run_treewidth(opt, max_n);
    if (fam->parsed()) return run_families_list(opt);
    if (va->parsed()) return run_verify_all(opt, filter);
  } catch (const budget_exceeded& e) {
    std::cout << json{{"error", e.what()}, {"exit", kBudget}}.dump(2) << "\n";
    return kBudget;
  } catch (const clustering_ambiguous& e) {
    std::cout << json{{"error", e.what()}, {"exit", kViolation}}.dump(2)
              << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}, {"exit", kBadInput}}.dump(2) << "\n";
    return kBadInput;
  }
  return kBadInput;
}
