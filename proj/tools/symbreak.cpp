// symbreak: invariants, certified witnesses, check sweeps and format
// conversion for small graphs.
//
// Exit codes: 0 clean, 1 violation found, 2 usage or parse error,
// 3 capability limit hit.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "symbreak/automorphism.hpp"
#include "symbreak/constructions.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/domination.hpp"
#include "symbreak/enumeration.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"
#include "symbreak/harness.hpp"
#include "symbreak/structure.hpp"

using namespace symbreak;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t budget_nodes = 100'000'000;
  int workers = 1;
  // sweep / enumerate
  int n_min = 1;
  int n_max = 6;
  std::string checks = "all";
  std::optional<int> min_girth;
  bool first_gamma_set = false;
  // witness
  int gamma = 0;
  int d = 0;
  std::string kind = "number";
  // convert
  std::string to = "graph6";
};

DistinguishingOptions distinguishing_options(const Config& cfg) {
  DistinguishingOptions o;
  o.seed = cfg.seed;
  o.node_budget = cfg.budget_nodes;
  return o;
}

std::vector<Graph> load(const std::string& path) {
  std::vector<ParsedGraph> parsed;
  if (path == "-") {
    parsed = read_graphs(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    parsed = read_graphs(in);
  }
  std::vector<Graph> out;
  for (auto& p : parsed) out.push_back(std::move(p.graph));
  return out;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text;
}

// Runs one field; capability errors are recorded in place of the value.
bool field(json& j, const std::string& key, const std::function<json()>& compute) {
  try {
    j[key] = compute();
    return true;
  } catch (const CapabilityError& e) {
    j[key] = {{"skipped", e.what()}};
    return false;
  }
}

json invariants_of(const Graph& g, const Config& cfg, bool& capped) {
  json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["max_degree"] = g.order() ? max_degree(g) : 0;
  j["min_degree"] = g.order() ? min_degree(g) : 0;
  const Girth gi = girth(g);
  j["girth"] = gi.length ? json(*gi.length) : json("acyclic");
  j["connected"] = is_connected(g);
  const auto opts = distinguishing_options(cfg);
  bool ok = true;
  ok &= field(j, "aut_order", [&] { return json(to_string(automorphism_group(g).order())); });
  ok &= field(j, "orbits", [&] {
    json orbits = json::array();
    for (VertexSet o : automorphism_group(g).orbits()) orbits.push_back(set_members(o));
    return orbits;
  });
  ok &= field(j, "gamma", [&] {
    const auto r = domination_number(g);
    return json{{"value", r.gamma}, {"set", set_members(r.one_set)}};
  });
  ok &= field(j, "D", [&] {
    const auto r = distinguishing_number(g, opts);
    return json{{"value", r.value}, {"labels", r.witness}, {"found_by", r.found_by}};
  });
  ok &= field(j, "D'", [&] {
    if (g.order() < 3 || !edge_action_faithful(g)) {
      const char* why = g.order() < 3          ? "fewer than 3 vertices"
                        : has_k2_component(g) ? "K_2 component"
                                              : "two or more isolated vertices";
      return json{{"value", nullptr}, {"reason", why}};
    }
    const auto r = distinguishing_index(g, opts);
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"value", r.value},
                {"route", to_string(r.method)},
                {"edges", edges},
                {"labels", r.witness},
                {"found_by", r.found_by}};
  });
  ok &= field(j, "flags", [&] {
    const auto f = classify_special(g);
    return json{{"hamiltonian", f.hamiltonian},
                {"traceable", f.traceable},
                {"claw_free", f.claw_free},
                {"triangle_free", f.triangle_free},
                {"tree", f.is_tree},
                {"star", f.is_star},
                {"complete", f.is_complete},
                {"balanced_bipartite", f.is_complete_bipartite_balanced},
                {"cycle", f.is_cycle},
                {"path", f.is_path}};
  });
  if (!ok) capped = true;
  return j;
}

std::string value_text(const json& v) {
  if (v.is_object() && v.contains("skipped")) return "skipped";
  if (v.is_object() && v.contains("value")) {
    return v["value"].is_null() ? "undefined" : v["value"].dump();
  }
  return v.is_string() ? v.get<std::string>() : v.dump();
}

int cmd_invariants(const Config& cfg) {
  bool capped = false;
  json all = json::array();
  for (const Graph& g : load(cfg.input)) all.push_back(invariants_of(g, cfg, capped));
  std::ostringstream out;
  if (cfg.format == "json") {
    out << all.dump(2) << '\n';
  } else if (cfg.format == "text") {
    for (const auto& j : all) {
      out << j["graph6"].get<std::string>() << ": n=" << j["n"] << " m=" << j["m"]
          << " Delta=" << j["max_degree"] << " delta=" << j["min_degree"]
          << " girth=" << value_text(j["girth"]) << " |Aut|=" << value_text(j["aut_order"])
          << " gamma=" << value_text(j["gamma"]) << " D=" << value_text(j["D"])
          << " D'=" << value_text(j["D'"]) << '\n';
    }
  } else {
    out << "graph6,n,m,max_degree,min_degree,girth,connected,aut_order,gamma,D,Dp\n";
    for (const auto& j : all) {
      out << j["graph6"].get<std::string>() << ',' << j["n"] << ',' << j["m"] << ','
          << j["max_degree"] << ',' << j["min_degree"] << ',' << value_text(j["girth"]) << ','
          << j["connected"] << ',' << value_text(j["aut_order"]) << ','
          << value_text(j["gamma"]) << ',' << value_text(j["D"]) << ',' << value_text(j["D'"])
          << '\n';
    }
  }
  emit(cfg, out.str());
  return capped ? kExitCapability : 0;
}

int cmd_witness(const Config& cfg) {
  if (cfg.gamma < 1 || cfg.d < 1) throw UsageError("--gamma and --d must be at least 1");
  WitnessOptions opts;
  opts.distinguishing = distinguishing_options(cfg);
  const auto w = witness({cfg.gamma, cfg.d, parse_witness_kind(cfg.kind)}, opts);
  const auto cert = certificate_json(w);
  if (cfg.output.empty()) {
    std::cout << to_graph6(w.graph) << '\n' << cert.dump(2) << '\n';
    return 0;
  }
  std::ofstream g6(cfg.output);
  std::ofstream js(cfg.output + ".json");
  if (!g6 || !js) throw UsageError("cannot write " + cfg.output);
  g6 << to_graph6(w.graph) << '\n';
  js << cert.dump(2) << '\n';
  std::cerr << "wrote " << cfg.output << " and " << cfg.output << ".json (" << w.case_tag
            << ")\n";
  return 0;
}

bool domination_only(const std::vector<std::string>& checks) {
  for (const auto& c : checks) {
    if (c != "H1" && c != "H15") return false;
  }
  return true;
}

std::string sweep_text(const SweepReport& r) {
  std::ostringstream out;
  out << "graphs: " << r.json["graphs"]["total"] << '\n';
  out << std::left << std::setw(9) << "check" << std::right << std::setw(8) << "holds"
      << std::setw(8) << "na" << std::setw(10) << "violated" << std::setw(9) << "skipped" << '\n';
  for (const auto& [id, c] : r.json["counts"].items()) {
    out << std::left << std::setw(9) << id << std::right << std::setw(8) << c["holds"].get<int>()
        << std::setw(8) << c["na"].get<int>() << std::setw(10) << c["violated"].get<int>()
        << std::setw(9) << c["skipped"].get<int>() << '\n';
  }
  for (const auto& v : r.json["violations"]) {
    out << "violated " << v["check_id"].get<std::string>() << " on "
        << v["graph6"].get<std::string>() << ": " << v["witness"].dump() << '\n';
  }
  if (r.json.contains("line_order_exceptions")) {
    out << "order mismatches |Aut(G)| != |Aut(L(G))|: " << r.json["line_order_exceptions"]["discovered"].dump()
        << '\n';
  }
  if (r.json.contains("p31")) out << "P31 buckets: " << r.json["p31"].dump() << '\n';
  return out.str();
}

int cmd_sweep(const Config& cfg, bool from_corpus) {
  SweepParams params;
  params.checks = parse_check_selection(cfg.checks);
  params.workers = cfg.workers;
  params.options.distinguishing = distinguishing_options(cfg);
  params.options.all_gamma_sets = !cfg.first_gamma_set;
  params.min_girth = cfg.min_girth;
  SweepReport report;
  if (from_corpus) {
    report = sweep_corpus(load(cfg.input), params);
  } else {
    const int limit = domination_only(params.checks) ? kMaxEnumerationOrder : 7;
    if (cfg.n_max < 1 || cfg.n_max > limit) {
      throw UsageError("--n-max must be in 1.." + std::to_string(limit) + " for these checks");
    }
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw UsageError("--n-min must be in 1..n-max");
    params.n_min = cfg.n_min;
    params.n_max = cfg.n_max;
    report = sweep(params);
  }
  if (cfg.format == "json") {
    emit(cfg, report.json.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, sweep_csv(report, params.checks));
  } else {
    emit(cfg, sweep_text(report));
  }
  std::cerr << "swept " << report.graphs.size() << " graphs in " << std::fixed
            << std::setprecision(2) << report.seconds << " s, " << report.violations
            << " violations, " << report.skipped << " skipped\n";
  if (report.violations > 0) return kExitViolation;
  if (report.skipped > 0) return kExitCapability;
  return 0;
}

int cmd_convert(const Config& cfg) {
  std::ostringstream out;
  for (const Graph& g : load(cfg.input)) {
    if (cfg.to == "graph6") {
      out << to_graph6(g) << '\n';
    } else if (cfg.to == "canonical") {
      out << canonical_form(g) << '\n';
    } else {
      out << to_edge_list(g);
    }
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_enumerate(const Config& cfg) {
  if (cfg.n_max < 1 || cfg.n_max > kMaxEnumerationOrder) {
    throw UsageError("--n-max must be in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw UsageError("--n-min must be in 1..n-max");
  EnumerationOptions opts;
  opts.min_girth = cfg.min_girth;
  const auto levels = enumerate_connected_up_to(cfg.n_max, opts);
  std::ostringstream out;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (const Graph& g : levels[n - 1]) out << to_graph6(g) << '\n';
    std::cerr << "n=" << n << ": " << levels[n - 1].size() << " graphs\n";
  }
  emit(cfg, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinguishing number, distinguishing index and domination toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto add_io = [&cfg](CLI::App* sub, bool input) {
    if (input) sub->add_option("--input,-i", cfg.input, "graph6 or edge-list file, - for stdin");
    sub->add_option("--output,-o", cfg.output, "output path (default stdout)");
  };
  auto add_engine = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for the randomized search phase");
    sub->add_option("--budget-nodes", cfg.budget_nodes, "search node budget per computation")
        ->check(CLI::PositiveNumber);
  };

  auto* inv = app.add_subcommand("invariants", "compute invariants of each input graph");
  add_io(inv, true);
  add_engine(inv);
  inv->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text", "csv"}));

  auto* wit = app.add_subcommand("witness", "build a certified graph with given gamma and D/D'");
  add_io(wit, false);
  add_engine(wit);
  wit->add_option("--gamma", cfg.gamma, "domination number")->required();
  wit->add_option("--d", cfg.d, "distinguishing number or index")->required();
  wit->add_option("--kind", cfg.kind)->check(CLI::IsMember({"number", "index"}));

  auto* swp = app.add_subcommand("sweep", "run checks over enumerated graphs or a corpus");
  add_io(swp, true);
  add_engine(swp);
  swp->add_option("--n-min", cfg.n_min);
  swp->add_option("--n-max", cfg.n_max);
  swp->add_option("--checks", cfg.checks, "all or a comma list such as H1,H5");
  swp->add_option("--workers", cfg.workers)->envname("SYMBREAK_WORKERS")->check(CLI::PositiveNumber);
  swp->add_option("--min-girth", cfg.min_girth, "enumerate only graphs of at least this girth");
  swp->add_flag("--first-gamma-set", cfg.first_gamma_set,
                "quantify gamma-set checks over the first gamma-set only");
  swp->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text", "csv"}));

  auto* cnv = app.add_subcommand("convert", "convert between graph6 and edge lists");
  add_io(cnv, true);
  cnv->add_option("--to", cfg.to)->check(CLI::IsMember({"graph6", "edges", "canonical"}));

  auto* en = app.add_subcommand("enumerate", "list connected graphs up to isomorphism");
  add_io(en, false);
  en->add_option("--n-min", cfg.n_min);
  en->add_option("--n-max", cfg.n_max)->required();
  en->add_option("--min-girth", cfg.min_girth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(cfg);
    if (*wit) return cmd_witness(cfg);
    if (*swp) return cmd_sweep(cfg, swp->count("--input") > 0);
    if (*cnv) return cmd_convert(cfg);
    if (*en) return cmd_enumerate(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << '\n';
    return kExitCapability;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
