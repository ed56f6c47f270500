#include "symbreak/constructions.hpp"

#include <utility>

#include "symbreak/automorphism.hpp"
#include "symbreak/domination.hpp"
#include "symbreak/enumeration.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak {

std::string to_string(WitnessKind kind) { return kind == WitnessKind::kNumber ? "number" : "index"; }

WitnessKind parse_witness_kind(const std::string& text) {
  if (text == "number") return WitnessKind::kNumber;
  if (text == "index") return WitnessKind::kIndex;
  throw DomainError("kind must be 'number' or 'index', got '" + text + "'");
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require_order(int n) {
  if (n > kMaxVertices) {
    throw CapabilityError("witness would need " + std::to_string(n) + " vertices (limit " +
                          std::to_string(kMaxVertices) + ")");
  }
}

Graph spider(int gamma, int d) {
  const int n = 1 + gamma + gamma * d;
  require_order(n);
  EdgeList edges;
  int next = gamma + 1;
  for (int i = 1; i <= gamma; ++i) {
    edges.emplace_back(0, i);
    for (int j = 0; j < d; ++j) edges.emplace_back(i, next++);
  }
  return Graph::from_edges(n, edges);
}

// K_{1,d} centered at 0 plus a path of `extra` new vertices hanging from 0.
Graph star_with_path(int d, int extra) {
  const int n = 1 + d + extra;
  require_order(n);
  EdgeList edges;
  for (int i = 1; i <= d; ++i) edges.emplace_back(0, i);
  int prev = 0;
  for (int k = 0; k < extra; ++k) {
    edges.emplace_back(prev, d + 1 + k);
    prev = d + 1 + k;
  }
  return Graph::from_edges(n, edges);
}

Graph caterpillar(const std::vector<int>& pendants) {
  const int spine = static_cast<int>(pendants.size());
  int n = spine;
  for (int p : pendants) n += p;
  require_order(n);
  EdgeList edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    for (int j = 0; j < pendants[i]; ++j) edges.emplace_back(i, next++);
  }
  return Graph::from_edges(n, edges);
}

bool asymmetric(const Graph& g) {
  const std::vector<int> plain(g.order(), 0);
  return only_identity_preserves(g, plain);
}

// Smallest asymmetric graph with no vertex adjacent to all others, in
// enumeration order. Searched once.
const Graph& join_base() {
  static const Graph base = [] {
    for (const auto& level : enumerate_connected_up_to(7)) {
      for (const Graph& h : level) {
        if (h.order() >= 2 && max_degree(h) < h.order() - 1 && asymmetric(h)) return h;
      }
    }
    throw CapabilityError("no asymmetric graph without a dominating vertex up to order 7");
  }();
  return base;
}

std::string expected_actual(const Graph& g, const WitnessRequest& req, int gamma, int d) {
  return "construction for gamma=" + std::to_string(req.gamma) + ", d=" + std::to_string(req.d) +
         " (" + to_string(req.kind) + ") produced gamma=" + std::to_string(gamma) +
         ", d=" + std::to_string(d) + " on " + to_graph6(g);
}

// Computes both invariants from scratch and checks the certificates.
CertifiedWitness certify(Graph g, const WitnessRequest& req, std::string tag, std::string note,
                         const WitnessOptions& options) {
  if (!is_connected(g)) throw ConsistencyError("construction is disconnected: " + to_graph6(g));
  CertifiedWitness w;
  w.kind = req.kind;
  w.case_tag = std::move(tag);
  w.note = std::move(note);
  const auto dom = domination_number(g);
  w.achieved_gamma = dom.gamma;
  w.gamma_set = dom.one_set;
  const auto group = automorphism_group(g);
  if (req.kind == WitnessKind::kNumber) {
    const auto r = distinguishing_number(g, options.distinguishing);
    w.achieved_d = r.value;
    w.labeling = r.witness;
    if (!is_distinguishing_vertex(g, {r.witness, r.value}, group)) {
      throw ConsistencyError("vertex labeling failed verification on " + to_graph6(g));
    }
  } else {
    const auto r = distinguishing_index(g, IndexRoute::kDirect, options.distinguishing);
    w.achieved_d = r.value;
    w.labeling = r.witness;
    if (!is_distinguishing_edge(g, {r.witness, r.value}, group)) {
      throw ConsistencyError("edge labeling failed verification on " + to_graph6(g));
    }
  }
  if (!is_dominating_set(g, w.gamma_set)) {
    throw ConsistencyError("gamma-set failed verification on " + to_graph6(g));
  }
  if (w.achieved_gamma != req.gamma || w.achieved_d != req.d) {
    throw ConsistencyError(expected_actual(g, req, w.achieved_gamma, w.achieved_d));
  }
  w.graph = std::move(g);
  return w;
}

CertifiedWitness star_path_case(const WitnessRequest& req, const WitnessOptions& options) {
  const int len = 3 * req.gamma - 3;
  try {
    return certify(star_with_path(req.d, len), req, "star-path",
                   "path of " + std::to_string(len) + " edges at the center", options);
  } catch (const ConsistencyError&) {
    // A path of len edges joined to the center by one more edge.
    return certify(star_with_path(req.d, len + 1), req, "star-path",
                   "path of " + std::to_string(len + 1) + " vertices joined to the center",
                   options);
  }
}

// Caterpillars by (spine length, pendant vector over {0,1,2}) in
// lexicographic order, spine up to 3*gamma+2. Trees with domination number
// 2 are never asymmetric, so the search falls back to scanning the
// connected-graph enumeration.
CertifiedWitness asymmetric_case(const WitnessRequest& req, const WitnessOptions& options) {
  std::size_t tried = 0;
  for (int spine = 1; spine <= 3 * req.gamma + 2; ++spine) {
    std::vector<int> pendants(spine, 0);
    while (true) {
      if (++tried > options.candidate_limit) {
        throw CapabilityError("no asymmetric caterpillar with gamma=" + std::to_string(req.gamma) +
                              " among " + std::to_string(options.candidate_limit) +
                              " candidates");
      }
      int n = spine;
      for (int p : pendants) n += p;
      if (n <= kMaxVertices) {
        const Graph g = caterpillar(pendants);
        if (asymmetric(g) && domination_number(g).gamma == req.gamma) {
          std::string vec;
          for (int p : pendants) vec += std::to_string(p);
          return certify(g, req, "asymmetric",
                         "caterpillar, spine " + std::to_string(spine) + ", pendants " + vec,
                         options);
        }
      }
      int i = spine - 1;
      while (i >= 0 && pendants[i] == 2) pendants[i--] = 0;
      if (i < 0) break;
      ++pendants[i];
    }
  }
  for (const auto& level : enumerate_connected_up_to(8)) {
    for (const Graph& g : level) {
      if (g.order() >= 3 && asymmetric(g) && domination_number(g).gamma == req.gamma) {
        return certify(g, req, "asymmetric",
                       "first asymmetric connected graph of order " + std::to_string(g.order()) +
                           " in enumeration order",
                       options);
      }
    }
  }
  throw CapabilityError("no asymmetric graph with gamma=" + std::to_string(req.gamma) +
                        " found");
}

}  // namespace

CertifiedWitness witness(const WitnessRequest& req, const WitnessOptions& options) {
  if (req.gamma < 1 || req.d < 1) throw DomainError("gamma and d must be at least 1");
  if (req.gamma + req.d > kMaxWitnessParameterSum) {
    throw CapabilityError("gamma + d above " + std::to_string(kMaxWitnessParameterSum));
  }
  const int gamma = req.gamma;
  const int d = req.d;
  if (gamma >= 2 && gamma <= d) {
    return certify(spider(gamma, d), req, "spider",
                   "center with " + std::to_string(gamma) + " neighbors, " + std::to_string(d) +
                       " pendants each",
                   options);
  }
  if (gamma == 1 && d >= 2) {
    return certify(star_graph(d), req, "star", "K_{1," + std::to_string(d) + "}", options);
  }
  if (d == 1 && gamma >= 2) return asymmetric_case(req, options);
  if (d >= 2 && d < gamma) return star_path_case(req, options);
  const Graph& h = join_base();
  return certify(join(h, empty_graph(1)), req, "join",
                 "K_1 joined to asymmetric " + to_graph6(h), options);
}

std::vector<WitnessCell> witness_table(int max_gamma, int max_d, WitnessKind kind,
                                       const WitnessOptions& options) {
  std::vector<WitnessCell> cells;
  for (int gamma = 1; gamma <= max_gamma; ++gamma) {
    for (int d = 1; d <= max_d; ++d) {
      WitnessCell cell;
      cell.request = {gamma, d, kind};
      try {
        cell.witness = witness(cell.request, options);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

nlohmann::json certificate_json(const CertifiedWitness& w) {
  nlohmann::json j;
  j["kind"] = to_string(w.kind);
  j["gamma"] = w.achieved_gamma;
  j["d"] = w.achieved_d;
  j["case"] = w.case_tag;
  j["note"] = w.note;
  j["graph6"] = to_graph6(w.graph);
  j["n"] = w.graph.order();
  j["m"] = w.graph.size();
  j["gamma_set"] = set_members(w.gamma_set);
  if (w.kind == WitnessKind::kNumber) {
    j["vertex_labels"] = w.labeling;
  } else {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : w.graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    j["edge_labels"] = w.labeling;
  }
  return j;
}

}  // namespace symbreak
