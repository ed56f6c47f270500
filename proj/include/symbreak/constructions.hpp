#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "symbreak/distinguishing.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

enum class WitnessKind { kNumber, kIndex };

std::string to_string(WitnessKind kind);
// "number" or "index"; throws DomainError otherwise.
WitnessKind parse_witness_kind(const std::string& text);

struct WitnessRequest {
  int gamma = 1;
  int d = 1;
  WitnessKind kind = WitnessKind::kNumber;
};

struct CertifiedWitness {
  Graph graph;
  WitnessKind kind = WitnessKind::kNumber;
  int achieved_gamma = 0;
  int achieved_d = 0;
  std::string case_tag;
  std::string note;  // construction details, e.g. which path reading verified
  VertexSet gamma_set = 0;
  std::vector<int> labeling;  // vertex colors, or edge colors for kIndex
};

struct WitnessOptions {
  DistinguishingOptions distinguishing;
  // Caterpillars tried in the asymmetric branch before giving up.
  std::size_t candidate_limit = 200'000;
};

inline constexpr int kMaxWitnessParameterSum = 20;

// A connected graph with domination number gamma and D (or D') equal to d,
// re-verified from scratch before it is returned. Branches:
//   spider        2 <= gamma <= d: center joined to gamma vertices, each
//                 carrying d pendant vertices
//   star          gamma = 1 < d: K_{1,d}
//   asymmetric    d = 1 < gamma: first asymmetric caterpillar with the
//                 right domination number, else the first asymmetric
//                 connected graph in enumeration order
//   star-path     2 <= d < gamma: K_{1,d} with a path of 3*gamma-3 edges at
//                 the center (3*gamma-2 new vertices if that reading fails)
//   join          gamma = d = 1: join of K_1 and the first asymmetric graph
//                 without a dominating vertex
// Throws DomainError for gamma or d below 1, CapabilityError when
// gamma + d exceeds kMaxWitnessParameterSum, the graph would need more
// than 64 vertices or a candidate search runs dry, and ConsistencyError
// when the engines disagree with the construction.
CertifiedWitness witness(const WitnessRequest& request, const WitnessOptions& options = {});

struct WitnessCell {
  WitnessRequest request;
  std::optional<CertifiedWitness> witness;
  std::string error;  // set when the cell failed
};

// Row-major over gamma = 1..max_gamma, d = 1..max_d. Failed cells keep
// their error message instead of aborting the table.
std::vector<WitnessCell> witness_table(int max_gamma, int max_d, WitnessKind kind,
                                       const WitnessOptions& options = {});

// Sidecar certificate: parameters, case, graph6, gamma-set and labeling.
nlohmann::json certificate_json(const CertifiedWitness& w);

}  // namespace symbreak
