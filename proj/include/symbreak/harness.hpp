#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "symbreak/distinguishing.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/structure.hpp"

namespace symbreak {

enum class Verdict { kHolds, kViolated, kNotApplicable, kSkipped };

// "holds", "violated", "na", "skipped".
std::string to_string(Verdict v);

struct CheckOutcome {
  std::string check_id;  // part id such as "H5.iii"
  std::string graph6;
  Verdict verdict = Verdict::kNotApplicable;
  // Failed hypothesis, named exception or capability cause.
  std::string reason;
  nlohmann::json witness;
  // The graph is one the check names as an exception. The verdict is then
  // not-applicable; `exception_fails` records whether the conclusion fails.
  bool named_exception = false;
  bool exception_fails = false;
};

struct HarnessOptions {
  DistinguishingOptions distinguishing;
  // Quantify gamma-set checks over every gamma-set, not just the first.
  bool all_gamma_sets = true;
  std::uint64_t hamilton_budget = kDefaultHamiltonBudget;
};

// Top-level ids H1..H16 and P31, in report order.
const std::vector<std::string>& check_ids();
// Part ids belonging to the given top-level ids, in report order.
std::vector<std::string> part_ids(const std::vector<std::string>& checks);
// "all" or a comma separated list of top-level ids. Throws DomainError on
// unknown ids.
std::vector<std::string> parse_check_selection(const std::string& text);

// Connected graphs on 2..7 vertices where |Aut(G)| != |Aut(L(G))|, other
// than P_2. Q and L(Q) are the unique pair (X, Y) among them with
// L(X) isomorphic to Y, when there is one.
struct LineOrderExceptions {
  std::vector<std::string> discovered;  // canonical graph6, enumeration order
  std::optional<std::string> q;
  std::optional<std::string> line_q;
};
const LineOrderExceptions& line_order_exceptions();

// Every part of the selected checks, in report order. Disconnected inputs
// and undefined D' values give not-applicable verdicts; engine capability
// errors give capability-skipped ones.
std::vector<CheckOutcome> run_checks(const Graph& g, const std::vector<std::string>& checks,
                                     const HarnessOptions& options = {});

struct P31Flags {
  bool index_below_gamma = false;
  bool index_equals_gamma = false;
  bool index_above_gamma = false;
  bool number_equals_gamma = false;
};
// Nullopt unless g is connected with at least 3 vertices.
std::optional<P31Flags> classify_p31(const Graph& g, const HarnessOptions& options = {});

struct SweepParams {
  int n_min = 1;
  int n_max = 6;
  std::vector<std::string> checks;  // top-level ids
  int workers = 1;
  HarnessOptions options;
  // Enumerate only graphs of at least this girth (forests included).
  std::optional<int> min_girth;
};

struct GraphResult {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::vector<CheckOutcome> outcomes;
};

struct SweepReport {
  // Deterministic: no timing or worker count inside.
  nlohmann::ordered_json json;
  std::vector<GraphResult> graphs;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  double seconds = 0;
};

// Runs the checks over the enumerated connected graphs of order
// n_min..n_max. Results are merged in enumeration order, so the report does
// not depend on the worker count.
SweepReport sweep(const SweepParams& params);
// Same over a given corpus, in input order.
SweepReport sweep_corpus(const std::vector<Graph>& corpus, const SweepParams& params);

// One row per graph: graph6, n, m and one verdict column per part.
std::string sweep_csv(const SweepReport& report, const std::vector<std::string>& checks);

}  // namespace symbreak
