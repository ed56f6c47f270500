#include "symbreak/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "symbreak/automorphism.hpp"
#include "symbreak/domination.hpp"
#include "symbreak/enumeration.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kNotApplicable:
      return "na";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "unknown";
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

nlohmann::json members(VertexSet s) { return set_members(s); }

// Lazily computed invariants of one graph, plus memoized values for the
// derived graphs (G-S, G-v, complement) the checks look at.
class Profile {
 public:
  Profile(const Graph& g, const HarnessOptions& options)
      : g_(g),
        options_(options),
        n(g.order()),
        m(g.size()),
        max_deg(max_degree(g)),
        min_deg(min_degree(g)),
        gir(girth(g)),
        connected(is_connected(g)) {}

  const Graph& graph() const { return g_; }
  const HarnessOptions& options() const { return options_; }

  const std::string& canonical() {
    if (!canonical_) canonical_ = canonical_form(g_);
    return *canonical_;
  }

  const Graph& complement_graph() {
    if (!complement_) complement_ = complement(g_);
    return *complement_;
  }
  bool complement_connected() { return is_connected(complement_graph()); }

  int gamma() { return domination().gamma; }
  const std::vector<VertexSet>& gamma_sets() {
    if (!gamma_sets_) {
      if (options_.all_gamma_sets) {
        DominationOptions opts;
        opts.want_all = true;
        gamma_sets_ = *domination_number(g_, opts).all_sets;
      } else {
        gamma_sets_ = std::vector<VertexSet>{domination().one_set};
      }
    }
    return *gamma_sets_;
  }

  int D() { return D_of(g_); }
  std::optional<int> Dp() { return Dp_of(g_); }

  int D_of(const Graph& h) {
    auto& v = memo(h);
    if (!v.D) v.D = distinguishing_number(h, options_.distinguishing).value;
    return *v.D;
  }
  // Nullopt where D' is undefined: fewer than 3 vertices, or a non-identity
  // automorphism fixing every edge.
  std::optional<int> Dp_of(const Graph& h) {
    auto& v = memo(h);
    if (!v.Dp) {
      if (h.order() < 3 || !edge_action_faithful(h)) {
        v.Dp = std::optional<int>{};
      } else {
        v.Dp = distinguishing_index(h, IndexRoute::kDirect, options_.distinguishing).value;
      }
    }
    return *v.Dp;
  }
  int gamma_of(const Graph& h) {
    auto& v = memo(h);
    if (!v.gamma) v.gamma = domination_number(h).gamma;
    return *v.gamma;
  }

  const Graph& line() {
    if (!line_) line_ = line_graph(g_);
    return *line_;
  }

  bool tree() const { return connected && m == n - 1; }
  bool forest() const { return !gir.length.has_value(); }

 private:
  struct Values {
    std::optional<int> D;
    std::optional<std::optional<int>> Dp;
    std::optional<int> gamma;
  };

  Values& memo(const Graph& h) { return memo_[to_graph6(h)]; }

  const DominationResult& domination() {
    if (!domination_) domination_ = domination_number(g_);
    return *domination_;
  }

  const Graph& g_;
  const HarnessOptions& options_;
  std::optional<std::string> canonical_;
  std::optional<Graph> complement_;
  std::optional<Graph> line_;
  std::optional<DominationResult> domination_;
  std::optional<std::vector<VertexSet>> gamma_sets_;
  std::map<std::string, Values> memo_;

 public:
  const int n;
  const int m;
  const int max_deg;
  const int min_deg;
  const Girth gir;
  const bool connected;
};

// A derived graph a quantified check looks at: G-S for a gamma-set S, or
// G-v.
struct Instance {
  VertexSet removed = 0;
  Graph rest;
  nlohmann::json label;
};

struct Eval {
  bool ok = true;
  nlohmann::json witness;
};

using Hypothesis = std::function<std::optional<std::string>(Profile&, const Instance*)>;
using Conclusion = std::function<Eval(Profile&, const Instance*)>;

struct NamedException {
  std::string name;
  std::function<bool(Profile&)> matches;
};

enum class Scope { kGraph, kGammaSets, kVertices };

struct Part {
  Part(std::string id_, Scope scope_, Hypothesis pre_, Hypothesis hyp_, Conclusion conclusion_)
      : id(std::move(id_)),
        scope(scope_),
        pre(std::move(pre_)),
        hyp(std::move(hyp_)),
        conclusion(std::move(conclusion_)) {}

  std::string id;
  Scope scope = Scope::kGraph;
  Hypothesis pre;  // graph-level hypotheses
  Hypothesis hyp;  // per-instance hypotheses (quantified parts)
  Conclusion conclusion;
  std::vector<NamedException> exceptions;
};

std::optional<std::string> none(Profile&, const Instance*) { return std::nullopt; }

// Hypothesis helpers.
std::optional<std::string> need_connected(Profile& p) {
  if (!p.connected) return "G is disconnected";
  return std::nullopt;
}
std::optional<std::string> need_connected3(Profile& p) {
  if (auto r = need_connected(p)) return r;
  if (p.n < 3) return "fewer than 3 vertices";
  return std::nullopt;
}
std::string index_undefined(const Graph& h, const std::string& what) {
  if (h.order() < 3) return "D'" + what + " undefined: fewer than 3 vertices";
  if (has_k2_component(h)) return "D'" + what + " undefined on K_2 component";
  return "D'" + what + " undefined: two or more isolated vertices";
}
std::optional<std::string> need_index(Profile& p) {
  if (!p.Dp()) return index_undefined(p.graph(), "");
  return std::nullopt;
}
std::optional<std::string> need_delta2_girth7(Profile& p) {
  if (p.min_deg < 2) return "delta < 2";
  if (!p.gir.at_least(7)) return "girth < 7";
  return std::nullopt;
}
std::optional<std::string> no_k2_component(const Instance& s) {
  if (has_k2_component(s.rest)) return "D'(G-S) undefined on K_2 component";
  return std::nullopt;
}

NamedException cycle_named(int k) {
  return {"C_" + std::to_string(k), [k](Profile& p) { return is_cycle(p.graph()) && p.n == k; }};
}
NamedException complete_named(int k) {
  return {"K_" + std::to_string(k), [k](Profile& p) { return is_complete(p.graph()) && p.n == k; }};
}
const NamedException kCompleteGraphs{"complete graph",
                                     [](Profile& p) { return is_complete(p.graph()); }};
const NamedException kStars{"star", [](Profile& p) { return is_star(p.graph()); }};
const NamedException kK33{"K_{3,3}", [](Profile& p) {
                            return p.n == 6 && is_balanced_complete_bipartite(p.graph());
                          }};
const NamedException kP2{"P_2", [](Profile& p) { return p.connected && p.n == 2; }};
const NamedException kQ{"Q", [](Profile& p) {
                          const auto& q = line_order_exceptions().q;
                          return q && p.canonical() == *q;
                        }};
const NamedException kLineQ{"L(Q)", [](Profile& p) {
                              const auto& lq = line_order_exceptions().line_q;
                              return lq && p.canonical() == *lq;
                            }};

bool in_h2_class(Profile& p) {
  const Graph& g = p.graph();
  return is_complete(g) || is_balanced_complete_bipartite(g) ||
         (is_cycle(g) && p.n >= 3 && p.n <= 5);
}

// Bound parts shared by the D (H5) and D' (H6) versions.
void add_bound_parts(std::vector<Part>& parts, const std::string& id, bool index) {
  auto value = [index](Profile& p) { return index ? *p.Dp() : p.D(); };
  const std::string name = index ? "D'" : "D";
  Hypothesis base = index ? Hypothesis([](Profile& p, const Instance*) { return need_index(p); })
                          : Hypothesis(none);
  auto with_base = [base](Hypothesis extra) -> Hypothesis {
    return [base, extra](Profile& p, const Instance* s) -> std::optional<std::string> {
      if (auto r = base(p, s)) return r;
      return extra(p, s);
    };
  };
  parts.push_back({id + ".i", Scope::kGraph, base, none, [=](Profile& p, const Instance*) {
                     const int x = value(p);
                     const int lo = ceil_div(p.n, 1 + p.max_deg);
                     return Eval{x - p.gamma() <= p.n - lo,
                                 {{name, x}, {"gamma", p.gamma()}, {"n", p.n}, {"ceil", lo}}};
                   }});
  parts.push_back({id + ".ii", Scope::kGraph, base, none, [=](Profile& p, const Instance*) {
                     const int x = value(p);
                     const int lo = ceil_div(p.n, 1 + p.max_deg);
                     return Eval{x - p.gamma() <= p.max_deg + 1 - lo,
                                 {{name, x}, {"gamma", p.gamma()}, {"Delta", p.max_deg},
                                  {"ceil", lo}}};
                   }});
  Part iii{id + ".iii", Scope::kGraph,
           index ? with_base([](Profile& p, const Instance*) { return need_connected(p); }) : base,
           none, [=](Profile& p, const Instance*) {
             const int x = value(p);
             return Eval{x <= p.n - p.gamma(), {{name, x}, {"n", p.n}, {"gamma", p.gamma()}}};
           }};
  iii.exceptions = index ? std::vector<NamedException>{complete_named(3)}
                         : std::vector<NamedException>{kCompleteGraphs};
  parts.push_back(iii);
  parts.push_back({id + ".iv", Scope::kGraph,
                   with_base([](Profile& p, const Instance*) { return need_delta2_girth7(p); }),
                   none, [=](Profile& p, const Instance*) {
                     const int x = value(p);
                     return Eval{x <= p.gamma(), {{name, x}, {"gamma", p.gamma()}}};
                   }});
  parts.push_back({id + ".v", Scope::kGraph,
                   with_base([](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (auto r = need_connected(p)) return r;
                     if (p.complement_connected()) return "complement is connected";
                     return std::nullopt;
                   }),
                   none, [=](Profile& p, const Instance*) {
                     const int x = value(p);
                     return Eval{p.gamma() <= x + 1, {{name, x}, {"gamma", p.gamma()}}};
                   }});
  parts.push_back({id + ".vi", Scope::kGraph,
                   with_base([](Profile& p, const Instance*) { return need_connected(p); }), none,
                   [=](Profile& p, const Instance*) {
                     const long long x = value(p);
                     const long long gam = p.gamma();
                     const long long n = p.n;
                     const long long delta = p.max_deg;
                     const bool ok = gam <= x * (n - delta) && x * n <= gam * (delta + 1) * (delta + 1);
                     return Eval{ok, {{name, x}, {"gamma", gam}, {"n", n}, {"Delta", delta}}};
                   }});
}

std::vector<Part> build_parts() {
  std::vector<Part> parts;
  auto pre_connected = [](Profile& p, const Instance*) { return need_connected(p); };
  auto pre_connected3 = [](Profile& p, const Instance*) { return need_connected3(p); };

  // H1: domination bounds.
  parts.push_back({"H1.i", Scope::kGraph, none, none, [](Profile& p, const Instance*) {
                     const int lo = ceil_div(p.n, 1 + p.max_deg);
                     const int hi = p.n - p.max_deg;
                     return Eval{lo <= p.gamma() && p.gamma() <= hi,
                                 {{"gamma", p.gamma()}, {"lower", lo}, {"upper", hi}}};
                   }});
  parts.push_back({"H1.ii", Scope::kGraph,
                   [](Profile& p, const Instance*) { return need_delta2_girth7(p); }, none,
                   [](Profile& p, const Instance*) {
                     return Eval{p.gamma() >= p.max_deg,
                                 {{"gamma", p.gamma()}, {"Delta", p.max_deg}}};
                   }});
  // Applied to G when G is disconnected, otherwise to the complement H of G
  // when H is disconnected (then the complement of H is G).
  parts.push_back({"H1.iii", Scope::kGraph,
                   [](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (p.connected && p.complement_connected()) {
                       return "G and its complement are connected";
                     }
                     return std::nullopt;
                   },
                   none, [](Profile& p, const Instance*) {
                     if (!p.connected) {
                       const int c = p.gamma_of(p.complement_graph());
                       return Eval{c <= 2, {{"applied_to", "G"}, {"gamma_complement", c}}};
                     }
                     return Eval{p.gamma() <= 2,
                                 {{"applied_to", "complement"}, {"gamma", p.gamma()}}};
                   }});

  // H2: D <= Delta + 1 with equality exactly on the listed family.
  parts.push_back({"H2.i", Scope::kGraph, pre_connected, none, [](Profile& p, const Instance*) {
                     return Eval{p.D() <= p.max_deg + 1, {{"D", p.D()}, {"Delta", p.max_deg}}};
                   }});
  parts.push_back({"H2.ii", Scope::kGraph, pre_connected, none, [](Profile& p, const Instance*) {
                     const bool equality = p.D() == p.max_deg + 1;
                     const bool in_class = in_h2_class(p);
                     return Eval{equality == in_class, {{"D", p.D()},
                                                        {"Delta", p.max_deg},
                                                        {"equality", equality},
                                                        {"in_class", in_class}}};
                   }});

  Part h3{"H3", Scope::kGraph, pre_connected3, none, [](Profile& p, const Instance*) {
            return Eval{*p.Dp() <= p.max_deg, {{"D'", *p.Dp()}, {"Delta", p.max_deg}}};
          }};
  h3.exceptions = {cycle_named(3), cycle_named(4), cycle_named(5)};
  parts.push_back(h3);

  Part h4{"H4", Scope::kGraph,
          [](Profile& p, const Instance*) -> std::optional<std::string> {
            if (auto r = need_connected(p)) return r;
            if (p.tree()) return "tree (symmetric/asymmetric tree hypothesis not evaluated)";
            if (p.max_deg < 3) return "Delta < 3";
            return std::nullopt;
          },
          none, [](Profile& p, const Instance*) {
            return Eval{*p.Dp() <= p.max_deg - 1, {{"D'", *p.Dp()}, {"Delta", p.max_deg}}};
          }};
  h4.exceptions = {complete_named(4), kK33};
  parts.push_back(h4);

  add_bound_parts(parts, "H5", false);
  add_bound_parts(parts, "H6", true);

  Part h7{"H7", Scope::kGraph,
          [](Profile& p, const Instance*) -> std::optional<std::string> {
            if (auto r = need_connected(p)) return r;
            if (p.m == 0) return "no edges";
            return std::nullopt;
          },
          none, [](Profile& p, const Instance*) {
            const GroupOrder a = automorphism_group(p.graph()).order();
            const GroupOrder b = automorphism_group(p.line()).order();
            return Eval{a == b, {{"aut", to_string(a)}, {"aut_line", to_string(b)}}};
          }};
  h7.exceptions = {kP2, kQ, kLineQ};
  parts.push_back(h7);

  parts.push_back({"H8", Scope::kGraph,
                   [](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (auto r = need_connected(p)) return r;
                     if (kP2.matches(p)) return "excluded by hypothesis: P_2";
                     if (kLineQ.matches(p)) return "excluded by hypothesis: L(Q)";
                     return need_index(p);
                   },
                   none, [](Profile& p, const Instance*) {
                     const int dp = *p.Dp();
                     const int dl = p.D_of(p.line());
                     nlohmann::json w{{"D'", dp}, {"D(L)", dl}};
                     bool ok = dp == dl;
                     if (kQ.matches(p)) {
                       w["Q"] = true;
                       ok = ok && dp == 2 && dl == 2;
                     }
                     return Eval{ok, w};
                   }});

  Part h9{"H9", Scope::kGraph, pre_connected3, none, [](Profile& p, const Instance*) {
            const int gl = p.gamma_of(p.line());
            return Eval{*p.Dp() <= p.m - gl, {{"D'", *p.Dp()}, {"m", p.m}, {"gamma_line", gl}}};
          }};
  h9.exceptions = {kStars};
  parts.push_back(h9);

  // H10: vertex deletion.
  parts.push_back({"H10.i", Scope::kVertices, pre_connected3, none,
                   [](Profile& p, const Instance* s) {
                     const int d = p.D();
                     const int dv = p.D_of(s->rest);
                     return Eval{d - 1 <= dv && dv <= 2 * d, {{"D", d}, {"D(G-v)", dv}}};
                   }});
  parts.push_back({"H10.ii", Scope::kVertices, pre_connected3,
                   [](Profile& p, const Instance* s) -> std::optional<std::string> {
                     if (!p.Dp_of(s->rest)) return index_undefined(s->rest, "(G-v)");
                     return std::nullopt;
                   },
                   [](Profile& p, const Instance* s) {
                     const int d = *p.Dp();
                     const int dv = *p.Dp_of(s->rest);
                     return Eval{d - 1 <= dv && dv <= 2 * d, {{"D'", d}, {"D'(G-v)", dv}}};
                   }});

  auto index_rest = [](Profile& p, const Instance* s) -> std::optional<std::string> {
    if (auto r = no_k2_component(*s)) return r;
    if (!p.Dp_of(s->rest)) return index_undefined(s->rest, "(G-S)");
    return std::nullopt;
  };

  // H11, H12: gamma-set corollaries.
  parts.push_back({"H11.i", Scope::kGammaSets, pre_connected3, none,
                   [](Profile& p, const Instance* s) {
                     const int ds = p.D_of(s->rest);
                     return Eval{p.D() <= ds + p.gamma(),
                                 {{"D", p.D()}, {"D(G-S)", ds}, {"gamma", p.gamma()}}};
                   }});
  parts.push_back({"H11.ii", Scope::kGammaSets, pre_connected3, index_rest,
                   [](Profile& p, const Instance* s) {
                     const int ds = *p.Dp_of(s->rest);
                     return Eval{*p.Dp() <= ds + p.gamma(),
                                 {{"D'", *p.Dp()}, {"D'(G-S)", ds}, {"gamma", p.gamma()}}};
                   }});
  parts.push_back({"H12.i", Scope::kGammaSets, pre_connected3, none,
                   [](Profile& p, const Instance* s) {
                     const int ds = p.D_of(s->rest);
                     return Eval{2 * p.D() <= p.n + ds, {{"D", p.D()}, {"D(G-S)", ds}, {"n", p.n}}};
                   }});
  parts.push_back({"H12.ii", Scope::kGammaSets, pre_connected3, index_rest,
                   [](Profile& p, const Instance* s) {
                     const int ds = *p.Dp_of(s->rest);
                     return Eval{2 * *p.Dp() <= p.n + ds,
                                 {{"D'", *p.Dp()}, {"D'(G-S)", ds}, {"n", p.n}}};
                   }});

  // H13: claw-free or traceable remainder.
  parts.push_back({"H13.i", Scope::kGammaSets, pre_connected3,
                   [](Profile&, const Instance* s) -> std::optional<std::string> {
                     if (!is_connected(s->rest)) return "G-S is disconnected";
                     if (!is_claw_free(s->rest)) return "G-S is not claw-free";
                     return std::nullopt;
                   },
                   [](Profile& p, const Instance*) {
                     return Eval{*p.Dp() <= p.gamma() + 3, {{"D'", *p.Dp()}, {"gamma", p.gamma()}}};
                   }});
  parts.push_back({"H13.ii", Scope::kGammaSets, pre_connected3,
                   [](Profile& p, const Instance* s) -> std::optional<std::string> {
                     if (s->rest.order() < 7) return "G-S has fewer than 7 vertices";
                     if (!is_connected(s->rest)) return "G-S is disconnected";
                     if (!is_traceable(s->rest, p.options().hamilton_budget)) {
                       return "G-S is not traceable";
                     }
                     return std::nullopt;
                   },
                   [](Profile& p, const Instance*) {
                     return Eval{*p.Dp() <= p.gamma() + 2, {{"D'", *p.Dp()}, {"gamma", p.gamma()}}};
                   }});

  // H14: connected remainder.
  auto rest_connected = [](Profile&, const Instance* s) -> std::optional<std::string> {
    if (!is_connected(s->rest)) return "G-S is disconnected";
    return std::nullopt;
  };
  parts.push_back({"H14.i", Scope::kGammaSets, pre_connected3, rest_connected,
                   [](Profile& p, const Instance* s) {
                     const int gs = p.gamma_of(s->rest);
                     return Eval{p.D() <= p.n - gs, {{"D", p.D()}, {"n", p.n}, {"gamma(G-S)", gs}}};
                   }});
  parts.push_back({"H14.ii", Scope::kGammaSets, pre_connected3, rest_connected,
                   [](Profile& p, const Instance* s) {
                     const int gs = p.gamma_of(s->rest);
                     return Eval{*p.Dp() <= p.n - gs,
                                 {{"D'", *p.Dp()}, {"n", p.n}, {"gamma(G-S)", gs}}};
                   }});
  parts.push_back({"H14.iii", Scope::kGammaSets, pre_connected3, rest_connected,
                   [](Profile& p, const Instance* s) {
                     const int gs = p.gamma_of(s->rest);
                     return Eval{2 * p.D() <= 2 * p.n - p.gamma() - gs,
                                 {{"D", p.D()}, {"n", p.n}, {"gamma", p.gamma()},
                                  {"gamma(G-S)", gs}}};
                   }});
  parts.push_back({"H14.iv", Scope::kGammaSets, pre_connected3,
                   [](Profile&, const Instance* s) -> std::optional<std::string> {
                     if (!is_connected(s->rest)) return "G-S is disconnected";
                     return no_k2_component(*s);
                   },
                   [](Profile& p, const Instance* s) {
                     const int gs = p.gamma_of(s->rest);
                     return Eval{2 * *p.Dp() <= 2 * p.n - p.gamma() - gs,
                                 {{"D'", *p.Dp()}, {"n", p.n}, {"gamma", p.gamma()},
                                  {"gamma(G-S)", gs}}};
                   }});

  parts.push_back({"H15", Scope::kGraph,
                   [](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (p.forest()) return "forest";
                     if (!p.gir.at_least(5)) return "girth < 5";
                     return std::nullopt;
                   },
                   none, [](Profile& p, const Instance*) {
                     const bool ham = is_hamiltonian(p.complement_graph(), p.options().hamilton_budget);
                     return Eval{ham, {{"complement_hamiltonian", ham}, {"girth", *p.gir.length}}};
                   }});

  // H16: G and its complement connected.
  auto both_connected = [](Profile& p) -> std::optional<std::string> {
    if (auto r = need_connected(p)) return r;
    if (!p.complement_connected()) return "complement is disconnected";
    return std::nullopt;
  };
  auto gamma_below_delta = [both_connected](Profile& p) -> std::optional<std::string> {
    if (auto r = both_connected(p)) return r;
    if (p.gamma() >= p.max_deg) return "gamma >= Delta";
    return std::nullopt;
  };
  auto girth_value = [](Profile& p) -> nlohmann::json {
    return p.gir.length ? nlohmann::json(*p.gir.length) : nlohmann::json("acyclic");
  };
  auto complement_index = [](Profile& p) { return *p.Dp_of(p.complement_graph()); };

  Part h16i{"H16.i", Scope::kGraph,
            [both_connected](Profile& p, const Instance*) -> std::optional<std::string> {
              if (auto r = both_connected(p)) return r;
              if (p.gamma() < p.max_deg) return "gamma < Delta";
              return need_index(p);
            },
            none, [](Profile& p, const Instance*) {
              return Eval{*p.Dp() <= p.gamma(), {{"D'", *p.Dp()}, {"gamma", p.gamma()}}};
            }};
  h16i.exceptions = {cycle_named(3), cycle_named(4), cycle_named(5)};
  parts.push_back(h16i);
  parts.push_back({"H16.ii", Scope::kGraph,
                   [gamma_below_delta](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (auto r = gamma_below_delta(p)) return r;
                     if (p.forest()) return "forest (girth undefined)";
                     if (!p.gir.at_least(5)) return "girth < 5";
                     return std::nullopt;
                   },
                   none, [=](Profile& p, const Instance*) {
                     const int x = complement_index(p);
                     return Eval{x <= 2, {{"D'(complement)", x}, {"girth", girth_value(p)},
                                          {"gamma", p.gamma()}, {"Delta", p.max_deg}, {"n", p.n}}};
                   }});
  parts.push_back({"H16.iii", Scope::kGraph,
                   [gamma_below_delta](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (auto r = gamma_below_delta(p)) return r;
                     if (p.gir.length != 4) return "girth != 4";
                     return std::nullopt;
                   },
                   none, [=](Profile& p, const Instance*) {
                     const int x = complement_index(p);
                     return Eval{x <= 3, {{"D'(complement)", x}}};
                   }});
  parts.push_back({"H16.iv", Scope::kGraph,
                   [gamma_below_delta](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (auto r = gamma_below_delta(p)) return r;
                     if (p.gir.length != 3) return "girth != 3";
                     if (p.max_deg > p.n - p.max_deg) return "Delta > n - Delta";
                     return std::nullopt;
                   },
                   none, [=](Profile& p, const Instance*) {
                     const int x = complement_index(p);
                     return Eval{x <= 2, {{"D'(complement)", x}}};
                   }});
  parts.push_back({"H16.v", Scope::kGraph,
                   [gamma_below_delta](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (auto r = gamma_below_delta(p)) return r;
                     if (p.gir.length != 3) return "girth != 3";
                     if (p.min_deg != 1) return "delta != 1";
                     return std::nullopt;
                   },
                   none, [](Profile& p, const Instance*) {
                     const int c = p.gamma_of(p.complement_graph());
                     return Eval{c == 2, {{"gamma(complement)", c}}};
                   }});
  parts.push_back({"H16.vi", Scope::kGraph,
                   [both_connected](Profile& p, const Instance*) -> std::optional<std::string> {
                     if (auto r = both_connected(p)) return r;
                     if (!p.tree()) return "not a tree";
                     return std::nullopt;
                   },
                   none, [=](Profile& p, const Instance*) {
                     const int x = complement_index(p);
                     return Eval{x <= 3, {{"D'(complement)", x}}};
                   }});

  parts.push_back({"P31", Scope::kGraph, pre_connected3, none, [](Profile& p, const Instance*) {
                     const int dp = *p.Dp();
                     const int g = p.gamma();
                     return Eval{true, {{"D'<gamma", dp < g},
                                        {"D'=gamma", dp == g},
                                        {"D'>gamma", dp > g},
                                        {"D=gamma", p.D() == g},
                                        {"D", p.D()},
                                        {"D'", dp},
                                        {"gamma", g}}};
                   }});
  return parts;
}

const std::vector<Part>& all_parts() {
  static const std::vector<Part> parts = build_parts();
  return parts;
}

std::string top_level(const std::string& part_id) { return part_id.substr(0, part_id.find('.')); }

std::vector<Instance> instances(Profile& p, Scope scope) {
  std::vector<Instance> out;
  if (scope == Scope::kGammaSets) {
    for (VertexSet s : p.gamma_sets()) {
      out.push_back({s, delete_vertices(p.graph(), s).graph, {{"S", members(s)}}});
    }
  } else if (scope == Scope::kVertices) {
    for (int v = 0; v < p.n; ++v) {
      out.push_back({bit(v), delete_vertices(p.graph(), bit(v)).graph, {{"v", v}}});
    }
  }
  return out;
}

// Evaluates the conclusion over the part's scope; nullopt reason means it
// was applicable at least once.
struct Aggregate {
  Verdict verdict = Verdict::kNotApplicable;
  std::string reason;
  nlohmann::json witness;
};

Aggregate evaluate(const Part& part, Profile& p) {
  Aggregate agg;
  if (part.scope == Scope::kGraph) {
    Eval e = part.conclusion(p, nullptr);
    agg.verdict = e.ok ? Verdict::kHolds : Verdict::kViolated;
    agg.witness = std::move(e.witness);
    return agg;
  }
  int applicable = 0;
  const auto list = instances(p, part.scope);
  for (const Instance& s : list) {
    if (auto r = part.hyp(p, &s)) {
      if (agg.reason.empty()) agg.reason = *r;
      continue;
    }
    ++applicable;
    Eval e = part.conclusion(p, &s);
    if (!e.ok) {
      agg.verdict = Verdict::kViolated;
      agg.witness = std::move(e.witness);
      agg.witness.update(s.label);
      agg.reason.clear();
      return agg;
    }
    if (agg.witness.is_null()) agg.witness = std::move(e.witness);
  }
  if (applicable > 0) {
    agg.verdict = Verdict::kHolds;
    agg.reason.clear();
    agg.witness["instances"] = list.size();
    agg.witness["applicable"] = applicable;
  } else if (agg.reason.empty()) {
    agg.reason = "no instances";
  }
  return agg;
}

CheckOutcome run_part(const Part& part, Profile& p, const std::string& graph6) {
  CheckOutcome out;
  out.check_id = part.id;
  out.graph6 = graph6;
  try {
    if (auto r = part.pre(p, nullptr)) {
      out.verdict = Verdict::kNotApplicable;
      out.reason = *r;
      return out;
    }
    for (const auto& ex : part.exceptions) {
      if (!ex.matches(p)) continue;
      const Aggregate agg = evaluate(part, p);
      out.verdict = Verdict::kNotApplicable;
      out.reason = "named exception: " + ex.name;
      out.named_exception = true;
      out.exception_fails = agg.verdict == Verdict::kViolated;
      out.witness = agg.witness;
      return out;
    }
    Aggregate agg = evaluate(part, p);
    out.verdict = agg.verdict;
    out.reason = std::move(agg.reason);
    out.witness = std::move(agg.witness);
  } catch (const CapabilityError& e) {
    out.verdict = Verdict::kSkipped;
    out.reason = e.what();
    out.witness = nlohmann::json();
  }
  return out;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"H1",  "H2",  "H3",  "H4",  "H5",  "H6",
                                               "H7",  "H8",  "H9",  "H10", "H11", "H12",
                                               "H13", "H14", "H15", "H16", "P31"};
  return ids;
}

std::vector<std::string> part_ids(const std::vector<std::string>& checks) {
  std::vector<std::string> out;
  for (const Part& part : all_parts()) {
    if (std::find(checks.begin(), checks.end(), top_level(part.id)) != checks.end()) {
      out.push_back(part.id);
    }
  }
  return out;
}

std::vector<std::string> parse_check_selection(const std::string& text) {
  if (text == "all") return check_ids();
  std::vector<std::string> wanted;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (std::find(check_ids().begin(), check_ids().end(), item) == check_ids().end()) {
      throw DomainError("unknown check '" + item + "'");
    }
    wanted.push_back(item);
  }
  if (wanted.empty()) throw DomainError("empty check selection");
  std::vector<std::string> out;
  for (const auto& id : check_ids()) {
    if (std::find(wanted.begin(), wanted.end(), id) != wanted.end()) out.push_back(id);
  }
  return out;
}

const LineOrderExceptions& line_order_exceptions() {
  static const LineOrderExceptions found = [] {
    LineOrderExceptions ex;
    const auto levels = enumerate_connected_up_to(7);
    for (std::size_t k = 2; k < levels.size(); ++k) {
      for (const Graph& g : levels[k]) {
        if (automorphism_group(g).order() != automorphism_group(line_graph(g)).order()) {
          ex.discovered.push_back(to_graph6(g));
        }
      }
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& x : ex.discovered) {
      const std::string lx = canonical_form(line_graph(parse_graph6(x)));
      for (const auto& y : ex.discovered) {
        if (lx == y) pairs.emplace_back(x, y);
      }
    }
    if (pairs.size() == 1) {
      ex.q = pairs.front().first;
      ex.line_q = pairs.front().second;
    }
    return ex;
  }();
  return found;
}

std::vector<CheckOutcome> run_checks(const Graph& g, const std::vector<std::string>& checks,
                                     const HarnessOptions& options) {
  Profile p(g, options);
  const std::string g6 = to_graph6(g);
  std::vector<CheckOutcome> out;
  for (const Part& part : all_parts()) {
    if (std::find(checks.begin(), checks.end(), top_level(part.id)) == checks.end()) continue;
    out.push_back(run_part(part, p, g6));
  }
  return out;
}

std::optional<P31Flags> classify_p31(const Graph& g, const HarnessOptions& options) {
  const auto outcomes = run_checks(g, {"P31"}, options);
  const CheckOutcome& o = outcomes.front();
  if (o.verdict != Verdict::kHolds) return std::nullopt;
  P31Flags f;
  f.index_below_gamma = o.witness["D'<gamma"];
  f.index_equals_gamma = o.witness["D'=gamma"];
  f.index_above_gamma = o.witness["D'>gamma"];
  f.number_equals_gamma = o.witness["D=gamma"];
  return f;
}

namespace {

SweepReport run_sweep(const std::vector<Graph>& graphs, const SweepParams& params,
                      nlohmann::ordered_json source) {
  const auto start = std::chrono::steady_clock::now();
  const bool needs_line_orders =
      std::find_if(params.checks.begin(), params.checks.end(), [](const std::string& id) {
        return id == "H7" || id == "H8";
      }) != params.checks.end();
  if (needs_line_orders) line_order_exceptions();

  SweepReport report;
  report.graphs.resize(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      GraphResult& r = report.graphs[i];
      r.graph6 = to_graph6(graphs[i]);
      r.n = graphs[i].order();
      r.m = graphs[i].size();
      r.outcomes = run_checks(graphs[i], params.checks, params.options);
    }
  };
  const int workers = std::max(1, params.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  nlohmann::ordered_json j;
  j["params"] = std::move(source);
  j["params"]["checks"] = params.checks;
  j["params"]["seed"] = params.options.distinguishing.seed;
  j["params"]["all_gamma_sets"] = params.options.all_gamma_sets;

  std::map<int, int> per_order;
  for (const auto& r : report.graphs) ++per_order[r.n];
  nlohmann::ordered_json orders;
  for (const auto& [n, c] : per_order) orders[std::to_string(n)] = c;
  orders["total"] = report.graphs.size();
  j["graphs"] = orders;

  nlohmann::ordered_json counts;
  for (const auto& id : part_ids(params.checks)) {
    counts[id] = {{"holds", 0}, {"na", 0}, {"violated", 0}, {"skipped", 0}};
  }
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  nlohmann::ordered_json exceptions = nlohmann::ordered_json::array();
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  std::map<std::string, int> p31;
  int p31_graphs = 0;
  for (const auto& r : report.graphs) {
    for (const auto& o : r.outcomes) {
      auto& c = counts[o.check_id][to_string(o.verdict)];
      c = c.get<int>() + 1;
      if (o.verdict == Verdict::kViolated) {
        violations.push_back(
            {{"check_id", o.check_id}, {"graph6", o.graph6}, {"n", r.n}, {"witness", o.witness}});
      } else if (o.verdict == Verdict::kSkipped) {
        skipped.push_back({{"check_id", o.check_id}, {"graph6", o.graph6}, {"reason", o.reason}});
      } else if (o.named_exception) {
        exceptions.push_back({{"check_id", o.check_id},
                              {"graph6", o.graph6},
                              {"exception", o.reason.substr(o.reason.find(": ") + 2)},
                              {"conclusion_fails", o.exception_fails},
                              {"witness", o.witness}});
      }
      if (o.check_id == "P31" && o.verdict == Verdict::kHolds) {
        ++p31_graphs;
        for (const char* key : {"D'<gamma", "D'=gamma", "D'>gamma", "D=gamma"}) {
          if (o.witness[key].get<bool>()) ++p31[key];
        }
        if (o.witness["D=gamma"].get<bool>() && o.witness["D'=gamma"].get<bool>()) {
          ++p31["D=gamma and D'=gamma"];
        }
      }
    }
  }
  report.violations = violations.size();
  report.skipped = skipped.size();
  j["counts"] = counts;
  j["violations"] = violations;
  j["exceptions"] = exceptions;
  j["skipped"] = skipped;
  if (needs_line_orders) {
    const auto& s = line_order_exceptions();
    nlohmann::ordered_json h7;
    h7["searched"] = "connected graphs on 2..7 vertices";
    h7["discovered"] = s.discovered;
    h7["Q"] = s.q ? nlohmann::ordered_json(*s.q) : nlohmann::ordered_json();
    h7["L(Q)"] = s.line_q ? nlohmann::ordered_json(*s.line_q) : nlohmann::ordered_json();
    j["line_order_exceptions"] = h7;
  }
  if (std::find(params.checks.begin(), params.checks.end(), "P31") != params.checks.end()) {
    nlohmann::ordered_json buckets;
    buckets["graphs"] = p31_graphs;
    for (const char* key :
         {"D'<gamma", "D'=gamma", "D'>gamma", "D=gamma", "D=gamma and D'=gamma"}) {
      buckets[key] = p31[key];
    }
    j["p31"] = buckets;
  }
  report.json = std::move(j);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SweepReport sweep(const SweepParams& params) {
  if (params.n_min < 1 || params.n_max > kMaxEnumerationOrder || params.n_min > params.n_max) {
    throw DomainError("sweep orders must satisfy 1 <= n_min <= n_max <= " +
                      std::to_string(kMaxEnumerationOrder));
  }
  EnumerationOptions eo;
  eo.min_girth = params.min_girth;
  const auto levels = enumerate_connected_up_to(params.n_max, eo);
  std::vector<Graph> graphs;
  for (int n = params.n_min; n <= params.n_max; ++n) {
    graphs.insert(graphs.end(), levels[n - 1].begin(), levels[n - 1].end());
  }
  nlohmann::ordered_json source;
  source["source"] = "enumeration";
  source["n_min"] = params.n_min;
  source["n_max"] = params.n_max;
  source["min_girth"] =
      params.min_girth ? nlohmann::ordered_json(*params.min_girth) : nlohmann::ordered_json();
  return run_sweep(graphs, params, source);
}

SweepReport sweep_corpus(const std::vector<Graph>& corpus, const SweepParams& params) {
  // Reports name graphs by canonical graph6, so witnesses use that labeling.
  std::vector<Graph> canonical;
  canonical.reserve(corpus.size());
  for (const Graph& g : corpus) canonical.push_back(parse_graph6(canonical_form(g)));
  nlohmann::ordered_json source;
  source["source"] = "corpus";
  return run_sweep(canonical, params, source);
}

std::string sweep_csv(const SweepReport& report, const std::vector<std::string>& checks) {
  const auto ids = part_ids(checks);
  std::ostringstream out;
  out << "graph6,n,m";
  for (const auto& id : ids) out << ',' << id;
  out << '\n';
  for (const auto& r : report.graphs) {
    // graph6 may contain commas only in theory; it never does (63..126
    // excludes ',').
    out << r.graph6 << ',' << r.n << ',' << r.m;
    for (const auto& o : r.outcomes) out << ',' << to_string(o.verdict);
    out << '\n';
  }
  return out.str();
}

}  // namespace symbreak
