#include "symbreak/enumeration.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "symbreak/automorphism.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak {
namespace {

// dist[u] has bit w set when d(u, w) <= limit.
std::vector<VertexSet> balls(const Graph& g, int limit) {
  std::vector<VertexSet> out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    VertexSet seen = bit(u);
    VertexSet frontier = seen;
    for (int r = 0; r < limit && frontier != 0; ++r) {
      VertexSet next = 0;
      for (int v : set_members(frontier)) next |= g.row(v);
      frontier = next & ~seen;
      seen |= next;
    }
    out[u] = seen;
  }
  return out;
}

std::vector<Graph> extend_level(const std::vector<Graph>& previous,
                                const EnumerationOptions& options) {
  std::unordered_set<std::string> seen;
  for (const Graph& g : previous) {
    const int n = g.order();
    // A new vertex joined to u and w closes a cycle of length d(u,w) + 2.
    std::vector<VertexSet> too_close;
    if (options.min_girth) too_close = balls(g, *options.min_girth - 3);
    std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
    rows.push_back(0);
    for (VertexSet s = 1; s <= all_vertices(n); ++s) {
      if (options.min_girth) {
        bool ok = true;
        for (int u : set_members(s)) {
          if ((too_close[u] & s) != bit(u)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      for (int u = 0; u < n; ++u) {
        rows[u] = g.row(u) | (((s >> u) & 1U) ? bit(n) : 0);
      }
      rows[n] = s;
      seen.insert(canonical_form(Graph::from_rows(rows)));
    }
  }
  std::vector<std::string> forms(seen.begin(), seen.end());
  std::sort(forms.begin(), forms.end());
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(parse_graph6(f));
  return out;
}

}  // namespace

std::vector<std::vector<Graph>> enumerate_connected_up_to(int n_max,
                                                          const EnumerationOptions& options) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder) {
    throw DomainError("enumeration order must be in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<std::vector<Graph>> levels;
  levels.push_back({empty_graph(1)});
  for (int n = 2; n <= n_max; ++n) levels.push_back(extend_level(levels.back(), options));
  return levels;
}

std::vector<Graph> enumerate_connected(int n, const EnumerationOptions& options) {
  return enumerate_connected_up_to(n, options).back();
}

}  // namespace symbreak
