#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gvd/embedded_graph.hpp"
#include "gvd/generators.hpp"
#include "gvd/shortest_paths.hpp"

namespace gvd::testutil {

// Unit triangle with the inner face first (face 0) and outer face 1.
inline GraphSpec triangle_spec(std::int64_t len = 1) {
  GraphSpec s;
  s.n = 3;
  s.arcs = {
      {0, 1, 1, len}, {1, 0, 0, len}, {1, 2, 3, len},
      {2, 1, 2, len}, {2, 0, 5, len}, {0, 2, 4, len},
  };
  s.rotation = {{0, 5}, {2, 1}, {4, 3}};
  return s;
}

// Checks that the duals of `arcs` form a single simple cycle: every dual
// vertex incident to exactly two of them (one in, one out), connected.
inline bool is_simple_dual_cycle(const EmbeddedGraph& g, const std::vector<ArcId>& arcs) {
  if (arcs.empty()) return false;
  std::map<FaceId, std::pair<int, int>> deg;  // out, in
  for (ArcId a : arcs) {
    deg[g.dual_tail(a)].first++;
    deg[g.dual_head(a)].second++;
  }
  for (auto& [f, d] : deg)
    if (d.first != 1 || d.second != 1) return false;
  // connectivity: follow successor by matching head to tail
  std::map<FaceId, ArcId> out_at;
  for (ArcId a : arcs) out_at[g.dual_tail(a)] = a;
  std::set<ArcId> seen;
  ArcId cur = arcs[0];
  while (seen.insert(cur).second) cur = out_at[g.dual_head(cur)];
  return seen.size() == arcs.size();
}

// Triangulated, perturbed instance ready for piece-level machinery.
inline EmbeddedGraph make_piece_graph(const GraphSpec& spec, std::uint64_t seed) {
  return EmbeddedGraph::build(spec).triangulated().perturbed(seed);
}

}  // namespace gvd::testutil
