#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gvd/embedded_graph.hpp"

namespace gvd {

struct NegativeArc : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NegativeCycle : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct SsspResult {
  std::vector<Exact> dist;     // kUnreached where not reached
  std::vector<ArcId> parent;   // arc into each vertex; kNoArc at sources / unreached
};

struct DijkstraOptions {
  bool reversed = false;     // compute distances TO the seeds instead of from them
  bool detect_ties = false;  // throw TieDetected when two equal alternatives meet
};

// Multi-seed Dijkstra over exact lengths. Seeds are (vertex, initial label);
// a plain single-source run passes {(s, 0)}.
SsspResult dijkstra(const EmbeddedGraph& g, std::span<const std::pair<Vertex, Exact>> seeds,
                    const DijkstraOptions& opt = {});
SsspResult dijkstra_from(const EmbeddedGraph& g, Vertex source, const DijkstraOptions& opt = {});

// Feasible price function: phi with len(uv) + phi(u) - phi(v) >= 0 for every
// arc. Throws NegativeCycle. All-zero when lengths are already nonnegative.
std::vector<std::int64_t> price_function(const EmbeddedGraph& g);

// Deterministic perturbation (fresh tiebreak word per arc). Distances keep
// their base components; see EmbeddedGraph::perturbed.
inline EmbeddedGraph perturb(const EmbeddedGraph& g, std::uint64_t seed) {
  return g.perturbed(seed);
}

}  // namespace gvd
