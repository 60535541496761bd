#include "gvd/shortest_paths.hpp"

#include <algorithm>

#include "gvd/counters.hpp"

namespace gvd {
namespace {

// Indexed 4-ary min-heap keyed by dist[]; ties broken by vertex id so runs
// are schedule-independent.
class VertexHeap {
 public:
  explicit VertexHeap(const std::vector<Exact>& key, std::int32_t n) : key_(key) {
    pos_.assign(n, -1);
    heap_.reserve(64);
  }

  bool empty() const { return heap_.empty(); }

  void push_or_update(Vertex v) {
    if (pos_[v] < 0) {
      pos_[v] = static_cast<std::int32_t>(heap_.size());
      heap_.push_back(v);
    }
    sift_up(pos_[v]);
  }

  Vertex pop() {
    Vertex top = heap_[0];
    pos_[top] = -1;
    Vertex last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      pos_[last] = 0;
      sift_down(0);
    }
    return top;
  }

 private:
  bool less(Vertex a, Vertex b) const {
    const Exact& ka = key_[a];
    const Exact& kb = key_[b];
    if (ka.base != kb.base) return ka.base < kb.base;
    if (ka.tie != kb.tie) return ka.tie < kb.tie;
    return a < b;
  }
  void sift_up(std::int32_t i) {
    Vertex v = heap_[i];
    while (i > 0) {
      std::int32_t p = (i - 1) >> 2;
      if (!less(v, heap_[p])) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    pos_[v] = i;
  }
  void sift_down(std::int32_t i) {
    Vertex v = heap_[i];
    const auto n = static_cast<std::int32_t>(heap_.size());
    for (;;) {
      std::int32_t c = (i << 2) + 1;
      if (c >= n) break;
      std::int32_t best = c;
      std::int32_t end = std::min(c + 4, n);
      for (std::int32_t j = c + 1; j < end; ++j)
        if (less(heap_[j], heap_[best])) best = j;
      if (!less(heap_[best], v)) break;
      heap_[i] = heap_[best];
      pos_[heap_[i]] = i;
      i = best;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<Exact>& key_;
  std::vector<std::int32_t> pos_;
  std::vector<Vertex> heap_;
};

}  // namespace

SsspResult dijkstra(const EmbeddedGraph& g, std::span<const std::pair<Vertex, Exact>> seeds,
                    const DijkstraOptions& opt) {
  const auto n = g.vertex_count();
  SsspResult r;
  r.dist.assign(n, kUnreached);
  r.parent.assign(n, kNoArc);
  VertexHeap heap(r.dist, n);
  for (const auto& [v, d] : seeds) {
    GVD_CHECK_INPUT(v >= 0 && v < n, "seed vertex out of range");
    if (d < r.dist[v]) {
      r.dist[v] = d;
      heap.push_or_update(v);
    }
  }
  ++counters().dijkstra_runs;
  std::vector<std::uint8_t> done(n, 0);
  while (!heap.empty()) {
    const Vertex u = heap.pop();
    done[u] = 1;
    const Exact du = r.dist[u];
    for (ArcId b : g.outgoing(u)) {
      const ArcId a = opt.reversed ? g.rev(b) : b;
      const Exact& len = g.length(a);
      if (len.base < 0) throw NegativeArc("negative arc length in dijkstra");
      const Vertex w = g.head(b);
      if (done[w]) continue;
      Exact cand = du + len;
      if (cand < r.dist[w]) {
        r.dist[w] = cand;
        r.parent[w] = a;
        heap.push_or_update(w);
      } else if (opt.detect_ties && !is_unreached(r.dist[w]) && cand == r.dist[w] &&
                 r.parent[w] != a) {
        throw TieDetected("equal shortest path alternatives; re-perturb");
      }
    }
  }
  return r;
}

SsspResult dijkstra_from(const EmbeddedGraph& g, Vertex source, const DijkstraOptions& opt) {
  std::pair<Vertex, Exact> seed{source, Exact{}};
  return dijkstra(g, {&seed, 1}, opt);
}

std::vector<std::int64_t> price_function(const EmbeddedGraph& g) {
  const auto n = g.vertex_count();
  const auto m = g.arc_count();
  bool any_negative = false;
  for (ArcId a = 0; a < m; ++a)
    if (g.length(a).base < 0) any_negative = true;
  std::vector<std::int64_t> phi(n, 0);
  if (!any_negative) return phi;

  // Bellman-Ford from a virtual source connected to every vertex with a
  // zero-length arc; phi = resulting distances.
  for (std::int32_t round = 0;; ++round) {
    bool changed = false;
    for (ArcId a = 0; a < m; ++a) {
      const std::int64_t cand = phi[g.tail(a)] + g.length(a).base;
      if (cand < phi[g.head(a)]) {
        phi[g.head(a)] = cand;
        changed = true;
      }
    }
    if (!changed) break;
    if (round >= n) throw NegativeCycle("negative-length cycle detected");
  }
  return phi;
}

}  // namespace gvd
