#include "gvd/tree_structures.hpp"

#include <algorithm>
#include <numeric>

namespace gvd {

RangeMax::RangeMax(std::vector<std::int64_t> values) : values_(std::move(values)) {
  const auto n = static_cast<std::int32_t>(values_.size());
  std::int32_t levels = 1;
  while ((1 << levels) <= n) ++levels;
  table_.assign(levels, {});
  table_[0].resize(n);
  std::iota(table_[0].begin(), table_[0].end(), 0);
  for (std::int32_t k = 1; k < levels; ++k) {
    const std::int32_t len = 1 << k;
    table_[k].resize(n - len + 1);
    for (std::int32_t i = 0; i + len <= n; ++i)
      table_[k][i] = better(table_[k - 1][i], table_[k - 1][i + len / 2]);
  }
}

std::pair<std::int32_t, std::int64_t> RangeMax::query(std::int32_t lo, std::int32_t hi) const {
  if (lo > hi || lo < 0 || hi >= size()) throw EmptyRange("rmq on empty or invalid range");
  const std::int32_t len = hi - lo + 1;
  std::int32_t k = 0;
  while ((2 << k) <= len) ++k;
  const std::int32_t i = better(table_[k][lo], table_[k][hi - (1 << k) + 1]);
  return {i, values_[i]};
}

LevelAncestor::LevelAncestor(std::span<const Vertex> parent, std::span<const std::int32_t> depth)
    : depth_(depth.begin(), depth.end()) {
  const auto n = static_cast<std::int32_t>(parent.size());
  std::int32_t maxd = 0;
  for (auto d : depth_) maxd = std::max(maxd, d);
  std::int32_t levels = 1;
  while ((1 << levels) <= maxd) ++levels;
  up_.assign(levels, std::vector<Vertex>(n, kNoVertex));
  up_[0].assign(parent.begin(), parent.end());
  for (std::int32_t k = 1; k < levels; ++k)
    for (std::int32_t v = 0; v < n; ++v) {
      Vertex mid = up_[k - 1][v];
      up_[k][v] = mid == kNoVertex ? kNoVertex : up_[k - 1][mid];
    }
}

Vertex LevelAncestor::ancestor(Vertex v, std::int32_t steps) const {
  for (std::int32_t k = 0; steps != 0 && v != kNoVertex; ++k, steps >>= 1)
    if (steps & 1) v = up_[k][v];
  return v;
}

Vertex LevelAncestor::topmost_true(Vertex v, const std::function<bool(Vertex)>& pred) const {
  if (!pred(v)) return kNoVertex;
  // Climb maximal jumps that keep the predicate true.
  for (std::int32_t k = static_cast<std::int32_t>(up_.size()) - 1; k >= 0; --k) {
    const Vertex a = up_[k][v];
    if (a != kNoVertex && pred(a)) v = a;
  }
  return v;
}

SptTree build_spt(const EmbeddedGraph& g, Vertex root) {
  SptTree t;
  t.root = root;
  auto sssp = dijkstra_from(g, root);
  t.dist = std::move(sssp.dist);
  t.parent_arc = std::move(sssp.parent);
  const auto n = g.vertex_count();
  t.parent.assign(n, kNoVertex);
  std::vector<std::int32_t> depth(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (t.parent_arc[v] != kNoArc) t.parent[v] = g.tail(t.parent_arc[v]);

  t.vorder.assign(n, 0);
  t.pre.assign(g.arc_count(), 0);
  std::int32_t counter = 0;

  // CCW-first DFS interleaving arc labels: at each vertex the scan starts just
  // after the reversed incoming arc and ends with it, so the window
  // (pre(pu), pre(up)) brackets exactly the labels assigned inside u's fan.
  struct Frame {
    Vertex v;
    ArcId first;  // first arc to scan
    ArcId cur;
    bool started;
  };
  std::vector<Frame> stack;
  auto open = [&](Vertex v) {
    t.vorder[v] = ++counter;
    ArcId in = t.parent_arc[v];
    ArcId first = in == kNoArc ? g.outgoing(v)[0] : g.rot_next(g.rev(in));
    stack.push_back({v, first, first, false});
  };
  open(root);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.started && f.cur == f.first) {
      stack.pop_back();
      continue;
    }
    f.started = true;
    const ArcId a = f.cur;
    f.cur = g.rot_next(f.cur);
    t.pre[a] = ++counter;
    const Vertex w = g.head(a);
    if (t.parent_arc[w] == a) {
      depth[w] = depth[f.v] + 1;
      open(w);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    GVD_CHECK(t.vorder[v] > 0, "spt did not reach all vertices");

  t.dist_rank.assign(n, 0);
  std::vector<Vertex> by_dist(n);
  std::iota(by_dist.begin(), by_dist.end(), 0);
  std::sort(by_dist.begin(), by_dist.end(), [&](Vertex a, Vertex b) {
    if (t.dist[a] != t.dist[b]) return t.dist[a] < t.dist[b];
    return a < b;
  });
  for (std::int32_t i = 0; i < n; ++i) t.dist_rank[by_dist[i]] = i;

  t.la = LevelAncestor(t.parent, depth);
  return t;
}

namespace {

bool edge_in_primal_tree(const EmbeddedGraph& g, const SptTree& t, ArcId a) {
  return t.parent_arc[g.head(a)] == a || t.parent_arc[g.head(g.rev(a))] == g.rev(a);
}

}  // namespace

Cotree build_cotree(const EmbeddedGraph& g, const SptTree& t, FaceId root_hole) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != t.root && t.parent_arc[v] == kNoArc)
      throw TreeNotSpanning("shortest path tree does not span the graph");

  Cotree c;
  const auto nf = g.face_count();
  c.root = root_hole;
  c.parent.assign(nf, kNoFace);
  c.parent_arc.assign(nf, kNoArc);

  // BFS over duals of non-tree edges.
  std::vector<FaceId> bfs{root_hole};
  std::vector<std::uint8_t> vis(nf, 0);
  vis[root_hole] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const FaceId f = bfs[i];
    for (ArcId a : g.face_arcs(f)) {
      if (edge_in_primal_tree(g, t, a)) continue;
      const FaceId f2 = g.right_face(a);  // dual arc a: f -> f2
      if (vis[f2]) continue;
      vis[f2] = 1;
      c.parent[f2] = f;
      c.parent_arc[f2] = a;
      bfs.push_back(f2);
    }
  }
  GVD_CHECK(static_cast<std::int32_t>(bfs.size()) == nf, "cotree does not span the dual");

  // Face labels from the site's distance ranks (holes excluded).
  c.face_label.assign(nf, -1);
  c.face_label_witness.assign(nf, kNoVertex);
  for (FaceId f = 0; f < nf; ++f) {
    if (g.is_hole(f)) continue;
    for (ArcId a : g.face_arcs(f)) {
      const Vertex v = g.tail(a);
      if (c.face_label[f] < t.dist_rank[v]) {
        c.face_label[f] = t.dist_rank[v];
        c.face_label_witness[f] = v;
      }
    }
  }

  // Children lists, Euler order, subtree maxima.
  std::vector<std::int32_t> child_start(nf + 1, 0);
  for (FaceId f = 0; f < nf; ++f)
    if (c.parent[f] != kNoFace) ++child_start[c.parent[f] + 1];
  for (FaceId f = 0; f < nf; ++f) child_start[f + 1] += child_start[f];
  std::vector<FaceId> children(nf > 0 ? nf - 1 : 0);
  {
    std::vector<std::int32_t> fill(child_start.begin(), child_start.end() - 1);
    for (FaceId f = 0; f < nf; ++f)
      if (c.parent[f] != kNoFace) children[fill[c.parent[f]]++] = f;
  }
  c.tin.assign(nf, 0);
  c.tout.assign(nf, 0);
  c.order.clear();
  c.order.reserve(nf);
  {
    std::vector<std::pair<FaceId, std::int32_t>> st{{root_hole, 0}};
    while (!st.empty()) {
      auto& [f, idx] = st.back();
      if (idx == 0) {
        c.tin[f] = static_cast<std::int32_t>(c.order.size());
        c.order.push_back(f);
      }
      const std::int32_t lo = child_start[f];
      const std::int32_t hi = child_start[f + 1];
      if (lo + idx == hi) {
        c.tout[f] = static_cast<std::int32_t>(c.order.size()) - 1;
        st.pop_back();
      } else {
        FaceId ch = children[lo + idx];
        ++idx;
        st.push_back({ch, 0});
      }
    }
  }

  c.subtree_max.assign(nf, -1);
  c.subtree_max_witness.assign(nf, kNoVertex);
  for (auto it = c.order.rbegin(); it != c.order.rend(); ++it) {
    const FaceId f = *it;
    if (c.face_label[f] > c.subtree_max[f]) {
      c.subtree_max[f] = c.face_label[f];
      c.subtree_max_witness[f] = c.face_label_witness[f];
    }
    const FaceId p = c.parent[f];
    if (p != kNoFace && c.subtree_max[f] > c.subtree_max[p]) {
      c.subtree_max[p] = c.subtree_max[f];
      c.subtree_max_witness[p] = c.subtree_max_witness[f];
    }
  }

  // Hole depths: tree distance to each hole dual.
  const auto& holes = g.holes();
  c.hole_depth.assign(holes.size(), std::vector<std::int32_t>(nf, 0));
  for (std::size_t h = 0; h < holes.size(); ++h) {
    auto& hd = c.hole_depth[h];
    std::vector<FaceId> q{holes[h]};
    std::vector<std::uint8_t> seen(nf, 0);
    seen[holes[h]] = 1;
    hd[holes[h]] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const FaceId f = q[i];
      auto push = [&](FaceId nbr) {
        if (nbr != kNoFace && !seen[nbr]) {
          seen[nbr] = 1;
          hd[nbr] = hd[f] + 1;
          q.push_back(nbr);
        }
      };
      push(c.parent[f]);
      for (std::int32_t ci = child_start[f]; ci < child_start[f + 1]; ++ci) push(children[ci]);
    }
  }

  c.on_skeleton.assign(nf, 0);
  for (FaceId h : holes)
    for (FaceId f = h; f != kNoFace; f = c.parent[f]) {
      if (c.on_skeleton[f]) break;
      c.on_skeleton[f] = 1;
    }

  // Segment tree over tin-ordered labels.
  c.seg_n_ = nf;
  c.seg_.assign(2 * nf, -1);
  c.seg_wit_.assign(2 * nf, kNoVertex);
  for (std::int32_t i = 0; i < nf; ++i) {
    c.seg_[nf + i] = c.face_label[c.order[i]];
    c.seg_wit_[nf + i] = c.face_label_witness[c.order[i]];
  }
  for (std::int32_t i = nf - 1; i >= 1; --i) {
    if (c.seg_[2 * i] >= c.seg_[2 * i + 1]) {
      c.seg_[i] = c.seg_[2 * i];
      c.seg_wit_[i] = c.seg_wit_[2 * i];
    } else {
      c.seg_[i] = c.seg_[2 * i + 1];
      c.seg_wit_[i] = c.seg_wit_[2 * i + 1];
    }
  }
  return c;
}

std::pair<std::int32_t, Vertex> Cotree::range_best(std::int32_t lo, std::int32_t hi) const {
  std::int32_t best = -1;
  Vertex wit = kNoVertex;
  if (lo > hi) return {best, wit};
  for (std::int32_t l = lo + seg_n_, r = hi + seg_n_ + 1; l < r; l >>= 1, r >>= 1) {
    if (l & 1) {
      if (seg_[l] > best) {
        best = seg_[l];
        wit = seg_wit_[l];
      }
      ++l;
    }
    if (r & 1) {
      --r;
      if (seg_[r] > best) {
        best = seg_[r];
        wit = seg_wit_[r];
      }
    }
  }
  return {best, wit};
}

}  // namespace gvd
