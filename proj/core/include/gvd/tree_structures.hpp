#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gvd/embedded_graph.hpp"
#include "gvd/shortest_paths.hpp"

namespace gvd {

struct EmptyRange : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Static range maximum: O(n log n) sparse table, O(1) query.
// Returns (index, value); the leftmost maximising index on ties.
class RangeMax {
 public:
  RangeMax() = default;
  explicit RangeMax(std::vector<std::int64_t> values);

  std::int32_t size() const { return static_cast<std::int32_t>(values_.size()); }
  std::pair<std::int32_t, std::int64_t> query(std::int32_t lo, std::int32_t hi) const;  // inclusive

 private:
  std::int32_t better(std::int32_t i, std::int32_t j) const {
    return values_[j] > values_[i] ? j : i;
  }
  std::vector<std::int64_t> values_;
  std::vector<std::vector<std::int32_t>> table_;  // table_[k][i]: argmax over [i, i+2^k)
};

// Binary-lifting level ancestors plus the monotone-predicate search used by
// the interval mechanism.
class LevelAncestor {
 public:
  LevelAncestor() = default;
  LevelAncestor(std::span<const Vertex> parent, std::span<const std::int32_t> depth);

  Vertex ancestor(Vertex v, std::int32_t steps) const;
  std::int32_t depth(Vertex v) const { return depth_[v]; }

  // Topmost (nearest to the root) ancestor of v where pred holds, given that
  // pred is false on a prefix of the root-to-v path and true from some point
  // down to v (pred(v) must hold). Returns kNoVertex if pred(v) is false.
  Vertex topmost_true(Vertex v, const std::function<bool(Vertex)>& pred) const;

 private:
  std::vector<std::int32_t> depth_;
  std::vector<std::vector<Vertex>> up_;
};

// Shortest-path tree of one site in a piece, with CCW-first preorder labels
// for every arc of the graph and level-ancestor jumps.
struct SptTree {
  Vertex root = kNoVertex;
  std::vector<Exact> dist;
  std::vector<ArcId> parent_arc;     // arc parent(v) -> v
  std::vector<Vertex> parent;
  std::vector<std::int32_t> vorder;  // preorder index per vertex
  std::vector<std::int32_t> pre;     // label per arc (all arcs, distinct, 1-based)
  std::vector<std::int32_t> dist_rank;  // rank of dist among all vertices (0 = nearest)
  LevelAncestor la;

  bool is_tree_arc(ArcId a, const EmbeddedGraph& g) const {
    return parent_arc[g.head(a)] == a;
  }
};

SptTree build_spt(const EmbeddedGraph& g, Vertex root);

// Cotree of a shortest-path tree, rooted at the dual of a designated hole.
// Carries the decorations the max-query machinery needs.
struct TreeNotSpanning : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct Cotree {
  FaceId root = kNoFace;                  // dual vertex of the root hole
  std::vector<FaceId> parent;             // per face
  std::vector<ArcId> parent_arc;          // primal arc whose dual runs parent -> face
  std::vector<std::int32_t> subtree_max;  // max face label rank in dual subtree
  std::vector<Vertex> subtree_max_witness;
  std::vector<std::int32_t> face_label;   // max dist_rank over incident vertices; -1 on holes
  std::vector<Vertex> face_label_witness;
  std::vector<std::vector<std::int32_t>> hole_depth;  // [hole][face]: edges to hole dual
  std::vector<std::uint8_t> on_skeleton;  // face lies on some root-to-hole-dual path
  std::vector<std::int32_t> tin, tout;    // Euler intervals (preorder in-times)
  std::vector<FaceId> order;              // faces by tin

  // Segment tree over tin-ordered face labels for subtree / exclusion maxima.
  std::pair<std::int32_t, Vertex> range_best(std::int32_t lo, std::int32_t hi) const;  // inclusive
  std::vector<std::int32_t> seg_;    // max rank
  std::vector<Vertex> seg_wit_;
  std::int32_t seg_n_ = 0;

  bool edge_in_cotree(ArcId a, const EmbeddedGraph& g) const {
    FaceId l = g.left_face(a), r = g.right_face(a);
    return parent[l] == r ? parent_arc[l] == g.rev(a) || parent_arc[l] == a
           : parent[r] == l && (parent_arc[r] == a || parent_arc[r] == g.rev(a));
  }
  // The dual child endpoint of a cotree edge given one incident face, or
  // kNoFace if the edge is not parent/child between these faces.
  FaceId child_end(FaceId f, FaceId gface) const {
    if (parent[f] == gface) return f;
    if (parent[gface] == f) return gface;
    return kNoFace;
  }
};

Cotree build_cotree(const EmbeddedGraph& g, const SptTree& t, FaceId root_hole);

}  // namespace gvd
