#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gvd/errors.hpp"
#include "gvd/exact.hpp"

namespace gvd {

using Vertex = std::int32_t;
using ArcId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;
inline constexpr FaceId kNoFace = -1;

// Compile-time cap on the number of holes a piece may carry. Per-hole tables
// are sized by the actual hole count; this is only the hard ceiling.
inline constexpr int kMaxHoles = 6;

struct MissingReverse : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct RotationMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotPlanarEmbedding : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct DisconnectedGraph : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct GraphSpec {
  struct ArcSpec {
    Vertex tail = kNoVertex;
    Vertex head = kNoVertex;
    ArcId rev = kNoArc;
    std::int64_t len = 0;
  };
  std::int32_t n = 0;
  std::vector<ArcSpec> arcs;
  std::vector<std::vector<ArcId>> rotation;  // CCW order of outgoing arcs per vertex
  std::vector<FaceId> holes;                 // ids under the deterministic face walk
  std::vector<std::pair<double, double>> coords;  // optional, for rendering only
};

// Directed planar embedded multigraph with paired antiparallel arcs, derived
// faces and the implicit dual. Immutable once built; triangulate() and
// perturbed() return new graphs.
//
// Conventions, fixed once for the whole library:
//  - rotation[v] lists outgoing arcs in counterclockwise order;
//  - the face cycle continuing arc a is rot_next(rev(a)), which traces the
//    face to the LEFT of a;
//  - the dual arc of a runs from left_face(a) to right_face(a) = left_face(rev(a));
//  - face ids are assigned by walking faces from the lowest unvisited arc id.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  // Validates the spec and derives faces. Throws MissingReverse,
  // RotationMismatch, NotPlanarEmbedding or DisconnectedGraph.
  static EmbeddedGraph build(GraphSpec spec);

  std::int32_t vertex_count() const { return n_; }
  std::int32_t arc_count() const { return static_cast<std::int32_t>(tail_.size()); }
  std::int32_t edge_count() const { return arc_count() / 2; }
  std::int32_t face_count() const { return static_cast<std::int32_t>(face_first_arc_.size()); }

  Vertex tail(ArcId a) const { return tail_[a]; }
  Vertex head(ArcId a) const { return head_[a]; }
  ArcId rev(ArcId a) const { return rev_[a]; }
  const Exact& length(ArcId a) const { return len_[a]; }
  bool is_diagonal(ArcId a) const { return diagonal_[a] != 0; }
  std::int64_t diagonal_threshold() const { return diagonal_threshold_; }

  // Rotation access. rot_next/rot_prev take an outgoing arc of v to the next
  // outgoing arc of v counterclockwise/clockwise.
  std::span<const ArcId> outgoing(Vertex v) const {
    return {rot_arcs_.data() + rot_start_[v], static_cast<size_t>(rot_start_[v + 1] - rot_start_[v])};
  }
  ArcId rot_next(ArcId a) const { return rot_next_[a]; }
  ArcId rot_prev(ArcId a) const { return rot_prev_[a]; }

  // Face structure.
  ArcId face_next(ArcId a) const { return rot_next_[rev_[a]]; }
  FaceId left_face(ArcId a) const { return face_of_[a]; }
  FaceId right_face(ArcId a) const { return face_of_[rev_[a]]; }
  std::span<const ArcId> face_arcs(FaceId f) const {
    return {face_arcs_.data() + face_first_arc_[f],
            static_cast<size_t>((f + 1 < face_count() ? face_first_arc_[f + 1]
                                                      : static_cast<std::int32_t>(face_arcs_.size())) -
                                face_first_arc_[f])};
  }
  std::int32_t face_size(FaceId f) const { return static_cast<std::int32_t>(face_arcs(f).size()); }
  bool is_hole(FaceId f) const { return hole_index_[f] >= 0; }
  int hole_index(FaceId f) const { return hole_index_[f]; }  // -1 if not a hole
  const std::vector<FaceId>& holes() const { return holes_; }

  // Dual view: the dual arc of a is a itself, directed left_face(a) -> right_face(a).
  FaceId dual_tail(ArcId a) const { return left_face(a); }
  FaceId dual_head(ArcId a) const { return right_face(a); }

  // Triangulates every non-hole face with "infinite" length diagonals
  // ((n+1)*maxlen+1 in the base component). Original arc ids are preserved.
  EmbeddedGraph triangulated() const;

  // Copy with fresh deterministic tiebreak words on every arc.
  EmbeddedGraph perturbed(std::uint64_t seed) const;

  // Copy with lengths reduced by a vertex potential: len'(uv) = len(uv) + phi(u) - phi(v).
  EmbeddedGraph reduced_by(const std::vector<std::int64_t>& phi) const;

  bool has_coords() const { return !coords_.empty(); }
  const std::vector<std::pair<double, double>>& coords() const { return coords_; }

  GraphSpec to_spec() const;

 private:
  void derive_faces();
  void check_euler() const;

  std::int32_t n_ = 0;
  std::vector<Vertex> tail_, head_;
  std::vector<ArcId> rev_;
  std::vector<Exact> len_;
  std::vector<std::uint8_t> diagonal_;
  std::int64_t diagonal_threshold_ = 0;  // 0 when untriangulated

  std::vector<std::int32_t> rot_start_;  // n+1 offsets into rot_arcs_
  std::vector<ArcId> rot_arcs_;
  std::vector<ArcId> rot_next_, rot_prev_;

  std::vector<FaceId> face_of_;             // left face per arc
  std::vector<std::int32_t> face_first_arc_;  // face -> offset into face_arcs_
  std::vector<ArcId> face_arcs_;              // arcs in face-cycle order
  std::vector<int> hole_index_;               // face -> hole slot or -1
  std::vector<FaceId> holes_;

  std::vector<std::pair<double, double>> coords_;
};

}  // namespace gvd
