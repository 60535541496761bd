#include "gvd/embedded_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "gvd/rng.hpp"

namespace gvd {

EmbeddedGraph EmbeddedGraph::build(GraphSpec spec) {
  EmbeddedGraph g;
  g.n_ = spec.n;
  GVD_CHECK_INPUT(spec.n > 0, "graph must have at least one vertex");
  const auto m = static_cast<std::int32_t>(spec.arcs.size());
  GVD_CHECK_INPUT(m >= 2 && m % 2 == 0, "arc list must consist of antiparallel pairs");

  g.tail_.resize(m);
  g.head_.resize(m);
  g.rev_.resize(m);
  g.len_.resize(m);
  g.diagonal_.assign(m, 0);
  for (std::int32_t a = 0; a < m; ++a) {
    const auto& s = spec.arcs[a];
    GVD_CHECK_INPUT(s.tail >= 0 && s.tail < spec.n && s.head >= 0 && s.head < spec.n,
                    "arc endpoint out of range");
    GVD_CHECK_INPUT(s.tail != s.head, "self-loops are not supported");
    if (s.rev < 0 || s.rev >= m || s.rev == a) throw MissingReverse("arc has no valid reverse");
    const auto& r = spec.arcs[s.rev];
    if (r.rev != a || r.tail != s.head || r.head != s.tail)
      throw MissingReverse("reverse arc does not mirror arc");
    GVD_CHECK_INPUT(std::llabs(s.len) < (std::int64_t(1) << 40), "arc length magnitude too large");
    g.tail_[a] = s.tail;
    g.head_[a] = s.head;
    g.rev_[a] = s.rev;
    g.len_[a] = Exact::from_base(s.len);
  }

  // Rotations: each vertex lists exactly its outgoing arcs, once each.
  if (static_cast<std::int32_t>(spec.rotation.size()) != spec.n)
    throw RotationMismatch("rotation must have one list per vertex");
  g.rot_start_.assign(spec.n + 1, 0);
  g.rot_arcs_.reserve(m);
  std::vector<std::uint8_t> seen(m, 0);
  for (Vertex v = 0; v < spec.n; ++v) {
    g.rot_start_[v] = static_cast<std::int32_t>(g.rot_arcs_.size());
    for (ArcId a : spec.rotation[v]) {
      if (a < 0 || a >= m || g.tail_[a] != v || seen[a])
        throw RotationMismatch("rotation entry is not a fresh outgoing arc of its vertex");
      seen[a] = 1;
      g.rot_arcs_.push_back(a);
    }
  }
  g.rot_start_[spec.n] = static_cast<std::int32_t>(g.rot_arcs_.size());
  if (static_cast<std::int32_t>(g.rot_arcs_.size()) != m)
    throw RotationMismatch("rotation lists do not cover all arcs");

  g.rot_next_.resize(m);
  g.rot_prev_.resize(m);
  for (Vertex v = 0; v < spec.n; ++v) {
    auto out = g.outgoing(v);
    const auto k = static_cast<std::int32_t>(out.size());
    for (std::int32_t i = 0; i < k; ++i) {
      g.rot_next_[out[i]] = out[(i + 1) % k];
      g.rot_prev_[out[i]] = out[(i + k - 1) % k];
    }
  }

  // Connectivity over the undirected skeleton.
  {
    std::vector<std::uint8_t> vis(spec.n, 0);
    std::vector<Vertex> stack{0};
    vis[0] = 1;
    std::int32_t cnt = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (ArcId a : g.outgoing(v)) {
        Vertex w = g.head_[a];
        if (!vis[w]) {
          vis[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
      }
    }
    if (cnt != spec.n) throw DisconnectedGraph("graph is not connected");
  }

  g.derive_faces();
  g.check_euler();

  g.hole_index_.assign(g.face_count(), -1);
  for (FaceId f : spec.holes) {
    GVD_CHECK_INPUT(f >= 0 && f < g.face_count(), "hole face id out of range");
    GVD_CHECK_INPUT(g.hole_index_[f] < 0, "duplicate hole face id");
    g.hole_index_[f] = static_cast<int>(g.holes_.size());
    g.holes_.push_back(f);
  }
  GVD_CHECK_INPUT(static_cast<int>(g.holes_.size()) <= kMaxHoles, "too many holes");

  if (!spec.coords.empty()) {
    GVD_CHECK_INPUT(static_cast<std::int32_t>(spec.coords.size()) == spec.n,
                    "coords must cover every vertex");
    g.coords_ = std::move(spec.coords);
  }
  return g;
}

void EmbeddedGraph::derive_faces() {
  const auto m = arc_count();
  face_of_.assign(m, kNoFace);
  face_first_arc_.clear();
  face_arcs_.clear();
  face_arcs_.reserve(m);
  for (ArcId a0 = 0; a0 < m; ++a0) {
    if (face_of_[a0] != kNoFace) continue;
    const FaceId f = static_cast<FaceId>(face_first_arc_.size());
    face_first_arc_.push_back(static_cast<std::int32_t>(face_arcs_.size()));
    ArcId a = a0;
    do {
      face_of_[a] = f;
      face_arcs_.push_back(a);
      a = face_next(a);
    } while (a != a0);
  }
}

void EmbeddedGraph::check_euler() const {
  const std::int64_t euler =
      std::int64_t(n_) - std::int64_t(edge_count()) + std::int64_t(face_count());
  if (euler != 2)
    throw NotPlanarEmbedding("rotation system is not a planar embedding (V-E+F=" +
                             std::to_string(euler) + ")");
}

EmbeddedGraph EmbeddedGraph::triangulated() const {
  std::int64_t maxlen = 1;
  for (const auto& l : len_) maxlen = std::max<std::int64_t>(maxlen, std::llabs(l.base));
  const std::int64_t inf = (std::int64_t(n_) + 1) * maxlen + 1;

  // Mutable rotation as circular lists keyed by arc id.
  std::vector<ArcId> nxt = rot_next_, prv = rot_prev_;
  std::vector<Vertex> tail = tail_, head = head_;
  std::vector<ArcId> rv = rev_;
  std::vector<std::int64_t> len(arc_count());
  for (std::int32_t a = 0; a < arc_count(); ++a) len[a] = len_[a].base;
  std::vector<std::uint8_t> diag(arc_count(), 0);
  for (std::int32_t a = 0; a < arc_count(); ++a) diag[a] = diagonal_[a];

  auto add_arc = [&](Vertex t, Vertex h) {
    ArcId a = static_cast<ArcId>(tail.size());
    tail.push_back(t);
    head.push_back(h);
    rv.push_back(a + 1);
    len.push_back(inf);
    diag.push_back(1);
    tail.push_back(h);
    head.push_back(t);
    rv.push_back(a);
    len.push_back(inf);
    diag.push_back(1);
    nxt.resize(tail.size());
    prv.resize(tail.size());
    return a;
  };
  auto insert_before = [&](ArcId pos, ArcId a) {  // a into pos's rotation slot
    ArcId p = prv[pos];
    nxt[p] = a;
    prv[a] = p;
    nxt[a] = pos;
    prv[pos] = a;
  };

  for (FaceId f = 0; f < face_count(); ++f) {
    if (is_hole(f)) continue;
    auto cyc = face_arcs(f);
    if (cyc.size() <= 3) continue;
    // Face cycle as a circular list of arcs; clip corners until a triangle
    // remains. A corner at head(e) is clippable unless the diagonal would be
    // a self-loop.
    std::vector<ArcId> ring(cyc.begin(), cyc.end());
    std::size_t i = 0;
    std::size_t guard = 0;
    const std::size_t guard_limit = 4 * ring.size() * ring.size() + 16;
    while (ring.size() > 3) {
      GVD_CHECK(guard++ < guard_limit, "triangulation failed to make progress");
      const ArcId e1 = ring[i % ring.size()];
      const ArcId e2 = ring[(i + 1) % ring.size()];
      const Vertex a = tail[e1], c = head[e2];
      if (a == c) {  // skip; clipping here would create a self-loop
        ++i;
        continue;
      }
      const ArcId d = add_arc(a, c);       // diagonal closing triangle (e1, e2, rev d)
      insert_before(e1, d);                // at a: d immediately before e1
      insert_before(nxt[rv[e2]], d + 1);   // at c: rev d right after rev(e2)
      // Replace (e1, e2) by d in the ring.
      std::size_t pos = i % ring.size();
      ring[pos] = d;
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>((pos + 1) % ring.size()));
      i = pos;
    }
  }

  // Rebuild a spec with the new arcs and rotations.
  GraphSpec out;
  out.n = n_;
  const auto m2 = static_cast<std::int32_t>(tail.size());
  out.arcs.resize(m2);
  for (std::int32_t a = 0; a < m2; ++a) out.arcs[a] = {tail[a], head[a], rv[a], len[a]};
  out.rotation.assign(n_, {});
  std::vector<std::uint8_t> emitted(m2, 0);
  for (std::int32_t a = 0; a < m2; ++a) {
    if (emitted[a]) continue;
    ArcId cur = a;
    do {
      emitted[cur] = 1;
      out.rotation[tail[cur]].push_back(cur);
      cur = nxt[cur];
    } while (cur != a);
  }
  out.coords = coords_;

  EmbeddedGraph g = EmbeddedGraph::build(std::move(out));
  for (std::int32_t a = 0; a < m2; ++a) {
    g.diagonal_[a] = diag[a];
    g.len_[a].tie = a < arc_count() ? len_[a].tie : 0;
  }
  g.diagonal_threshold_ = inf;
  // Holes keep their arc sets, so remap them through any original arc.
  g.hole_index_.assign(g.face_count(), -1);
  g.holes_.clear();
  for (FaceId h : holes_) {
    const ArcId witness = face_arcs(h)[0];
    const FaceId nf = g.left_face(witness);
    g.hole_index_[nf] = static_cast<int>(g.holes_.size());
    g.holes_.push_back(nf);
  }
  for (FaceId f = 0; f < g.face_count(); ++f)
    GVD_CHECK(g.is_hole(f) || g.face_size(f) == 3, "non-hole face left untriangulated");
  return g;
}

EmbeddedGraph EmbeddedGraph::perturbed(std::uint64_t seed) const {
  EmbeddedGraph g = *this;
  for (std::int32_t a = 0; a < g.arc_count(); ++a) {
    Rng r(mix2(seed, static_cast<std::uint64_t>(a)));
    g.len_[a].tie = r.tie96();
  }
  return g;
}

EmbeddedGraph EmbeddedGraph::reduced_by(const std::vector<std::int64_t>& phi) const {
  GVD_CHECK_INPUT(static_cast<std::int32_t>(phi.size()) == n_, "potential size mismatch");
  EmbeddedGraph g = *this;
  for (std::int32_t a = 0; a < g.arc_count(); ++a) {
    g.len_[a].base += phi[tail_[a]] - phi[head_[a]];
    GVD_CHECK(g.len_[a].base >= 0, "price function does not make lengths nonnegative");
  }
  return g;
}

GraphSpec EmbeddedGraph::to_spec() const {
  GraphSpec s;
  s.n = n_;
  s.arcs.resize(arc_count());
  for (std::int32_t a = 0; a < arc_count(); ++a)
    s.arcs[a] = {tail_[a], head_[a], rev_[a], len_[a].base};
  s.rotation.assign(n_, {});
  for (Vertex v = 0; v < n_; ++v) {
    auto out = outgoing(v);
    s.rotation[v].assign(out.begin(), out.end());
  }
  s.holes = holes_;
  s.coords = coords_;
  return s;
}

std::string Exact::to_string() const {
  std::string s = std::to_string(base);
  if (tie != 0) {
    __int128 t = tie;
    bool neg = t < 0;
    if (neg) t = -t;
    std::string digits;
    while (t > 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(t % 10)));
      t /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    s += (neg ? "-eps*" : "+eps*") + digits;
  }
  return s;
}

}  // namespace gvd
