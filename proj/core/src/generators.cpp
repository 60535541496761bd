#include "gvd/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "gvd/rng.hpp"

namespace gvd {
namespace {

struct EdgeRec {
  Vertex u, v;
  std::int64_t len_uv, len_vu;
};

std::int64_t pick_len(Rng& rng, const GenOptions& opt) {
  return opt.max_len <= 1 ? 1 : rng.range(1, opt.max_len);
}

// Assemble a spec from coordinates and an undirected edge list; rotations are
// derived by sorting outgoing arcs counterclockwise around each vertex.
GraphSpec assemble(std::int32_t n, std::vector<std::pair<double, double>> coords,
                   const std::vector<EdgeRec>& edges) {
  GraphSpec s;
  s.n = n;
  s.arcs.resize(2 * edges.size());
  std::vector<std::vector<ArcId>> out(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const ArcId a = static_cast<ArcId>(2 * i);
    s.arcs[a] = {e.u, e.v, a + 1, e.len_uv};
    s.arcs[a + 1] = {e.v, e.u, a, e.len_vu};
    out[e.u].push_back(a);
    out[e.v].push_back(a + 1);
  }
  auto dir = [&](ArcId a) {
    const auto& p = coords[s.arcs[a].tail];
    const auto& q = coords[s.arcs[a].head];
    return std::pair<double, double>{q.first - p.first, q.second - p.second};
  };
  auto half = [](const std::pair<double, double>& d) {
    return (d.second < 0 || (d.second == 0 && d.first < 0)) ? 1 : 0;
  };
  for (Vertex v = 0; v < n; ++v) {
    std::sort(out[v].begin(), out[v].end(), [&](ArcId a, ArcId b) {
      auto da = dir(a), db = dir(b);
      int ha = half(da), hb = half(db);
      if (ha != hb) return ha < hb;
      const double cross = da.first * db.second - da.second * db.first;
      if (cross != 0) return cross > 0;
      return a < b;
    });
  }
  s.rotation = std::move(out);
  s.coords = std::move(coords);
  return s;
}

// Rebuild with holes designated by witness arcs (face left of each witness).
GraphSpec with_holes(GraphSpec spec, const std::vector<ArcId>& witnesses) {
  EmbeddedGraph g = EmbeddedGraph::build(spec);
  spec.holes.clear();
  for (ArcId w : witnesses) spec.holes.push_back(g.left_face(w));
  std::sort(spec.holes.begin(), spec.holes.end());
  return spec;
}

GraphSpec grid_like(std::int32_t rows, std::int32_t cols, const GenOptions& opt,
                    const std::vector<std::pair<std::int32_t, std::int32_t>>& carve) {
  GVD_CHECK_INPUT(rows >= 2 && cols >= 2, "grid needs at least 2x2 vertices");
  Rng rng(opt.seed);
  std::vector<std::int32_t> id(static_cast<std::size_t>(rows) * cols, -1);
  // carve entries come as consecutive (r0, c0), (r1, c1) corner pairs
  auto removed = [&](std::int32_t r, std::int32_t c) {
    for (std::size_t k = 0; k + 1 < carve.size(); k += 2) {
      const auto [r0, c0] = carve[k];
      const auto [r1, c1] = carve[k + 1];
      if (r > r0 && r < r1 && c > c0 && c < c1) return true;
    }
    return false;
  };
  std::int32_t n = 0;
  for (std::int32_t r = 0; r < rows; ++r)
    for (std::int32_t c = 0; c < cols; ++c)
      if (!removed(r, c)) id[static_cast<std::size_t>(r) * cols + c] = n++;
  std::vector<std::pair<double, double>> coords(n);
  for (std::int32_t r = 0; r < rows; ++r)
    for (std::int32_t c = 0; c < cols; ++c) {
      auto i = id[static_cast<std::size_t>(r) * cols + c];
      if (i >= 0) coords[i] = {double(c), double(r)};
    }
  std::vector<EdgeRec> edges;
  edges.reserve(static_cast<std::size_t>(2) * n);
  std::map<std::pair<Vertex, Vertex>, std::size_t> eidx;
  auto add_edge = [&](std::int32_t r1, std::int32_t c1, std::int32_t r2, std::int32_t c2) {
    auto a = id[static_cast<std::size_t>(r1) * cols + c1];
    auto b = id[static_cast<std::size_t>(r2) * cols + c2];
    if (a < 0 || b < 0) return;
    std::int64_t l1 = pick_len(rng, opt);
    std::int64_t l2 = opt.asymmetric ? pick_len(rng, opt) : l1;
    eidx[{a, b}] = edges.size();
    edges.push_back({a, b, l1, l2});
  };
  for (std::int32_t r = 0; r < rows; ++r)
    for (std::int32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) add_edge(r, c, r, c + 1);
      if (r + 1 < rows) add_edge(r, c, r + 1, c);
    }
  GraphSpec spec = assemble(n, std::move(coords), edges);

  std::vector<ArcId> witnesses;
  {
    // Outer face: left of the arc running west along the bottom row.
    auto it = eidx.find({id[0], id[1]});
    GVD_CHECK(it != eidx.end(), "grid bottom edge missing");
    witnesses.push_back(static_cast<ArcId>(2 * it->second + 1));
  }
  for (std::size_t k = 0; k + 1 < carve.size(); k += 2) {
    const auto [r0, c0] = carve[k];
    // Hole interior is north of the east arc along its bottom side.
    auto a = id[static_cast<std::size_t>(r0) * cols + c0];
    auto b = id[static_cast<std::size_t>(r0) * cols + c0 + 1];
    auto it = eidx.find({a, b});
    GVD_CHECK(it != eidx.end(), "carved hole bottom edge missing");
    witnesses.push_back(static_cast<ArcId>(2 * it->second));
  }
  return with_holes(std::move(spec), witnesses);
}

}  // namespace

GraphSpec gen_grid(std::int32_t rows, std::int32_t cols, const GenOptions& opt) {
  return grid_like(rows, cols, opt, {});
}

GraphSpec gen_grid_with_holes(std::int32_t rows, std::int32_t cols, int extra_holes,
                              const GenOptions& opt) {
  GVD_CHECK_INPUT(extra_holes >= 0 && extra_holes <= kMaxHoles - 1, "bad hole count");
  GVD_CHECK_INPUT(rows >= 4 + 4 * extra_holes && cols >= 7, "grid too small for carved holes");
  Rng rng(mix2(opt.seed, 0x601e5));
  std::vector<std::pair<std::int32_t, std::int32_t>> carve;
  // Stack carved blocks vertically with gaps; deterministic given the seed.
  std::int32_t rband = 1;
  for (int h = 0; h < extra_holes; ++h) {
    std::int32_t height = 2 + static_cast<std::int32_t>(rng.below(2));  // 2..3 rows tall
    std::int32_t width = 3 + static_cast<std::int32_t>(rng.below(std::max<std::int64_t>(1, cols / 3)));
    width = std::min(width, cols - 3);
    std::int32_t r0 = rband;
    std::int32_t c0 = 1 + static_cast<std::int32_t>(rng.below(std::max(1, cols - width - 2)));
    carve.push_back({r0, c0});
    carve.push_back({r0 + height, c0 + width});
    rband = r0 + height + 1;
    GVD_CHECK_INPUT(rband < rows - 1, "grid too small for carved holes");
  }
  return grid_like(rows, cols, opt, carve);
}

GraphSpec gen_random_triangulation(std::int32_t n, const GenOptions& opt) {
  GVD_CHECK_INPUT(n >= 3, "triangulation needs at least 3 vertices");
  Rng rng(opt.seed);
  std::vector<std::pair<double, double>> coords{{0.0, 0.0}, {4.0, 0.0}, {2.0, 3.0}};
  std::vector<EdgeRec> edges;
  auto add = [&](Vertex u, Vertex v) {
    std::int64_t l1 = pick_len(rng, opt);
    std::int64_t l2 = opt.asymmetric ? pick_len(rng, opt) : l1;
    edges.push_back({u, v, l1, l2});
  };
  add(0, 1);
  add(1, 2);
  add(2, 0);
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};  // inner faces, ccw
  while (static_cast<std::int32_t>(coords.size()) < n) {
    const auto fi = rng.below(faces.size());
    auto [a, b, c] = faces[fi];
    const Vertex p = static_cast<Vertex>(coords.size());
    coords.push_back({(coords[a].first + coords[b].first + coords[c].first) / 3.0,
                      (coords[a].second + coords[b].second + coords[c].second) / 3.0});
    add(p, a);
    add(p, b);
    add(p, c);
    faces[fi] = {a, b, p};
    faces.push_back({b, c, p});
    faces.push_back({c, a, p});
  }
  GraphSpec spec = assemble(static_cast<std::int32_t>(coords.size()), std::move(coords), edges);
  // Outer face lies right of 0->1, i.e. left of its reverse (arc id 1).
  return with_holes(std::move(spec), {1});
}

GraphSpec gen_cylinder(std::int32_t rings, std::int32_t cols, const GenOptions& opt) {
  GVD_CHECK_INPUT(rings >= 2 && cols >= 3, "cylinder needs >= 2 rings and >= 3 columns");
  Rng rng(opt.seed);
  const std::int32_t n = rings * cols;
  std::vector<std::pair<double, double>> coords(n);
  for (std::int32_t i = 0; i < rings; ++i)
    for (std::int32_t j = 0; j < cols; ++j) {
      const double ang = 2.0 * M_PI * j / cols;
      const double rad = 1.0 + i;
      coords[static_cast<std::size_t>(i) * cols + j] = {rad * std::cos(ang), rad * std::sin(ang)};
    }
  std::vector<EdgeRec> edges;
  std::map<std::pair<Vertex, Vertex>, std::size_t> eidx;
  auto add = [&](Vertex u, Vertex v) {
    std::int64_t l1 = pick_len(rng, opt);
    std::int64_t l2 = opt.asymmetric ? pick_len(rng, opt) : l1;
    eidx[{u, v}] = edges.size();
    edges.push_back({u, v, l1, l2});
  };
  auto vid = [&](std::int32_t i, std::int32_t j) {
    return static_cast<Vertex>(i * cols + ((j % cols) + cols) % cols);
  };
  for (std::int32_t i = 0; i < rings; ++i)
    for (std::int32_t j = 0; j < cols; ++j) {
      add(vid(i, j), vid(i, j + 1));
      if (i + 1 < rings) add(vid(i, j), vid(i + 1, j));
    }
  GraphSpec spec = assemble(n, std::move(coords), edges);
  // Walking a ring counterclockwise keeps the disk it bounds on the left, so
  // the inner hole is left of the inner ring arc and the outer (infinite)
  // face is left of the reversed outer ring arc.
  const ArcId inner = static_cast<ArcId>(2 * eidx[{vid(0, 0), vid(0, 1)}]);
  const ArcId outer = static_cast<ArcId>(2 * eidx[{vid(rings - 1, 0), vid(rings - 1, 1)}] + 1);
  return with_holes(std::move(spec), {inner, outer});
}

}  // namespace gvd
