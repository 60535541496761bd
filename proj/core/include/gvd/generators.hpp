#pragma once

#include <cstdint>

#include "gvd/embedded_graph.hpp"

namespace gvd {

struct BadParams : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct GenOptions {
  std::uint64_t seed = 1;
  std::int64_t max_len = 1;  // arc lengths uniform in [1, max_len]
  bool asymmetric = false;   // independent lengths per direction
};

// Quad mesh on rows x cols vertices, unit lengths unless options say
// otherwise, outer face designated as the only hole.
GraphSpec gen_grid(std::int32_t rows, std::int32_t cols, const GenOptions& opt = {});

// Triangulated disk grown by repeated insertion of a vertex into a uniformly
// random inner face; outer face is the hole.
GraphSpec gen_random_triangulation(std::int32_t n, const GenOptions& opt);

// Quad mesh on a cylinder: rings x cols vertices, columns wrap. The two end
// faces are holes.
GraphSpec gen_cylinder(std::int32_t rings, std::int32_t cols, const GenOptions& opt = {});

// Grid with up to extra_holes interior rectangular blocks carved out; each
// carved block becomes a hole, plus the outer face. Yields 1+extra holes.
GraphSpec gen_grid_with_holes(std::int32_t rows, std::int32_t cols, int extra_holes,
                              const GenOptions& opt);

}  // namespace gvd
