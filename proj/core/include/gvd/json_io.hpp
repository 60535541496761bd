#pragma once

#include <string>

#include "gvd/embedded_graph.hpp"

namespace gvd {

// Graph JSON schema:
//   { "n": int,
//     "arcs": [{"id": int, "tail": int, "head": int, "rev": int, "len": int}, ...],
//     "rotation": [[arc ids per vertex], ...],
//     "holes": [face ids],
//     "coords": [[x, y], ...] }          // optional
// Face ids refer to the deterministic face walk (lowest arc id first).
GraphSpec graph_spec_from_json(const std::string& text);
std::string graph_spec_to_json(const GraphSpec& spec);

GraphSpec load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const GraphSpec& spec);

}  // namespace gvd
