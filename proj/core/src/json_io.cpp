#include "gvd/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gvd {

using nlohmann::json;

GraphSpec graph_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("bad graph JSON: ") + e.what());
  }
  GraphSpec s;
  try {
    s.n = j.at("n").get<std::int32_t>();
    const auto& arcs = j.at("arcs");
    s.arcs.resize(arcs.size());
    for (const auto& a : arcs) {
      auto id = a.at("id").get<std::int64_t>();
      GVD_CHECK_INPUT(id >= 0 && id < static_cast<std::int64_t>(s.arcs.size()),
                      "arc id out of range");
      auto& slot = s.arcs[static_cast<std::size_t>(id)];
      slot.tail = a.at("tail").get<Vertex>();
      slot.head = a.at("head").get<Vertex>();
      slot.rev = a.at("rev").get<ArcId>();
      slot.len = a.at("len").get<std::int64_t>();
    }
    s.rotation = j.at("rotation").get<std::vector<std::vector<ArcId>>>();
    if (j.contains("holes")) s.holes = j.at("holes").get<std::vector<FaceId>>();
    if (j.contains("coords")) s.coords = j.at("coords").get<std::vector<std::pair<double, double>>>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad graph JSON: ") + e.what());
  }
  return s;
}

std::string graph_spec_to_json(const GraphSpec& spec) {
  json arcs = json::array();
  for (std::size_t i = 0; i < spec.arcs.size(); ++i) {
    const auto& a = spec.arcs[i];
    arcs.push_back({{"id", i}, {"tail", a.tail}, {"head", a.head}, {"rev", a.rev}, {"len", a.len}});
  }
  json j{{"n", spec.n}, {"arcs", std::move(arcs)}, {"rotation", spec.rotation}, {"holes", spec.holes}};
  if (!spec.coords.empty()) j["coords"] = spec.coords;
  return j.dump();
}

GraphSpec load_graph_file(const std::string& path) {
  std::ifstream in(path);
  GVD_CHECK_INPUT(in.good(), "cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_spec_from_json(ss.str());
}

void save_graph_file(const std::string& path, const GraphSpec& spec) {
  std::ofstream out(path);
  GVD_CHECK_INPUT(out.good(), "cannot open output file: " + path);
  out << graph_spec_to_json(spec);
}

}  // namespace gvd
