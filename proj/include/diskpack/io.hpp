#pragma once

#include <string>

#include <json.hpp>

#include "diskpack/geometry.hpp"
#include "diskpack/graph.hpp"

namespace diskpack {

using Json = nlohmann::json;

/// A graph file: the graph plus its optional rotation system.
struct GraphFile {
  Graph graph;
  RotationSystem rotation;
};

// Graph JSON: {"vertices": [...], "edges": [["u","v"],...], "weights": {...}?,
//              "rotation": {"u": [...], ...}?, "outerFace": [...]?}
GraphFile graph_from_json(const Json& j);
Json graph_to_json(const Graph& g, const RotationSystem* rs = nullptr);

// Packing JSON: {"tol": number, "disks": [{"id","cx","cy","r"}, ...]}
Packing packing_from_json(const Json& j);
Json packing_to_json(const Packing& p);

/// Reads and parses a JSON file; InputError names the file and position.
Json read_json_file(const std::string& path);
GraphFile read_graph_file(const std::string& path);
Packing read_packing_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace diskpack
