#include "diskpack/io.hpp"

#include <fstream>
#include <sstream>

#include "diskpack/errors.hpp"

namespace diskpack {
namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
  throw InputError("field '" + field + "': " + msg);
}

std::string get_string(const Json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

double get_number(const Json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  return j.get<double>();
}

std::vector<VertexId> get_id_list(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of ids");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(get_string(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Errors thrown by the graph itself get the field prefixed.
template <typename F>
void with_field(const std::string& field, F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    field_error(field, e.what());
  }
}

}  // namespace

GraphFile graph_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("graph file must be a JSON object");
  GraphFile out;
  if (!j.contains("vertices")) field_error("vertices", "missing");
  const auto vertices = get_id_list(j.at("vertices"), "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    with_field("vertices[" + std::to_string(i) + "]", [&] { out.graph.add_vertex(vertices[i]); });
  }
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) field_error("edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string f = "edges[" + std::to_string(i) + "]";
      const auto e = get_id_list(edges[i], f);
      if (e.size() != 2) field_error(f, "an edge needs exactly two endpoints");
      with_field(f, [&] { out.graph.add_edge(e[0], e[1]); });
    }
  }
  if (j.contains("weights")) {
    const Json& w = j.at("weights");
    if (!w.is_object()) field_error("weights", "expected an object");
    for (const auto& [k, v] : w.items()) {
      const std::string f = "weights." + k;
      const double x = get_number(v, f);
      with_field(f, [&] { out.graph.set_weight(k, x); });
    }
  }
  if (j.contains("rotation")) {
    const Json& r = j.at("rotation");
    if (!r.is_object()) field_error("rotation", "expected an object");
    for (const auto& [k, v] : r.items()) out.rotation.order[k] = get_id_list(v, "rotation." + k);
  }
  if (j.contains("outerFace")) out.rotation.outer_face = get_id_list(j.at("outerFace"), "outerFace");
  for (const auto& [k, v] : j.items()) {
    if (k != "vertices" && k != "edges" && k != "weights" && k != "rotation" && k != "outerFace" &&
        k != "reduction") {
      field_error(k, "unknown field");
    }
  }
  return out;
}

Json graph_to_json(const Graph& g, const RotationSystem* rs) {
  Json j;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  if (g.has_weights()) j["weights"] = g.weights();
  if (rs != nullptr && !rs->order.empty()) j["rotation"] = rs->order;
  if (rs != nullptr && rs->outer_face) j["outerFace"] = *rs->outer_face;
  return j;
}

Packing packing_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("packing file must be a JSON object");
  double tol = kDefaultTolerance;
  if (j.contains("tol")) tol = get_number(j.at("tol"), "tol");
  if (!j.contains("disks")) field_error("disks", "missing");
  const Json& ds = j.at("disks");
  if (!ds.is_array()) field_error("disks", "expected an array");
  std::vector<Disk> disks;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::string f = "disks[" + std::to_string(i) + "]";
    const Json& d = ds[i];
    if (!d.is_object()) field_error(f, "expected an object");
    for (const char* k : {"id", "cx", "cy", "r"}) {
      if (!d.contains(k)) field_error(f + "." + k, "missing");
    }
    disks.push_back({get_string(d.at("id"), f + ".id"), get_number(d.at("cx"), f + ".cx"),
                     get_number(d.at("cy"), f + ".cy"), get_number(d.at("r"), f + ".r")});
  }
  return Packing(std::move(disks), tol);
}

Json packing_to_json(const Packing& p) {
  Json disks = Json::array();
  for (const Disk& d : p.disks()) {
    disks.push_back({{"id", d.id}, {"cx", d.cx}, {"cy", d.cy}, {"r", d.r}});
  }
  return {{"tol", p.tol()}, {"disks", disks}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

GraphFile read_graph_file(const std::string& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

Packing read_packing_file(const std::string& path) {
  try {
    return packing_from_json(read_json_file(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

}  // namespace diskpack
