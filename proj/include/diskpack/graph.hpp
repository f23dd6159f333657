#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace diskpack {

using VertexId = std::string;
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph with string vertex ids and optional positive
/// vertex weights. Vertex order is insertion order; edges are kept as
/// adjacency lists over vertex indices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const std::vector<VertexId>& vertices);

  std::size_t add_vertex(const VertexId& id);
  void add_edge(const VertexId& a, const VertexId& b);
  void set_weight(const VertexId& id, double w);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_keys_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::vector<VertexId>& vertices() const { return ids_; }
  const VertexId& id(std::size_t i) const { return ids_.at(i); }
  bool has_vertex(const VertexId& id) const { return index_.count(id) != 0; }
  std::size_t index_of(const VertexId& id) const;

  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_.at(i); }
  std::vector<VertexId> neighbor_ids(const VertexId& v) const;
  std::size_t degree(std::size_t i) const { return adj_.at(i).size(); }
  std::size_t degree(const VertexId& v) const { return degree(index_of(v)); }
  bool adjacent(std::size_t a, std::size_t b) const;
  bool adjacent(const VertexId& a, const VertexId& b) const;

  /// Edges with endpoints ordered lexicographically, sorted.
  std::vector<Edge> edges() const;

  bool has_weights() const { return !weights_.empty(); }
  std::optional<double> weight(const VertexId& v) const;
  const std::map<VertexId, double>& weights() const { return weights_; }

  bool connected() const;
  std::size_t max_degree() const;

  /// Same vertex set and same edge set (weights ignored).
  bool same_structure(const Graph& other) const;

 private:
  static std::uint64_t key(std::size_t a, std::size_t b);

  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::map<VertexId, double> weights_;
};

/// Per-vertex clockwise circular order of neighbors plus an optional outer
/// face given as a closed boundary walk (first vertex not repeated).
struct RotationSystem {
  std::map<VertexId, std::vector<VertexId>> order;
  std::optional<std::vector<VertexId>> outer_face;

  bool empty() const { return order.empty(); }
};

/// Inner path plus the leaves hanging off each inner vertex.
struct Caterpillar {
  std::vector<VertexId> inner_path;
  std::map<VertexId, std::vector<VertexId>> leaves;

  std::size_t leaf_count(std::size_t i) const;
  /// Degree of the i-th inner vertex in the underlying tree.
  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> degrees() const;
  std::size_t vertex_count() const;
  Graph to_graph() const;
};

struct StarLeaf {
  VertexId id;
  double radius;
};

/// A star with per-leaf radii. In embedded mode the leaf order is the
/// clockwise circular order around the center.
struct WeightedStar {
  VertexId center;
  double center_radius = 1.0;
  std::vector<StarLeaf> leaves;
  bool embedded = false;

  Graph to_graph() const;
};

struct OtherGraph {};

using Classification = std::variant<Caterpillar, WeightedStar, OtherGraph>;

/// Most specific class of a connected graph. Stars (including the single
/// vertex and the single edge) win over caterpillars.
Classification classify(const Graph& g);

/// Caterpillar view of any tree whose non-leaf vertices form a path, stars
/// included. Returns nullopt for other graphs; throws on disconnected input.
std::optional<Caterpillar> as_caterpillar(const Graph& g);

/// Star view; leaf radii come from weights (1 when absent) and the leaf
/// order from the center's rotation when one is supplied.
std::optional<WeightedStar> as_star(const Graph& g, const RotationSystem* rs = nullptr);

/// Result of tracing faces of a rotation system.
struct EmbeddingCheck {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::vector<std::vector<VertexId>> faces;
  int genus = 0;
  std::string diagnostic;

  bool planar() const { return genus == 0; }
};

/// Validates that every order list is a permutation of the vertex's
/// neighbors (InputError otherwise) and computes faces and genus.
EmbeddingCheck check_rotation_system(const Graph& g, const RotationSystem& rs);

/// Index into `faces` of the traced face matching `walk` up to rotation and
/// reversal, or nullopt.
std::optional<std::size_t> find_face(const std::vector<std::vector<VertexId>>& faces,
                                     const std::vector<VertexId>& walk);

bool is_internally_triangulated_outerplane(const Graph& g, const RotationSystem& rs);

bool is_biconnected(const Graph& g);

}  // namespace diskpack
