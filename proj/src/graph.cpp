#include "diskpack/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "diskpack/errors.hpp"

namespace diskpack {

Graph::Graph(const std::vector<VertexId>& vertices) {
  for (const auto& v : vertices) add_vertex(v);
}

std::uint64_t Graph::key(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::size_t Graph::add_vertex(const VertexId& id) {
  if (id.empty()) throw InputError("vertex id must be non-empty");
  auto [it, inserted] = index_.emplace(id, ids_.size());
  if (!inserted) throw InputError("duplicate vertex '" + id + "'");
  ids_.push_back(id);
  adj_.emplace_back();
  return it->second;
}

void Graph::add_edge(const VertexId& a, const VertexId& b) {
  const std::size_t ia = index_of(a), ib = index_of(b);
  if (ia == ib) throw InputError("self-loop at '" + a + "'");
  if (!edge_keys_.insert(key(ia, ib)).second) {
    throw InputError("parallel edge '" + a + "'-'" + b + "'");
  }
  adj_[ia].push_back(ib);
  adj_[ib].push_back(ia);
}

void Graph::set_weight(const VertexId& id, double w) {
  if (!has_vertex(id)) throw InputError("weight for unknown vertex '" + id + "'");
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw InputError("weight of '" + id + "' must be positive and finite");
  }
  weights_[id] = w;
}

std::size_t Graph::index_of(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown vertex '" + id + "'");
  return it->second;
}

std::vector<VertexId> Graph::neighbor_ids(const VertexId& v) const {
  std::vector<VertexId> out;
  for (std::size_t j : adj_[index_of(v)]) out.push_back(ids_[j]);
  return out;
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  return a != b && edge_keys_.count(key(a, b)) != 0;
}

bool Graph::adjacent(const VertexId& a, const VertexId& b) const {
  auto ia = index_.find(a), ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) return false;
  return adjacent(ia->second, ib->second);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_keys_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (std::size_t j : adj_[i]) {
      if (ids_[i] < ids_[j]) out.emplace_back(ids_[i], ids_[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> Graph::weight(const VertexId& v) const {
  auto it = weights_.find(v);
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

bool Graph::connected() const {
  if (ids_.empty()) return true;
  std::vector<char> seen(ids_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == ids_.size();
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

bool Graph::same_structure(const Graph& other) const {
  if (size() != other.size() || edge_count() != other.edge_count()) return false;
  for (const auto& v : ids_) {
    if (!other.has_vertex(v)) return false;
  }
  return edges() == other.edges();
}

// --- class-specific views -------------------------------------------------

std::size_t Caterpillar::leaf_count(std::size_t i) const {
  auto it = leaves.find(inner_path.at(i));
  return it == leaves.end() ? 0 : it->second.size();
}

std::size_t Caterpillar::degree(std::size_t i) const {
  std::size_t d = leaf_count(i);
  if (i > 0) ++d;
  if (i + 1 < inner_path.size()) ++d;
  return d;
}

std::vector<std::size_t> Caterpillar::degrees() const {
  std::vector<std::size_t> out(inner_path.size());
  for (std::size_t i = 0; i < inner_path.size(); ++i) out[i] = degree(i);
  return out;
}

std::size_t Caterpillar::vertex_count() const {
  std::size_t n = inner_path.size();
  for (const auto& [v, ls] : leaves) n += ls.size();
  return n;
}

Graph Caterpillar::to_graph() const {
  Graph g;
  for (const auto& v : inner_path) g.add_vertex(v);
  for (const auto& v : inner_path) {
    auto it = leaves.find(v);
    if (it == leaves.end()) continue;
    for (const auto& l : it->second) {
      g.add_vertex(l);
      g.add_edge(v, l);
    }
  }
  for (std::size_t i = 1; i < inner_path.size(); ++i) g.add_edge(inner_path[i - 1], inner_path[i]);
  return g;
}

Graph WeightedStar::to_graph() const {
  Graph g;
  g.add_vertex(center);
  g.set_weight(center, center_radius);
  for (const auto& l : leaves) {
    g.add_vertex(l.id);
    g.add_edge(center, l.id);
    g.set_weight(l.id, l.radius);
  }
  return g;
}

namespace {

void require_connected(const Graph& g) {
  if (g.empty()) throw InputError("graph is empty");
  if (!g.connected()) throw InputError("graph is disconnected");
}

bool is_tree(const Graph& g) { return g.connected() && g.edge_count() + 1 == g.size(); }

// Center of a star, if `g` is one. The single edge uses its smaller id.
std::optional<std::size_t> star_center(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  if (g.size() == 1) return 0;
  if (g.size() == 2) return g.id(0) < g.id(1) ? 0 : 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) + 1 == g.size()) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Caterpillar> as_caterpillar(const Graph& g) {
  require_connected(g);
  if (!is_tree(g)) return std::nullopt;

  Caterpillar c;
  if (g.size() == 1) {
    c.inner_path = {g.id(0)};
    return c;
  }
  if (g.size() == 2) {
    // Leaf removal empties P2; use the smaller id as the inner vertex.
    const std::size_t a = g.id(0) < g.id(1) ? 0 : 1;
    c.inner_path = {g.id(a)};
    c.leaves[g.id(a)] = {g.id(1 - a)};
    return c;
  }

  std::vector<char> inner(g.size(), 0);
  std::size_t inner_count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) > 1) {
      inner[i] = 1;
      ++inner_count;
    }
  }
  // Leaf removal keeps the tree connected; it is a path iff no inner vertex
  // has more than two inner neighbors.
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!inner[i]) continue;
    std::size_t k = 0;
    for (std::size_t j : g.neighbors(i)) k += inner[j];
    if (k > 2) return std::nullopt;
    if (k <= 1) ends.push_back(i);
  }
  std::size_t start = ends.front();
  for (std::size_t e : ends) {
    if (g.id(e) < g.id(start)) start = e;
  }

  std::size_t prev = g.size(), cur = start;
  while (true) {
    c.inner_path.push_back(g.id(cur));
    auto& ls = c.leaves[g.id(cur)];
    std::size_t next = g.size();
    for (std::size_t j : g.neighbors(cur)) {
      if (!inner[j]) {
        ls.push_back(g.id(j));
      } else if (j != prev) {
        next = j;
      }
    }
    if (ls.empty()) c.leaves.erase(g.id(cur));
    if (next == g.size()) break;
    prev = cur;
    cur = next;
  }
  if (c.inner_path.size() != inner_count) return std::nullopt;
  return c;
}

std::optional<WeightedStar> as_star(const Graph& g, const RotationSystem* rs) {
  require_connected(g);
  auto center = star_center(g);
  if (!center) return std::nullopt;

  WeightedStar s;
  s.center = g.id(*center);
  s.center_radius = g.weight(s.center).value_or(1.0);
  std::vector<VertexId> order;
  if (rs != nullptr) {
    auto it = rs->order.find(s.center);
    if (it != rs->order.end()) {
      order = it->second;
      s.embedded = true;
      auto expected = g.neighbor_ids(s.center);
      auto got = order;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      if (expected != got) {
        throw InputError("rotation of center '" + s.center + "' is not a permutation of its leaves");
      }
    }
  }
  if (!s.embedded) order = g.neighbor_ids(s.center);
  for (const auto& id : order) s.leaves.push_back({id, g.weight(id).value_or(1.0)});
  return s;
}

Classification classify(const Graph& g) {
  require_connected(g);
  if (auto s = as_star(g)) return *s;
  if (auto c = as_caterpillar(g)) return *c;
  return OtherGraph{};
}

// --- rotation systems -----------------------------------------------------

EmbeddingCheck check_rotation_system(const Graph& g, const RotationSystem& rs) {
  const std::size_t n = g.size();
  for (const auto& [v, ord] : rs.order) {
    if (!g.has_vertex(v)) throw InputError("rotation given for unknown vertex '" + v + "'");
  }
  // pos[v][neighbor index] -> position in v's order
  std::vector<std::vector<std::size_t>> order(n);
  std::vector<std::unordered_map<std::size_t, std::size_t>> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = rs.order.find(g.id(v));
    if (it == rs.order.end()) {
      if (g.degree(v) > 0) throw InputError("rotation missing for vertex '" + g.id(v) + "'");
      continue;
    }
    for (const auto& w : it->second) {
      if (!g.has_vertex(w) || !g.adjacent(g.id(v), w)) {
        throw InputError("rotation of '" + g.id(v) + "' lists non-neighbor '" + w + "'");
      }
      const std::size_t wi = g.index_of(w);
      if (!pos[v].emplace(wi, order[v].size()).second) {
        throw InputError("rotation of '" + g.id(v) + "' repeats '" + w + "'");
      }
      order[v].push_back(wi);
    }
    if (order[v].size() != g.degree(v)) {
      throw InputError("rotation of '" + g.id(v) + "' is missing a neighbor");
    }
  }

  if (rs.outer_face) {
    const auto& walk = *rs.outer_face;
    if (walk.empty()) throw InputError("outer face walk is empty");
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& a = walk[i];
      const auto& b = walk[(i + 1) % walk.size()];
      if (walk.size() == 1) {
        if (!g.has_vertex(a)) throw InputError("outer face names unknown vertex '" + a + "'");
        break;
      }
      if (!g.adjacent(a, b)) {
        throw InputError("outer face walk uses non-edge '" + a + "'-'" + b + "'");
      }
    }
  }

  EmbeddingCheck out;
  out.vertices = n;
  out.edges = g.edge_count();

  // Darts are (v, k): v -> order[v][k].
  std::vector<std::vector<char>> used(n);
  for (std::size_t v = 0; v < n; ++v) used[v].assign(order[v].size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v].empty()) {
      out.faces.push_back({g.id(v)});
      continue;
    }
    for (std::size_t k = 0; k < order[v].size(); ++k) {
      if (used[v][k]) continue;
      std::vector<VertexId> face;
      std::size_t a = v, ka = k;
      while (!used[a][ka]) {
        used[a][ka] = 1;
        face.push_back(g.id(a));
        const std::size_t b = order[a][ka];
        const std::size_t kb = (pos[b].at(a) + 1) % order[b].size();
        a = b;
        ka = kb;
      }
      out.faces.push_back(std::move(face));
    }
  }

  // Components.
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++out.components;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }

  const long euler = static_cast<long>(n) - static_cast<long>(out.edges) +
                     static_cast<long>(out.faces.size());
  out.genus = static_cast<int>((2 * static_cast<long>(out.components) - euler) / 2);
  if (out.genus != 0) {
    out.diagnostic = "V - E + F = " + std::to_string(euler) + " but planarity needs " +
                     std::to_string(2 * out.components) + " (genus " +
                     std::to_string(out.genus) + ")";
  } else if (rs.outer_face && !find_face(out.faces, *rs.outer_face)) {
    out.diagnostic = "named outer face is not a face of the embedding";
  }
  return out;
}

std::optional<std::size_t> find_face(const std::vector<std::vector<VertexId>>& faces,
                                     const std::vector<VertexId>& walk) {
  const std::size_t len = walk.size();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() != len) continue;
    for (std::size_t shift = 0; shift < len; ++shift) {
      bool fwd = true, bwd = true;
      for (std::size_t i = 0; i < len && (fwd || bwd); ++i) {
        if (face[(shift + i) % len] != walk[i]) fwd = false;
        if (face[(shift + len - i) % len] != walk[i]) bwd = false;
      }
      if (fwd || bwd) return f;
    }
  }
  return std::nullopt;
}

bool is_internally_triangulated_outerplane(const Graph& g, const RotationSystem& rs) {
  if (!rs.outer_face) throw InputError("embedded input must name its outer face");
  const EmbeddingCheck emb = check_rotation_system(g, rs);
  if (emb.components != 1 || !emb.planar()) return false;
  auto outer = find_face(emb.faces, *rs.outer_face);
  if (!outer) return false;
  std::set<VertexId> on_outer(emb.faces[*outer].begin(), emb.faces[*outer].end());
  if (on_outer.size() != g.size()) return false;
  for (std::size_t f = 0; f < emb.faces.size(); ++f) {
    if (f != *outer && emb.faces[f].size() != 3) return false;
  }
  return true;
}

bool is_biconnected(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 1) return true;
  if (n < 3 || !g.connected()) return false;

  // Iterative Hopcroft-Tarjan articulation point search.
  std::vector<std::size_t> disc(n, 0), low(n, 0), parent(n, n), next_child(n, 0);
  std::size_t timer = 0;
  std::size_t root_children = 0;
  std::vector<std::size_t> stack{0};
  disc[0] = low[0] = ++timer;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    if (next_child[v] < g.degree(v)) {
      const std::size_t w = g.neighbors(v)[next_child[v]++];
      if (disc[w] == 0) {
        parent[w] = v;
        disc[w] = low[w] = ++timer;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      const std::size_t p = parent[v];
      if (p != n) {
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) return false;
      }
    }
  }
  return root_children < 2;
}

}  // namespace diskpack
