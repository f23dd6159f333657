#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "diskpack/errors.hpp"
#include "diskpack/generate.hpp"
#include "diskpack/rigidity.hpp"
#include "oracles.hpp"

using namespace diskpack;

namespace {

struct Embedded {
  Graph g;
  RotationSystem rs;
};

// Rotation system read off a straight-line drawing (clockwise = decreasing angle).
Embedded from_drawing(const std::map<VertexId, std::pair<double, double>>& pts, const std::vector<Edge>& edges,
                      const std::vector<VertexId>& outer) {
  Embedded e;
  for (const auto& [v, p] : pts) e.g.add_vertex(v);
  for (const auto& [a, b] : edges) e.g.add_edge(a, b);
  for (const auto& [v, p] : pts) {
    auto nb = e.g.neighbor_ids(v);
    auto ang = [&, pv = p](const VertexId& u) {
      return std::atan2(pts.at(u).second - pv.second, pts.at(u).first - pv.first);
    };
    std::sort(nb.begin(), nb.end(), [&](const VertexId& x, const VertexId& y) { return ang(x) > ang(y); });
    e.rs.order[v] = nb;
  }
  e.rs.outer_face = outer;
  return e;
}

Embedded triangle() {
  return from_drawing({{"a", {0, 0}}, {"b", {2, 0}}, {"c", {1, 1.7}}}, {{"a", "b"}, {"b", "c"}, {"c", "a"}},
                      {"a", "b", "c"});
}

// Zigzag strip of n - 2 triangles: bottom row even indices, top row odd.
Embedded strip(std::size_t n) {
  std::map<VertexId, std::pair<double, double>> pts;
  std::vector<Edge> edges;
  auto id = [](std::size_t i) { return "s" + std::string(i < 10 ? "0" : "") + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) pts[id(i)] = {static_cast<double>(i), i % 2 ? 1.7 : 0.0};
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({id(i), id(i + 1)});
  for (std::size_t i = 0; i + 2 < n; ++i) edges.push_back({id(i), id(i + 2)});
  std::vector<VertexId> outer;
  for (std::size_t i = 0; i < n; i += 2) outer.push_back(id(i));
  for (std::size_t i = (n - 1) | 1; i < n + 1; i -= 2) {
    if (i < n) outer.push_back(id(i));
    if (i < 2) break;
  }
  return from_drawing(pts, edges, outer);
}

// Hub with `rim` rim vertices joined in a path: rim - 1 triangles.
Embedded fan(std::size_t rim) {
  std::map<VertexId, std::pair<double, double>> pts = {{"h", {0, 0}}};
  std::vector<Edge> edges;
  std::vector<VertexId> outer = {"h"};
  for (std::size_t i = 0; i < rim; ++i) {
    const VertexId v = "r" + std::to_string(i);
    const double a = 2 * M_PI * static_cast<double>(i) / static_cast<double>(rim + 1);
    pts[v] = {std::cos(a), std::sin(a)};
    edges.push_back({"h", v});
    if (i > 0) edges.push_back({"r" + std::to_string(i - 1), v});
    outer.push_back(v);
  }
  return from_drawing(pts, edges, outer);
}

void check_orientation(const Packing& p, const Graph& g, const RotationSystem& rs) {
  for (const auto& v : g.vertices()) {
    auto nb = g.neighbor_ids(v);
    const Disk& dv = p.at(v);
    std::sort(nb.begin(), nb.end(), [&](const VertexId& x, const VertexId& y) {
      return std::atan2(p.at(x).cy - dv.cy, p.at(x).cx - dv.cx) > std::atan2(p.at(y).cy - dv.cy, p.at(y).cx - dv.cx);
    });
    auto want = rs.order.at(v);
    // equal up to rotation
    bool match = false;
    for (std::size_t s = 0; s < want.size() && !match; ++s) {
      std::rotate(want.begin(), want.begin() + 1, want.end());
      match = want == nb;
    }
    CHECK(match);
  }
}

bool same_matrix(const Packing& a, const Packing& b, double eps) {
  const auto ma = oracle::distance_matrix(a), mb = oracle::distance_matrix(b);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    for (std::size_t j = 0; j < ma.size(); ++j) {
      if (std::abs(ma[i][j] - mb[i][j]) > eps) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("precondition examples") {
  const auto k3 = triangle();
  CHECK(check_rigidity_precondition(k3.g, k3.rs));

  const auto k13 = from_drawing({{"c", {0, 0}}, {"x", {1, 0}}, {"y", {-1, 1}}, {"z", {-1, -1}}},
                                {{"c", "x"}, {"c", "y"}, {"c", "z"}}, {"c", "x", "c", "y", "c", "z"});
  CHECK_FALSE(check_rigidity_precondition(k13.g, k13.rs));

  const auto two = strip(4);
  CHECK(check_rigidity_precondition(two.g, two.rs));

  RotationSystem broken = two.rs;
  broken.order.begin()->second.pop_back();
  CHECK_THROWS_AS(check_rigidity_precondition(two.g, broken), InputError);
}

TEST_CASE("triangle reconstructs to the canonical base") {
  const auto k3 = triangle();
  const auto res = reconstruct_rigid(k3.g, k3.rs);
  CHECK(res.peel.empty());
  CHECK(res.packing.at("a").cx == 0.0);
  CHECK(res.packing.at("b").cx == doctest::Approx(2.0));
  CHECK(std::abs(res.packing.at("c").cy) == doctest::Approx(std::sqrt(3.0)));
  CHECK(validate_dcr(res.packing, k3.g).valid);
}

TEST_CASE("strip of three triangles is rigid") {
  const auto s = strip(5);
  REQUIRE(check_rigidity_precondition(s.g, s.rs));
  const auto a = reconstruct_rigid(s.g, s.rs, {PeelPolicy::SmallestId, 0});
  const auto b = reconstruct_rigid(s.g, s.rs, {PeelPolicy::LargestId, 0});
  CHECK(a.peel.size() == 2);
  CHECK(validate_dcr(a.packing, s.g).valid);
  CHECK(same_matrix(a.packing, b.packing, 1e-9));
  check_orientation(a.packing, s.g, s.rs);

  // renaming moves the base triangle; the packing is congruent under the renaming
  std::map<VertexId, VertexId> rename = {{"s00", "e"}, {"s01", "d"}, {"s02", "c"}, {"s03", "b"}, {"s04", "a"}};
  Embedded r;
  for (const auto& v : s.g.vertices()) r.g.add_vertex(rename[v]);
  for (const auto& [x, y] : s.g.edges()) r.g.add_edge(rename[x], rename[y]);
  for (const auto& [v, order] : s.rs.order) {
    for (const auto& u : order) r.rs.order[rename[v]].push_back(rename[u]);
  }
  r.rs.outer_face.emplace();
  for (const auto& v : *s.rs.outer_face) r.rs.outer_face->push_back(rename[v]);
  const auto c = reconstruct_rigid(r.g, r.rs);
  for (const auto& [x, rx] : rename) {
    for (const auto& [y, ry] : rename) {
      const double d1 = std::hypot(a.packing.at(x).cx - a.packing.at(y).cx, a.packing.at(x).cy - a.packing.at(y).cy);
      const double d2 = std::hypot(c.packing.at(rx).cx - c.packing.at(ry).cx, c.packing.at(rx).cy - c.packing.at(ry).cy);
      CHECK(d1 == doctest::Approx(d2).epsilon(1e-9));
    }
  }
}

TEST_CASE("long strips stay realizable") {
  for (std::size_t n : {6, 10, 20, 40}) {
    const auto s = strip(n);
    const auto res = reconstruct_rigid(s.g, s.rs);
    CHECK(validate_dcr(res.packing, s.g).valid);
  }
}

TEST_CASE("fans around a hub") {
  const auto five = fan(5);  // four triangles, 240 degrees around the hub
  REQUIRE(check_rigidity_precondition(five.g, five.rs));
  const auto ok = reconstruct_rigid(five.g, five.rs);
  CHECK(validate_dcr(ok.packing, five.g).valid);

  // five triangles close the ring up to one contact that is not an edge
  const auto six = fan(6);
  REQUIRE(check_rigidity_precondition(six.g, six.rs));
  CHECK_THROWS_AS(reconstruct_rigid(six.g, six.rs), NotRealizableError);

  const auto seven = fan(7);
  REQUIRE(check_rigidity_precondition(seven.g, seven.rs));
  try {
    reconstruct_rigid(seven.g, seven.rs);
    FAIL("expected NotRealizableError");
  } catch (const NotRealizableError& e) {
    CHECK_FALSE(e.vertex.empty());
  }

  // the closed wheel has its hub off the outer face
  std::map<VertexId, std::pair<double, double>> pts = {{"h", {0, 0}}};
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) {
    pts["r" + std::to_string(i)] = {std::cos(i * M_PI / 3), std::sin(i * M_PI / 3)};
    edges.push_back({"h", "r" + std::to_string(i)});
    edges.push_back({"r" + std::to_string(i), "r" + std::to_string((i + 1) % 6)});
  }
  const auto w6 = from_drawing(pts, edges, {"r0", "r1", "r2", "r3", "r4", "r5"});
  CHECK_FALSE(check_rigidity_precondition(w6.g, w6.rs));
  CHECK_THROWS_AS(reconstruct_rigid(w6.g, w6.rs), InputError);
}

TEST_CASE("random triangulated polygons") {
  std::mt19937_64 rng(404);
  int ok = 0;
  for (int t = 0; t < 80; ++t) {
    const auto e = random_outerplane(rng, 3 + rng() % 25, 0.9);
    REQUIRE(check_rigidity_precondition(e.graph, e.rotation));
    std::optional<RigidResult> a, b, c;
    try {
      a = reconstruct_rigid(e.graph, e.rotation, {PeelPolicy::SmallestId, 0});
    } catch (const NotRealizableError&) {
    }
    try {
      b = reconstruct_rigid(e.graph, e.rotation, {PeelPolicy::Random, static_cast<std::uint64_t>(t)});
    } catch (const NotRealizableError&) {
    }
    try {
      c = reconstruct_rigid(e.graph, e.rotation, {PeelPolicy::LargestId, 0});
    } catch (const NotRealizableError&) {
    }
    REQUIRE(a.has_value() == b.has_value());
    REQUIRE(a.has_value() == c.has_value());
    if (!a) continue;
    ++ok;
    CHECK(validate_dcr(a->packing, e.graph).valid);
    CHECK(same_matrix(a->packing, b->packing, 1e-9));
    CHECK(same_matrix(a->packing, c->packing, 1e-9));
    check_orientation(a->packing, e.graph, e.rotation);

    // replaying the peel sequence rebuilds the graph
    std::set<VertexId> removed;
    for (const auto& st : a->peel) removed.insert(st.removed);
    Graph replay;
    for (const auto& v : e.graph.vertices()) {
      if (!removed.count(v)) replay.add_vertex(v);
    }
    for (const auto& [x, y] : e.graph.edges()) {
      if (replay.has_vertex(x) && replay.has_vertex(y)) replay.add_edge(x, y);
    }
    CHECK(replay.size() == 3);
    for (auto it = a->peel.rbegin(); it != a->peel.rend(); ++it) {
      CHECK(it->a < it->b);
      replay.add_vertex(it->removed);
      replay.add_edge(it->removed, it->a);
      replay.add_edge(it->removed, it->b);
    }
    CHECK(replay.same_structure(e.graph));
  }
  CHECK(ok > 5);
}
