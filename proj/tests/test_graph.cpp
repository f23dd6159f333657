#include <doctest.h>

#include <algorithm>
#include <random>

#include "diskpack/errors.hpp"
#include "diskpack/generate.hpp"
#include "diskpack/graph.hpp"

using namespace diskpack;

namespace {

Graph make_graph(const std::vector<VertexId>& v, const std::vector<Edge>& e) {
  Graph g(v);
  for (const auto& [a, b] : e) g.add_edge(a, b);
  return g;
}

Graph two_triangles() {
  return make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"b", "d"}, {"c", "d"}});
}

RotationSystem two_triangles_rotation() {
  RotationSystem rs;
  rs.order = {{"a", {"c", "b"}}, {"b", {"a", "c", "d"}}, {"c", {"b", "a", "d"}}, {"d", {"b", "c"}}};
  rs.outer_face = std::vector<VertexId>{"a", "b", "d", "c"};
  return rs;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g({"a", "b"});
  g.add_edge("a", "b");
  CHECK_THROWS_AS(g.add_edge("a", "a"), InputError);
  CHECK_THROWS_AS(g.add_edge("a", "b"), InputError);
  CHECK_THROWS_AS(g.add_edge("a", "zz"), InputError);
  CHECK_THROWS_AS(g.add_vertex("a"), InputError);
  CHECK_THROWS_AS(g.set_weight("a", 0.0), InputError);
  CHECK(g.adjacent("b", "a"));
  CHECK(g.edges() == std::vector<Edge>{{"a", "b"}});
}

TEST_CASE("classify a path as a caterpillar") {
  const Graph g = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  const auto cls = classify(g);
  REQUIRE(std::holds_alternative<Caterpillar>(cls));
  const auto& c = std::get<Caterpillar>(cls);
  CHECK(c.inner_path == std::vector<VertexId>{"b", "c"});
  CHECK(c.leaves.at("b") == std::vector<VertexId>{"a"});
  CHECK(c.leaves.at("c") == std::vector<VertexId>{"d"});
}

TEST_CASE("classify stars and others") {
  const Graph k14 = make_graph({"c", "1", "2", "3", "4"}, {{"c", "1"}, {"c", "2"}, {"c", "3"}, {"c", "4"}});
  const auto s = classify(k14);
  REQUIRE(std::holds_alternative<WeightedStar>(s));
  CHECK(std::get<WeightedStar>(s).center == "c");
  CHECK(std::get<WeightedStar>(s).leaves.size() == 4);

  const Graph c4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  CHECK(std::holds_alternative<OtherGraph>(classify(c4)));

  const auto one = classify(Graph({"x"}));
  REQUIRE(std::holds_alternative<WeightedStar>(one));
  CHECK(std::get<WeightedStar>(one).leaves.empty());

  const auto edge = classify(make_graph({"y", "x"}, {{"x", "y"}}));
  REQUIRE(std::holds_alternative<WeightedStar>(edge));
  CHECK(std::get<WeightedStar>(edge).center == "x");
  CHECK(std::get<WeightedStar>(edge).leaves.size() == 1);

  CHECK_THROWS_AS(classify(Graph({"a", "b"})), InputError);
  CHECK_THROWS_AS(classify(Graph()), InputError);
}

TEST_CASE("tiny caterpillars are canonical") {
  const auto p1 = as_caterpillar(Graph({"x"}));
  REQUIRE(p1);
  CHECK(p1->inner_path == std::vector<VertexId>{"x"});

  const auto p2 = as_caterpillar(make_graph({"y", "x"}, {{"x", "y"}}));
  REQUIRE(p2);
  CHECK(p2->inner_path == std::vector<VertexId>{"x"});
  CHECK(p2->leaves.at("x") == std::vector<VertexId>{"y"});

  const auto p3 = as_caterpillar(make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  REQUIRE(p3);
  CHECK(p3->inner_path == std::vector<VertexId>{"b"});
  CHECK(p3->degree(0) == 2);

  // spider with three legs of length 2 is a tree but not a caterpillar
  const Graph spider = make_graph({"c", "a1", "a2", "b1", "b2", "d1", "d2"},
                                  {{"c", "a1"}, {"a1", "a2"}, {"c", "b1"}, {"b1", "b2"}, {"c", "d1"}, {"d1", "d2"}});
  CHECK_FALSE(as_caterpillar(spider));
  CHECK(std::holds_alternative<OtherGraph>(classify(spider)));
}

TEST_CASE("caterpillar round trip and relabeling invariance") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const Caterpillar c = random_caterpillar(rng, {60, 6, false});
    const Graph g = c.to_graph();
    const auto back = as_caterpillar(g);
    REQUIRE(back);
    CHECK(back->to_graph().same_structure(g));

    // relabel with shuffled names; the degree sequence along the path is unchanged up to reversal
    std::vector<VertexId> names = g.vertices();
    std::shuffle(names.begin(), names.end(), rng);
    std::map<VertexId, VertexId> rename;
    for (std::size_t i = 0; i < names.size(); ++i) rename[g.id(i)] = "q" + names[i];
    Graph h;
    for (const auto& v : g.vertices()) h.add_vertex(rename[v]);
    for (const auto& [a, b] : g.edges()) h.add_edge(rename[a], rename[b]);
    const auto cls_g = classify(g), cls_h = classify(h);
    REQUIRE(cls_g.index() == cls_h.index());
    if (const auto* cg = std::get_if<Caterpillar>(&cls_g)) {
      auto dg = cg->degrees(), dh = std::get<Caterpillar>(cls_h).degrees();
      if (dg != dh) std::reverse(dh.begin(), dh.end());
      CHECK(dg == dh);
    }
  }
}

TEST_CASE("rotation system checks") {
  const Graph k3 = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  RotationSystem rs;
  rs.order = {{"a", {"c", "b"}}, {"b", {"a", "c"}}, {"c", {"b", "a"}}};
  const auto ok = check_rotation_system(k3, rs);
  CHECK(ok.planar());
  CHECK(ok.faces.size() == 2);

  const Graph k4 = make_graph({"a", "b", "c", "d"},
                              {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  RotationSystem torus;
  torus.order = {{"a", {"b", "c", "d"}}, {"b", {"a", "c", "d"}}, {"c", {"a", "b", "d"}}, {"d", {"a", "b", "c"}}};
  const auto bad = check_rotation_system(k4, torus);
  CHECK(bad.genus == 1);
  CHECK_FALSE(bad.diagnostic.empty());

  RotationSystem missing = rs;
  missing.order["b"] = {"a"};
  CHECK_THROWS_AS(check_rotation_system(k3, missing), InputError);
  RotationSystem stranger = rs;
  stranger.order["b"] = {"a", "zz"};
  CHECK_THROWS_AS(check_rotation_system(k3, stranger), InputError);
  RotationSystem twice = rs;
  twice.order["b"] = {"a", "a"};
  CHECK_THROWS_AS(check_rotation_system(k3, twice), InputError);
}

TEST_CASE("internally triangulated outerplane embeddings") {
  const Graph k3 = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  RotationSystem rs;
  rs.order = {{"a", {"c", "b"}}, {"b", {"a", "c"}}, {"c", {"b", "a"}}};
  rs.outer_face = std::vector<VertexId>{"a", "b", "c"};
  CHECK(is_internally_triangulated_outerplane(k3, rs));

  const Graph c4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  RotationSystem rc;
  rc.order = {{"a", {"d", "b"}}, {"b", {"a", "c"}}, {"c", {"b", "d"}}, {"d", {"c", "a"}}};
  rc.outer_face = std::vector<VertexId>{"a", "b", "c", "d"};
  CHECK_FALSE(is_internally_triangulated_outerplane(c4, rc));

  CHECK(is_internally_triangulated_outerplane(two_triangles(), two_triangles_rotation()));

  // naming an inner triangle as the outer face leaves d off the outer face
  RotationSystem inner = two_triangles_rotation();
  inner.outer_face = std::vector<VertexId>{"a", "b", "c"};
  CHECK_FALSE(is_internally_triangulated_outerplane(two_triangles(), inner));

  RotationSystem no_outer = two_triangles_rotation();
  no_outer.outer_face.reset();
  CHECK_THROWS_AS(is_internally_triangulated_outerplane(two_triangles(), no_outer), InputError);
}

TEST_CASE("face tracing satisfies Euler's formula") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto e = random_outerplane(rng, 3 + rng() % 30, 0.5);
    const auto chk = check_rotation_system(e.graph, e.rotation);
    REQUIRE(chk.planar());
    CHECK(static_cast<long>(chk.vertices) - static_cast<long>(chk.edges) + static_cast<long>(chk.faces.size()) == 2);
    CHECK(find_face(chk.faces, *e.rotation.outer_face));
  }
}

TEST_CASE("biconnectivity") {
  CHECK(is_biconnected(make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}})));
  CHECK_FALSE(is_biconnected(make_graph({"c", "1", "2", "3"}, {{"c", "1"}, {"c", "2"}, {"c", "3"}})));
  // bowtie: two triangles sharing a cut vertex
  CHECK_FALSE(is_biconnected(make_graph({"a", "b", "c", "d", "e"},
                                        {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}, {"e", "c"}})));
  CHECK(is_biconnected(two_triangles()));
}
