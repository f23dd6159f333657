#include "diskpack/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "diskpack/errors.hpp"

namespace diskpack {

Caterpillar random_caterpillar(std::mt19937_64& rng, const CaterpillarGenOptions& opts) {
  if (opts.max_vertices < 3) throw InputError("random caterpillar needs max_vertices >= 3");
  const std::size_t max_len = std::max<std::size_t>(1, opts.max_vertices / 5);
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);

  std::vector<std::size_t> degrees = {2, 3, 4, 5};
  std::vector<double> weights = {1, 2, 3, 3};
  if (opts.max_degree >= 6) {
    degrees.push_back(6);
    weights.push_back(0.3);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

  std::vector<std::size_t> deg(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t inner = (len == 1) ? 0 : (i == 0 || i + 1 == len ? 1 : 2);
    // Endpoints need a leaf, a lone inner vertex two.
    deg[i] = std::max({degrees[pick(rng)], inner + 1, std::size_t{2}});
    if (opts.realizable_only) deg[i] = std::min<std::size_t>(deg[i], 5);
  }
  if (opts.realizable_only) {
    bool open_five = false;  // a degree-5 vertex seen with no degree <= 3 since
    for (auto& d : deg) {
      if (d <= 3) {
        open_five = false;
      } else if (d == 5) {
        if (open_five) d = 4;
        else open_five = true;
      }
    }
  }

  Caterpillar c;
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId id = "p" + std::to_string(i);
    c.inner_path.push_back(id);
    const std::size_t inner = (len == 1) ? 0 : (i == 0 || i + 1 == len ? 1 : 2);
    const std::size_t k = deg[i] - inner;
    for (std::size_t j = 0; j < k; ++j) c.leaves[id].push_back(id + "_" + std::to_string(j));
  }
  return c;
}

GeneratedEmbedding random_outerplane(std::mt19937_64& rng, std::size_t n, double strip_bias) {
  if (n < 3) throw InputError("random outerplane graph needs n >= 3");
  auto name = [n](std::size_t i) {
    const int width = static_cast<int>(std::to_string(n - 1).size());
    char buf[32];
    std::snprintf(buf, sizeof buf, "v%0*zu", width, i);
    return VertexId(buf);
  };

  // Outer cycle as vertex indices in counterclockwise order.
  std::vector<std::size_t> cycle = {0, 1, 2};
  std::vector<std::pair<std::size_t, std::size_t>> edges = {{0, 1}, {1, 2}, {0, 2}};
  std::bernoulli_distribution follow(strip_bias);
  for (std::size_t v = 3; v < n; ++v) {
    const std::size_t last = v - 1;
    std::vector<std::size_t> slots;  // edge cycle[s] -> cycle[s+1]
    for (std::size_t s = 0; s < cycle.size(); ++s) {
      if (cycle[s] == last || cycle[(s + 1) % cycle.size()] == last) slots.push_back(s);
    }
    std::size_t s;
    if (!slots.empty() && follow(rng)) {
      s = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
    } else {
      s = std::uniform_int_distribution<std::size_t>(0, cycle.size() - 1)(rng);
    }
    const std::size_t a = cycle[s], b = cycle[(s + 1) % cycle.size()];
    cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(s + 1), v);
    edges.push_back({a, v});
    edges.push_back({b, v});
  }

  // Convex position: the cycle on the unit circle, counterclockwise.
  std::vector<double> angle(n);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    angle[cycle[k]] = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
  }
  GeneratedEmbedding out;
  for (std::size_t i = 0; i < n; ++i) out.graph.add_vertex(name(i));
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    out.graph.add_edge(name(a), name(b));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto dir = [&](std::size_t u) {
      return std::atan2(std::sin(angle[u]) - std::sin(angle[v]), std::cos(angle[u]) - std::cos(angle[v]));
    };
    auto nb = adj[v];
    std::sort(nb.begin(), nb.end(), [&](std::size_t x, std::size_t y) { return dir(x) > dir(y); });
    auto& order = out.rotation.order[name(v)];
    for (auto u : nb) order.push_back(name(u));
  }
  std::vector<VertexId> face;
  for (auto v : cycle) face.push_back(name(v));
  out.rotation.outer_face = face;
  return out;
}

}  // namespace diskpack
