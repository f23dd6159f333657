#include "diskpack/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "diskpack/errors.hpp"

namespace diskpack {

bool check_rigidity_precondition(const Graph& g, const RotationSystem& rs) {
  const bool tri = is_internally_triangulated_outerplane(g, rs);
  return tri && is_biconnected(g);
}

namespace {

// +1 when the rotation puts v counterclockwise of the ray a->b (v is the
// clockwise predecessor of b around a), -1 when clockwise, 0 if undecided.
int rotation_side(const RotationSystem& rs, const VertexId& v, const VertexId& a,
                  const VertexId& b) {
  auto side_at = [&](const VertexId& at, const VertexId& other) -> int {
    const auto& ord = rs.order.at(at);
    if (ord.size() < 3) return 0;
    const auto it = std::find(ord.begin(), ord.end(), other);
    const std::size_t k = static_cast<std::size_t>(it - ord.begin());
    const std::size_t n = ord.size();
    if (ord[(k + 1) % n] == v) return -1;
    if (ord[(k + n - 1) % n] == v) return +1;
    return 0;
  };
  if (int s = side_at(a, b); s != 0) return s;
  return -side_at(b, a);
}

struct Pt {
  double x, y;
};

}  // namespace

RigidResult reconstruct_rigid(const Graph& g, const RotationSystem& rs, const PeelOrder& order,
                              double tol) {
  if (!check_rigidity_precondition(g, rs)) {
    throw InputError("graph is not a biconnected internally triangulated outerplane graph");
  }
  const std::size_t n = g.size();
  RigidResult out;
  if (n == 1) {
    out.packing = Packing({{g.id(0), 0.0, 0.0, 1.0}}, tol);
    return out;
  }

  // Peel.
  std::vector<std::set<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) adj[i].insert(g.neighbors(i).begin(), g.neighbors(i).end());
  std::vector<char> alive(n, 1);
  std::mt19937_64 rng(order.seed);
  std::vector<std::size_t> peeled;
  for (std::size_t left = n; left > 3; --left) {
    std::vector<std::size_t> cand;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v] || adj[v].size() != 2) continue;
      const std::size_t a = *adj[v].begin(), b = *adj[v].rbegin();
      if (adj[a].count(b)) cand.push_back(v);
    }
    if (cand.empty()) throw GeometryError("no peelable degree-2 vertex");
    auto by_id = [&](std::size_t x, std::size_t y) { return g.id(x) < g.id(y); };
    std::size_t v;
    switch (order.policy) {
      case PeelPolicy::SmallestId: v = *std::min_element(cand.begin(), cand.end(), by_id); break;
      case PeelPolicy::LargestId: v = *std::max_element(cand.begin(), cand.end(), by_id); break;
      default: v = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
    }
    std::size_t a = *adj[v].begin(), b = *adj[v].rbegin();
    if (g.id(b) < g.id(a)) std::swap(a, b);
    out.peel.push_back({g.id(v), g.id(a), g.id(b)});
    peeled.push_back(v);
    alive[v] = 0;
    adj[a].erase(v);
    adj[b].erase(v);
    adj[v].clear();
  }

  // Base triangle.
  std::vector<std::size_t> base;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) base.push_back(v);
  }
  std::sort(base.begin(), base.end(), [&](std::size_t x, std::size_t y) { return g.id(x) < g.id(y); });
  std::vector<Pt> pos(n);
  std::vector<char> placed(n, 0);
  pos[base[0]] = {0.0, 0.0};
  pos[base[1]] = {2.0, 0.0};
  pos[base[2]] = {1.0, std::sqrt(3.0)};
  for (std::size_t v : base) placed[v] = 1;
  // The base is counterclockwise; the rotation system may want the mirror.
  const bool mirror = rotation_side(rs, g.id(base[2]), g.id(base[0]), g.id(base[1])) < 0;

  for (std::size_t k = peeled.size(); k-- > 0;) {
    const std::size_t v = peeled[k];
    const PeelStep& step = out.peel[k];
    const std::size_t a = g.index_of(step.a), b = g.index_of(step.b);
    const Pt pa = pos[a], pb = pos[b];
    const double dx = pb.x - pa.x, dy = pb.y - pa.y;
    const double len = std::hypot(dx, dy);
    const double h = std::sqrt(4.0 - len * len / 4.0);
    const Pt mid{(pa.x + pb.x) / 2.0, (pa.y + pb.y) / 2.0};
    const Pt left{mid.x - dy / len * h, mid.y + dx / len * h};
    const Pt right{mid.x + dy / len * h, mid.y - dx / len * h};
    int side = rotation_side(rs, g.id(v), step.a, step.b);
    if (mirror) side = -side;
    const Pt p = side >= 0 ? left : right;

    for (std::size_t w = 0; w < n; ++w) {
      if (!placed[w]) continue;
      const double d = std::hypot(p.x - pos[w].x, p.y - pos[w].y) - 2.0;
      if (d < -tol) {
        throw NotRealizableError("not unit-realizable: disk '" + g.id(v) + "' overlaps '" +
                                     g.id(w) + "'",
                                 g.id(v));
      }
      if (d <= tol && !g.adjacent(v, w)) {
        throw NotRealizableError("not unit-realizable: disk '" + g.id(v) + "' touches non-neighbor '" +
                                     g.id(w) + "'",
                                 g.id(v));
      }
    }
    pos[v] = p;
    placed[v] = 1;
  }

  std::vector<Disk> disks;
  for (std::size_t v = 0; v < n; ++v) {
    disks.push_back({g.id(v), pos[v].x, mirror ? -pos[v].y : pos[v].y, 1.0});
  }
  out.packing = Packing(std::move(disks), tol);
  const auto report = validate_dcr(out.packing, g);
  if (!report.valid) {
    const Violation& bad = report.violations.front();
    throw NotRealizableError(std::string("not unit-realizable: ") + to_string(bad.kind) +
                                 " between '" + bad.a + "' and '" + bad.b + "'",
                             bad.a);
  }
  return out;
}

}  // namespace diskpack
