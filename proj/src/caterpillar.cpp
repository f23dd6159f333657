#include "diskpack/caterpillar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <tuple>
#include <unordered_map>

#include "diskpack/errors.hpp"

namespace diskpack {

CaterpillarDecision decide_caterpillar_udc(const Caterpillar& c) {
  CaterpillarDecision out;
  const auto deg = c.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] >= 6) {
      out.realizable = false;
      out.witness_vertex = i;
      out.reason = "inner vertex '" + c.inner_path[i] + "' has degree " + std::to_string(deg[i]);
      return out;
    }
  }
  std::optional<std::size_t> last5;
  bool low_since = false;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] == 5) {
      if (last5 && !low_since) {
        out.realizable = false;
        out.witness_pair = std::make_pair(*last5, i);
        out.reason = "degree-5 vertices '" + c.inner_path[*last5] + "' and '" + c.inner_path[i] +
                     "' have no vertex of degree <= 3 between them";
        return out;
      }
      last5 = i;
      low_since = false;
    } else if (deg[i] <= 3) {
      low_since = true;
    }
  }
  return out;
}

const char* to_string(Width w) { return w == Width::Narrow ? "narrow" : "wide"; }

namespace {

constexpr double kPi = 3.14159265358979323846;
// Clearance demanded between a new disk and non-adjacent disks while
// searching; far above any contact tolerance.
constexpr double kClearance = 1e-7;

double rad(double deg) { return deg * kPi / 180.0; }
double deg(double r) { return r * 180.0 / kPi; }

double wrap180(double a) {
  a = std::fmod(a + 180.0, 360.0);
  if (a < 0) a += 360.0;
  return a - 180.0;
}

struct Vec {
  double x, y;
};

Vec step_from(Vec c, double heading_deg) {
  return {c.x + 2.0 * std::cos(rad(heading_deg)), c.y + 2.0 * std::sin(rad(heading_deg))};
}

// Placed disks in a uniform grid with cell size 4 (a unit disk only
// interacts with unit disks whose centers are closer than 4). Removal is
// LIFO, which is all backtracking needs.
class DiskIndex {
 public:
  void push(const Disk& d) {
    cells_[cell_key(d.cx, d.cy)].push_back(disks_.size());
    disks_.push_back(d);
  }

  void truncate(std::size_t n) {
    while (disks_.size() > n) {
      const Disk& d = disks_.back();
      auto& v = cells_[cell_key(d.cx, d.cy)];
      v.pop_back();
      disks_.pop_back();
    }
  }

  std::size_t size() const { return disks_.size(); }
  const std::vector<Disk>& disks() const { return disks_; }

  template <typename F>
  void near(Vec c, F&& f) const {
    const auto ix = cell(c.x), iy = cell(c.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(combine(ix + dx, iy + dy));
        if (it == cells_.end()) continue;
        for (std::size_t k : it->second) f(k, disks_[k]);
      }
    }
  }

 private:
  static std::int64_t cell(double v) { return static_cast<std::int64_t>(std::floor(v / 4.0)); }
  static std::int64_t combine(std::int64_t ix, std::int64_t iy) {
    return (ix << 32) ^ (iy & 0xffffffffLL);
  }
  static std::int64_t cell_key(double x, double y) { return combine(cell(x), cell(y)); }

  std::vector<Disk> disks_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> cells_;
};

struct Arc {
  double lo, hi;  // degrees relative to the heading
  double width() const { return hi - lo; }
};

// Widest arc of directions (relative to `heading`) in which a new unit disk
// tangent to the unit disk at `c` clears every other disk. `self` is the
// index of the disk at `c` when it is already in the index.
std::optional<Arc> free_arc(const DiskIndex& idx, Vec c, double heading, std::size_t self,
                            const std::vector<Disk>& extra) {
  std::vector<std::pair<double, double>> blocked;
  auto add = [&](const Disk& q) {
    const double dx = q.cx - c.x, dy = q.cy - c.y;
    const double d = std::hypot(dx, dy);
    const double reach = 2.0 + kClearance;
    if (d >= 2.0 + reach) return;
    // New center p = c + 2u; |p - q| < reach  <=>  cos(angle) > t.
    const double t = (4.0 + d * d - reach * reach) / (4.0 * d);
    const double half = deg(std::acos(std::clamp(t, -1.0, 1.0)));
    const double mid = wrap180(deg(std::atan2(dy, dx)) - heading);
    double lo = mid - half, hi = mid + half;
    if (half >= 180.0) {
      blocked.emplace_back(-180.0, 180.0);
    } else if (lo < -180.0) {
      blocked.emplace_back(lo + 360.0, 180.0);
      blocked.emplace_back(-180.0, hi);
    } else if (hi > 180.0) {
      blocked.emplace_back(lo, 180.0);
      blocked.emplace_back(-180.0, hi - 360.0);
    } else {
      blocked.emplace_back(lo, hi);
    }
  };
  idx.near(c, [&](std::size_t k, const Disk& q) {
    if (k != self) add(q);
  });
  for (const Disk& q : extra) add(q);
  if (blocked.empty()) return Arc{-180.0, 180.0};

  std::sort(blocked.begin(), blocked.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& b : blocked) {
    if (!merged.empty() && b.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, b.second);
    } else {
      merged.push_back(b);
    }
  }
  std::optional<Arc> best;
  auto consider = [&](double lo, double hi) {
    if (hi > lo && (!best || hi - lo > best->width())) best = Arc{lo, hi};
  };
  for (std::size_t j = 0; j + 1 < merged.size(); ++j) consider(merged[j].second, merged[j + 1].first);
  consider(merged.back().second, merged.front().first + 360.0);
  return best;
}

struct Candidate {
  std::vector<double> leaves;  // relative directions
  double forward = 0.0;
  // ranking key, larger is better
  std::tuple<int, int, double, double, double> key{};
};

class Builder {
 public:
  Builder(const Caterpillar& c) : cat_(c), deg_(c.degrees()) {}

  std::vector<Disk> run() {
    const std::size_t L = cat_.inner_path.size();
    idx_.push({cat_.inner_path[0], 0.0, 0.0, 1.0});
    const auto& leaves0 = leaves_of(0);
    if (L == 1) {
      for (std::size_t j = 0; j < leaves0.size(); ++j) {
        place_leaf(0, {0.0, 0.0}, 0.0, 360.0 * static_cast<double>(j) / leaves0.size(), j);
      }
      return idx_.disks();
    }

    // First inner disk: leaves fanned symmetrically about the backward
    // direction, next inner disk straight ahead.
    const std::size_t k0 = leaves0.size();
    const double sigma0 =
        std::min(0.5, (360.0 - 60.0 * static_cast<double>(k0 + 1)) / (4.0 * (degree4_run(1) + 2)));
    double gap = 60.0 + sigma0;
    if (k0 >= 2 && 120.0 / static_cast<double>(k0 - 1) > gap) gap = 120.0 / (k0 - 1);
    for (std::size_t j = 0; j < k0; ++j) {
      place_leaf(0, {0.0, 0.0}, 0.0, 180.0 + (static_cast<double>(j) - (k0 - 1) / 2.0) * gap, j);
    }

    steps_.assign(L, Step{});
    steps_[1].c = {2.0, 0.0};
    steps_[1].heading = 0.0;
    steps_[1].self = idx_.size();
    idx_.push({cat_.inner_path[1], 2.0, 0.0, 1.0});

    const std::size_t budget = 200 * L + 20000;
    std::size_t tries = 0;
    std::size_t i = 1;
    while (true) {
      Step& st = steps_[i];
      if (i + 1 == L) {
        if (place_last(i)) return idx_.disks();
        if (!backtrack(i)) break;
        continue;
      }
      if (!st.generated) {
        st.mark = idx_.size();
        st.cands = candidates(i);
        st.next = 0;
        st.generated = true;
      }
      if (st.next == st.cands.size()) {
        if (!backtrack(i)) break;
        continue;
      }
      if (++tries > budget) break;
      idx_.truncate(st.mark);
      const Candidate& cand = st.cands[st.next++];
      for (std::size_t j = 0; j < cand.leaves.size(); ++j) {
        place_leaf(i, st.c, st.heading, cand.leaves[j], j);
      }
      Step& nx = steps_[i + 1];
      nx = Step{};
      nx.heading = wrap180(st.heading + cand.forward);
      nx.c = step_from(st.c, nx.heading);
      nx.self = idx_.size();
      idx_.push({cat_.inner_path[i + 1], nx.c.x, nx.c.y, 1.0});
      ++i;
    }
    throw GeometryError("caterpillar construction found no placement");
  }

 private:
  struct Step {
    Vec c{0.0, 0.0};
    double heading = 0.0;
    std::size_t self = 0;
    std::size_t mark = 0;
    bool generated = false;
    std::vector<Candidate> cands;
    std::size_t next = 0;
  };

  const std::vector<VertexId>& leaves_of(std::size_t i) const {
    static const std::vector<VertexId> none;
    auto it = cat_.leaves.find(cat_.inner_path[i]);
    return it == cat_.leaves.end() ? none : it->second;
  }

  std::size_t degree4_run(std::size_t from) const {
    std::size_t run = 0;
    while (from + run < deg_.size() && deg_[from + run] == 4) ++run;
    return run;
  }

  Disk leaf_disk(std::size_t i, Vec c, double heading, double rel, std::size_t j) const {
    const double a = rad(heading + rel);
    return {leaves_of(i)[j], c.x + 2.0 * std::cos(a), c.y + 2.0 * std::sin(a), 1.0};
  }

  void place_leaf(std::size_t i, Vec c, double heading, double rel, std::size_t j) {
    idx_.push(leaf_disk(i, c, heading, rel, j));
  }

  // Pops inner vertex i and resumes its predecessor's candidate list.
  bool backtrack(std::size_t& i) {
    steps_[i] = Step{};
    if (i == 1) return false;
    --i;
    idx_.truncate(steps_[i].mark);
    return true;
  }

  bool place_last(std::size_t i) {
    const Step& st = steps_[i];
    const auto& ls = leaves_of(i);
    if (ls.empty()) return true;
    auto arc = free_arc(idx_, st.c, st.heading, st.self, {});
    if (!arc) return false;
    const double k = static_cast<double>(ls.size());
    const double slack = arc->width() - (k - 1.0) * 60.0;
    if (slack <= 1e-6) return false;
    const double t = slack / (k + 1.0);
    for (std::size_t j = 0; j < ls.size(); ++j) {
      place_leaf(i, st.c, st.heading, arc->lo + t + static_cast<double>(j) * (60.0 + t), j);
    }
    return true;
  }

  std::vector<Candidate> candidates(std::size_t i) {
    const Step& st = steps_[i];
    std::vector<Candidate> out;
    auto arc = free_arc(idx_, st.c, st.heading, st.self, {});
    if (!arc) return out;
    const std::size_t k = leaves_of(i).size();
    const double excess = arc->width() - 60.0 * static_cast<double>(k);
    if (excess <= 1e-6) return out;
    const double margin = std::min(0.5, excess / (4.0 * (degree4_run(i + 1) + 2)));
    const double s = 60.0 + margin;

    for (std::size_t p = 0; p <= k; ++p) {
      const std::size_t q = k - p;
      const double a = arc->lo + margin + static_cast<double>(q) * s;
      const double b = arc->hi - margin - static_cast<double>(p) * s;
      if (a > b) continue;
      std::vector<double> rel;
      for (std::size_t j = 0; j < q; ++j) rel.push_back(arc->lo + margin + j * s);
      for (std::size_t j = 0; j < p; ++j) rel.push_back(arc->hi - margin - j * s);

      std::vector<double> fs;
      for (int t = 0; t <= 8; ++t) fs.push_back(a + (b - a) * t / 8.0);
      fs.push_back(std::clamp(-st.heading, a, b));
      std::sort(fs.begin(), fs.end());
      fs.erase(std::unique(fs.begin(), fs.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-9; }),
               fs.end());
      for (double f : fs) {
        Candidate cand{rel, f, {}};
        if (score(i, cand)) out.push_back(std::move(cand));
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Candidate& x, const Candidate& y) { return x.key > y.key; });
    return out;
  }

  // Looks one inner vertex ahead. Returns false for candidates that break
  // x-monotonicity.
  bool score(std::size_t i, Candidate& cand) const {
    const Step& st = steps_[i];
    const double h = wrap180(st.heading + cand.forward);
    if (std::abs(h) >= 85.0) return false;
    std::vector<Disk> extra;
    for (std::size_t j = 0; j < cand.leaves.size(); ++j) {
      extra.push_back(leaf_disk(i, st.c, st.heading, cand.leaves[j], j));
    }
    const Vec c2 = step_from(st.c, h);
    extra.push_back({cat_.inner_path[i], st.c.x, st.c.y, 1.0});
    auto arc = free_arc(idx_, c2, h, st.self, extra);

    const std::size_t need = deg_[i + 1] - 1;  // directions at the next vertex
    bool feasible = false;
    double width = 0.0, balance = 0.0;
    if (arc) {
      width = arc->width();
      feasible = need <= 1 ? width > 1e-6 : width - 60.0 * (need - 1) > 1e-6;
      if (i + 2 < deg_.size()) {
        balance = std::min(std::min(-arc->lo, 120.0), std::min(arc->hi, 120.0));
      }
    }
    cand.key = {feasible ? 1 : 0, std::abs(h) < 60.0 ? 1 : 0, std::floor(balance),
                std::floor(width), -std::abs(h)};
    return true;
  }

  const Caterpillar& cat_;
  std::vector<std::size_t> deg_;
  DiskIndex idx_;
  std::vector<Step> steps_;
};

}  // namespace

Packing construct_caterpillar_udc(const Caterpillar& c, double tol) {
  if (c.inner_path.empty()) throw InputError("caterpillar has an empty inner path");
  const auto decision = decide_caterpillar_udc(c);
  if (!decision.realizable) {
    const std::size_t at = decision.witness_vertex ? *decision.witness_vertex
                                                   : decision.witness_pair->second;
    throw NotRealizableError("caterpillar is not unit-disk realizable: " + decision.reason,
                             c.inner_path[at]);
  }
  Builder b(c);
  Packing p(b.run(), tol);
  const auto report = validate_dcr(p, c.to_graph());
  if (!report.valid) {
    const Violation& v = report.violations.front();
    throw GeometryError(std::string("caterpillar construction failed validation: ") +
                        to_string(v.kind) + " between '" + v.a + "' and '" + v.b + "'");
  }
  return p;
}

std::vector<Width> narrow_wide_trace(const Packing& p, const Caterpillar& c) {
  const Graph g = c.to_graph();
  for (const auto& v : g.vertices()) {
    if (!p.contains(v)) throw InputError("packing has no disk for '" + v + "'");
  }
  if (!validate_dcr(p, g).valid) throw InputError("packing does not realize the caterpillar");

  std::vector<Width> out(c.inner_path.size(), Width::Wide);
  for (std::size_t i = 1; i < c.inner_path.size(); ++i) {
    const Disk& a = p.at(c.inner_path[i - 1]);
    const Disk& b = p.at(c.inner_path[i]);
    const double len = std::hypot(b.cx - a.cx, b.cy - a.cy);
    const double nx = (b.cx - a.cx) / len, ny = (b.cy - a.cy) / len;
    const double px = a.cx + a.r * nx, py = a.cy + a.r * ny;  // contact point
    auto it = c.leaves.find(c.inner_path[i - 1]);
    if (it == c.leaves.end()) continue;
    for (const auto& leaf : it->second) {
      const Disk& d = p.at(leaf);
      const double dist = std::abs((d.cx - px) * nx + (d.cy - py) * ny);
      if (dist < d.r - p.tol()) {
        out[i] = Width::Narrow;
        break;
      }
    }
  }
  return out;
}

}  // namespace diskpack
