#include "diskpack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "diskpack/errors.hpp"

namespace diskpack {
namespace {

void require_finite(const Disk& d) {
  if (!std::isfinite(d.cx) || !std::isfinite(d.cy) || !std::isfinite(d.r)) {
    throw GeometryError("degenerate disk '" + d.id + "'");
  }
}

// Pairs (i, j), i < j, whose x-extents come within `tol` of each other.
// Sweeps in order of left endpoint.
template <typename F>
void for_each_candidate_pair(const std::vector<Disk>& disks, double tol, F&& visit) {
  std::vector<std::size_t> order(disks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return disks[a].cx - disks[a].r < disks[b].cx - disks[b].r;
  });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Disk& a = disks[order[k]];
    const double right = a.cx + a.r + tol;
    for (std::size_t l = k + 1; l < order.size(); ++l) {
      const Disk& b = disks[order[l]];
      if (b.cx - b.r > right) break;
      if (order[k] < order[l]) {
        visit(order[k], order[l]);
      } else {
        visit(order[l], order[k]);
      }
    }
  }
}

}  // namespace

Packing::Packing(std::vector<Disk> disks, double tol) : disks_(std::move(disks)), tol_(tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw InputError("packing tolerance must be finite and >= 0");
  }
  double min_r = INFINITY;
  for (std::size_t i = 0; i < disks_.size(); ++i) {
    const Disk& d = disks_[i];
    require_finite(d);
    if (!(d.r > 0.0)) throw InputError("disk '" + d.id + "' has non-positive radius");
    if (!index_.emplace(d.id, i).second) throw InputError("duplicate disk id '" + d.id + "'");
    min_r = std::min(min_r, d.r);
  }
  if (!disks_.empty() && !(tol < min_r / 100.0)) {
    throw InputError("tolerance " + std::to_string(tol) +
                     " is not small relative to the smallest radius");
  }
}

const Disk& Packing::at(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("no disk with id '" + id + "'");
  return disks_[it->second];
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Disjoint: return "disjoint";
    case Relation::Tangent: return "tangent";
    case Relation::Overlap: return "overlap";
  }
  return "?";
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::MissingContact: return "missing-contact";
    case ViolationKind::ForbiddenContact: return "forbidden-contact";
    case ViolationKind::RadiusMismatch: return "radius-mismatch";
  }
  return "?";
}

double boundary_gap(const Disk& a, const Disk& b) {
  return std::hypot(a.cx - b.cx, a.cy - b.cy) - (a.r + b.r);
}

Relation disk_relation(const Disk& a, const Disk& b, double tol) {
  require_finite(a);
  require_finite(b);
  if (!(tol >= 0.0)) throw InputError("tolerance must be >= 0");
  const double g = boundary_gap(a, b);
  if (g < -tol) return Relation::Overlap;
  if (g <= tol) return Relation::Tangent;
  return Relation::Disjoint;
}

Graph extract_contact_graph(const Packing& p) {
  const auto& disks = p.disks();
  Graph g;
  for (const Disk& d : disks) g.add_vertex(d.id);

  std::vector<std::pair<std::size_t, std::size_t>> tangent;
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  for_each_candidate_pair(disks, p.tol(), [&](std::size_t i, std::size_t j) {
    switch (disk_relation(disks[i], disks[j], p.tol())) {
      case Relation::Tangent: tangent.emplace_back(i, j); break;
      case Relation::Overlap:
        if (!overlap || std::make_pair(i, j) < *overlap) overlap = std::make_pair(i, j);
        break;
      case Relation::Disjoint: break;
    }
  });
  if (overlap) {
    const Disk& a = disks[overlap->first];
    const Disk& b = disks[overlap->second];
    throw OverlapError(a.id, b.id, boundary_gap(a, b));
  }
  std::sort(tangent.begin(), tangent.end());
  for (auto [i, j] : tangent) g.add_edge(disks[i].id, disks[j].id);
  return g;
}

ContactReport validate_dcr(const Packing& p, const Graph& g,
                           const std::map<VertexId, double>* weights) {
  if (p.size() != g.size()) throw InputError("packing and graph have different vertex counts");
  for (const Disk& d : p.disks()) {
    if (!g.has_vertex(d.id)) throw InputError("disk '" + d.id + "' is not a graph vertex");
  }

  ContactReport report;
  const auto& disks = p.disks();
  std::unordered_set<std::uint64_t> seen;
  auto pair_key = [&](std::size_t a, std::size_t b) {
    const std::size_t ga = g.index_of(disks[a].id), gb = g.index_of(disks[b].id);
    return (static_cast<std::uint64_t>(std::min(ga, gb)) << 32) | std::max(ga, gb);
  };

  for_each_candidate_pair(disks, p.tol(), [&](std::size_t i, std::size_t j) {
    const Relation rel = disk_relation(disks[i], disks[j], p.tol());
    const double gap = boundary_gap(disks[i], disks[j]);
    const bool edge = g.adjacent(disks[i].id, disks[j].id);
    if (rel == Relation::Overlap) {
      report.violations.push_back({disks[i].id, disks[j].id, ViolationKind::Overlap, gap});
    } else if (rel == Relation::Tangent) {
      if (edge) {
        seen.insert(pair_key(i, j));
      } else {
        report.violations.push_back(
            {disks[i].id, disks[j].id, ViolationKind::ForbiddenContact, gap});
      }
    }
  });

  // Edges never reported tangent by the sweep are missing contacts (this
  // includes overlapping adjacent pairs, already reported as overlaps).
  for (const auto& [u, v] : g.edges()) {
    const std::size_t ga = g.index_of(u), gb = g.index_of(v);
    const std::uint64_t k = (static_cast<std::uint64_t>(std::min(ga, gb)) << 32) | std::max(ga, gb);
    if (seen.count(k)) continue;
    const double gap = boundary_gap(p.at(u), p.at(v));
    if (gap < -p.tol()) continue;
    report.violations.push_back({u, v, ViolationKind::MissingContact, gap});
  }

  if (weights != nullptr && !p.empty()) {
    for (const Disk& d : disks) {
      auto it = weights->find(d.id);
      if (it == weights->end() || !(it->second > 0.0)) {
        throw InputError("missing or non-positive weight for '" + d.id + "'");
      }
    }
    // Scale from the lexicographically smallest id.
    const auto smallest =
        std::min_element(disks.begin(), disks.end(),
                         [](const Disk& a, const Disk& b) { return a.id < b.id; });
    const double lambda = smallest->r / weights->at(smallest->id);
    report.scale = lambda;
    for (const Disk& d : disks) {
      const double err = d.r - lambda * weights->at(d.id);
      if (std::abs(err) > p.tol()) {
        report.violations.push_back({d.id, d.id, ViolationKind::RadiusMismatch, err});
      }
    }
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& x, const Violation& y) {
              return std::tie(x.a, x.b, x.kind) < std::tie(y.a, y.b, y.kind);
            });
  report.valid = report.violations.empty();
  return report;
}

double subtend_angle(double R, double r1, double r2) {
  if (!(R > 0.0) || !(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(R) || !std::isfinite(r1) ||
      !std::isfinite(r2)) {
    throw InputError("subtend_angle requires positive finite radii");
  }
  const double a = R + r1;
  const double b = R + r2;
  const double c = r1 + r2;
  double cosine = (a * a + b * b - c * c) / (2.0 * a * b);
  constexpr double kClampWindow = 1e-12;
  if (cosine > 1.0 + kClampWindow || cosine < -1.0 - kClampWindow) {
    throw GeometryError("impossible configuration");
  }
  cosine = std::clamp(cosine, -1.0, 1.0);
  return std::acos(cosine);
}

}  // namespace diskpack
