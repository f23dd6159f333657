#include "diskpack/star.hpp"

#include <algorithm>
#include <cmath>

#include "diskpack/errors.hpp"

namespace diskpack {

double leaf_separation_angle(double R, double ra, double rb, double gap) {
  const double a = R + ra, b = R + rb, c = ra + rb + gap;
  const double cosine = (a * a + b * b - c * c) / (2.0 * a * b);
  if (cosine <= -1.0) return M_PI;
  return std::acos(std::min(1.0, cosine));
}

EmbeddedStarResult decide_and_construct_embedded_star(const WeightedStar& s,
                                                      std::optional<double> center_radius,
                                                      std::optional<double> tol) {
  if (!s.embedded) {
    throw InputError("star has no circular leaf order; use the brute-force search");
  }
  if (s.leaves.empty()) throw InputError("star has no leaves");
  const double R = center_radius.value_or(s.center_radius);
  if (!(R > 0.0) || !std::isfinite(R)) throw InputError("center radius must be positive");
  double rmin = R;
  for (const auto& l : s.leaves) {
    if (!(l.radius > 0.0) || !std::isfinite(l.radius)) {
      throw InputError("leaf '" + l.id + "' has non-positive radius");
    }
    rmin = std::min(rmin, l.radius);
  }
  const double t = tol.value_or(kDefaultTolerance * rmin);
  const double gap = 2.0 * t;

  const std::size_t n = s.leaves.size();
  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (s.leaves[i].radius > s.leaves[first].radius) first = i;
  }
  EmbeddedStarResult out;
  for (std::size_t i = 0; i < n; ++i) out.order.push_back((first + i) % n);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = s.leaves[out.order[i]].radius;
  auto sep = [&](std::size_t a, std::size_t b) { return leaf_separation_angle(R, r[a], r[b], gap); };

  const double two_pi = 2.0 * M_PI;
  std::vector<double> theta(n, 0.0);
  // Candidate list: positions with non-increasing radii; the last entries are
  // the most recent and smallest.
  std::vector<std::size_t> list{0};
  double residual = two_pi;
  for (std::size_t i = 1; i < n; ++i) {
    double angle = 0.0;
    std::size_t keep = list.size();
    while (keep > 0) {
      const std::size_t x = list[keep - 1];
      ++out.traversal_steps;
      angle = std::max(angle, theta[x] + sep(x, i));
      if (r[x] >= r[i]) break;
      --keep;
    }
    list.resize(keep);
    list.push_back(i);
    theta[i] = angle;
    const double wrap = two_pi - angle - sep(i, 0);
    residual = std::min(residual, wrap);
    if (!(wrap > 0.0)) {
      out.rejected_at = i;
      out.tight_angles.assign(theta.begin(), theta.begin() + static_cast<long>(i) + 1);
      out.residual = wrap;
      out.candidates = list;
      return out;
    }
  }
  out.tight_angles = theta;
  out.candidates = list;
  out.residual = residual;
  out.realizable = residual > 0.0;

  std::vector<Disk> disks;
  disks.push_back({s.center, 0.0, 0.0, R});
  for (std::size_t i = 0; i < n; ++i) {
    const double a = theta[i] + static_cast<double>(i) * residual / static_cast<double>(n);
    const double d = R + r[i];
    disks.push_back({s.leaves[out.order[i]].id, d * std::cos(-a), d * std::sin(-a), r[i]});
  }
  out.packing = Packing(std::move(disks), t);
  return out;
}

}  // namespace diskpack
