#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "diskpack/geometry.hpp"
#include "diskpack/graph.hpp"

namespace diskpack {

/// Angle at the center (radius R) between two leaves of radii ra, rb that
/// are both tangent to the center and whose boundary gap is `gap`.
/// Returns pi when no smaller angle achieves the gap.
double leaf_separation_angle(double R, double ra, double rb, double gap);

struct EmbeddedStarResult {
  bool realizable = false;
  /// Input leaf indices in clockwise order, starting at the largest leaf.
  std::vector<std::size_t> order;
  /// Tight clockwise angles (radians) per position of `order`, before the
  /// residual slack is spread.
  std::vector<double> tight_angles;
  /// Angle left before the first leaf after tight placement; realizable
  /// iff positive. Meaningless when rejected early.
  double residual = 0.0;
  /// Position in `order` of the leaf that wrapped into the first leaf.
  std::optional<std::size_t> rejected_at;
  /// Candidate-list elements inspected over the whole run.
  std::size_t traversal_steps = 0;
  /// Candidate list (positions in `order`) after the last insertion.
  std::vector<std::size_t> candidates;
  std::optional<Packing> packing;
};

/// Linear-time decision and construction for a star with a fixed clockwise
/// leaf order. Leaves touch the center only; leaf pairs must keep a boundary
/// gap of at least 2 * tol. `center_radius` overrides the star's center
/// radius; `tol` defaults to 1e-9 times the smallest radius.
EmbeddedStarResult decide_and_construct_embedded_star(const WeightedStar& s,
                                                      std::optional<double> center_radius = {},
                                                      std::optional<double> tol = {});

}  // namespace diskpack
