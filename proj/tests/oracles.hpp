#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. None of these call the algorithm they check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diskpack/geometry.hpp"
#include "diskpack/graph.hpp"
#include "diskpack/rational.hpp"

namespace oracle {

/// Unit-disk realizability of a caterpillar from inner-path degrees, by
/// scanning every pair of degree-5 vertices.
bool caterpillar_degree_rule(const std::vector<std::size_t>& inner_degrees);

struct GridSearchResult {
  std::optional<bool> found;  // nullopt when the node budget ran out
  std::size_t nodes = 0;
};

/// Depth-first search for a unit-disk realization with every neighbor
/// direction on a grid of `step_deg` degrees. Adjacent disks touch exactly,
/// all others keep a gap above 1e-9.
GridSearchResult caterpillar_grid_search(const diskpack::Caterpillar& c, int step_deg = 1,
                                         std::size_t budget = 50'000'000);

struct StarReference {
  bool realizable = false;
  std::vector<double> angles;  // clockwise placement angles, leaf 0 at 0
};

/// Quadratic reference: each leaf (in the given order) goes to the smallest
/// clockwise angle that keeps boundary gap >= `gap` to every placed leaf;
/// realizable iff every leaf also clears leaf 0 across the wrap with room
/// to spare.
StarReference star_all_pairs(double R, const std::vector<double>& radii, double gap);

/// Subset DP feasibility for 3-Partition (|A| <= 18).
bool three_partition_dp(const std::vector<std::int64_t>& A, std::int64_t B);

struct ExactDisk {
  std::string id;
  diskpack::Rational cx, cy, r;
};

/// Contact graph by exact rational comparison of squared distances with
/// (r1 + r2 -+ tol)^2. Returns nullopt if some pair overlaps.
std::optional<diskpack::Graph> contact_graph_exact(const std::vector<ExactDisk>& disks,
                                                   const diskpack::Rational& tol);

/// x - sin(pi / 2^p), evaluated with `bits`-bit MPFR arithmetic.
double mpfr_sin_diff(const diskpack::Rational& x, unsigned p, unsigned bits = 200);

/// x - sqrt(a) with a `bits`-bit MPFR square root.
double mpfr_sqrt_diff(const diskpack::Rational& x, const diskpack::Rational& a, unsigned bits = 200);

/// Pairwise center distances in id order.
std::vector<std::vector<double>> distance_matrix(const diskpack::Packing& p);

}  // namespace oracle
