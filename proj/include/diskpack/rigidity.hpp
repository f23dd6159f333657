#pragma once

#include <cstdint>
#include <vector>

#include "diskpack/geometry.hpp"
#include "diskpack/graph.hpp"

namespace diskpack {

struct PeelStep {
  VertexId removed;
  VertexId a;  // the two neighbors at removal time, a < b
  VertexId b;
};

enum class PeelPolicy { SmallestId, LargestId, Random };

struct PeelOrder {
  PeelPolicy policy = PeelPolicy::SmallestId;
  std::uint64_t seed = 0;  // used by PeelPolicy::Random
};

/// Biconnected and internally triangulated outerplane under `rs`.
/// Throws InputError for an invalid rotation system.
bool check_rigidity_precondition(const Graph& g, const RotationSystem& rs);

struct RigidResult {
  Packing packing;
  std::vector<PeelStep> peel;
};

/// Rebuilds the unit-disk packing of an internally triangulated outerplane
/// graph by peeling degree-2 vertices down to a triangle and re-inserting
/// them. The base triangle (the remaining ids in sorted order) is placed at
/// (0,0), (2,0), (1,sqrt 3); the result is reflected when that is needed to
/// match the clockwise orders of `rs`. Throws NotRealizableError naming the
/// vertex whose insertion collides.
RigidResult reconstruct_rigid(const Graph& g, const RotationSystem& rs,
                              const PeelOrder& order = {}, double tol = kDefaultTolerance);

}  // namespace diskpack
