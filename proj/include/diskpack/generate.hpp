#pragma once

#include <cstddef>
#include <random>

#include "diskpack/graph.hpp"

namespace diskpack {

struct CaterpillarGenOptions {
  std::size_t max_vertices = 200;
  std::size_t max_degree = 5;    // 6 allows degree-6 inner vertices
  bool realizable_only = false;  // lower degree-5 vertices that break realizability
};

/// Random caterpillar in canonical form (path endpoints carry leaves).
/// Inner vertices are "p<i>", their leaves "p<i>_<j>".
Caterpillar random_caterpillar(std::mt19937_64& rng, const CaterpillarGenOptions& opts = {});

/// Random triangulated polygon on n >= 3 vertices, grown one ear at a time.
/// With probability `strip_bias` the new ear goes on an outer edge of the
/// previous ear, which produces long triangle strips. The rotation system
/// comes from the convex-position drawing and names the outer cycle.
struct GeneratedEmbedding {
  Graph graph;
  RotationSystem rotation;
};
GeneratedEmbedding random_outerplane(std::mt19937_64& rng, std::size_t n, double strip_bias = 0.8);

}  // namespace diskpack
