#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diskpack/geometry.hpp"
#include "diskpack/graph.hpp"

namespace diskpack {

struct CaterpillarDecision {
  bool realizable = true;
  /// Inner-path indices (0-based) of two degree-5 vertices with no vertex
  /// of degree <= 3 between them.
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  /// Inner-path index of the first vertex of degree >= 6.
  std::optional<std::size_t> witness_vertex;
  std::string reason;
};

/// Unit-disk realizability of a caterpillar from its inner-path degrees.
CaterpillarDecision decide_caterpillar_udc(const Caterpillar& c);

/// Unit-disk packing whose contact graph is the caterpillar. The inner path
/// starts at the origin heading along +x and stays x-monotone. Throws
/// NotRealizableError when the decision says no.
Packing construct_caterpillar_udc(const Caterpillar& c, double tol = kDefaultTolerance);

enum class Width { Narrow, Wide };

const char* to_string(Width w);

/// Per inner vertex: Narrow when a leaf disk of the previous inner disk
/// crosses the common tangent line of the two inner disks. Index 0 is
/// labelled Wide. Throws InputError if `p` does not realize `c`.
std::vector<Width> narrow_wide_trace(const Packing& p, const Caterpillar& c);

}  // namespace diskpack
