#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "diskpack/geometry.hpp"
#include "diskpack/graph.hpp"
#include "diskpack/star.hpp"

namespace diskpack {

struct StarSearchResult {
  /// Input leaf indices in clockwise order.
  std::vector<std::size_t> order;
  Packing packing;
  std::size_t orders_tried = 0;
};

/// Tries every circular leaf order up to rotation and reflection (the
/// largest leaf fixed first) with the embedded algorithm. Returns the first
/// success in lexicographic order of the remaining leaves.
std::optional<StarSearchResult> star_wdc_bruteforce(const WeightedStar& s,
                                                    std::optional<double> center_radius = {},
                                                    std::size_t max_leaves = 10,
                                                    std::optional<double> tol = {});

struct ThreePartitionInstance {
  std::vector<std::int64_t> A;
  std::int64_t B = 0;

  std::size_t n() const { return A.size() / 3; }
};

/// Throws InputError unless |A| = 3n, every element lies strictly between
/// B/4 and B/2, and the elements sum to n * B.
void validate_instance(const ThreePartitionInstance& a);

using Triple = std::array<std::size_t, 3>;

/// Exact backtracking search. Triples hold indices into `a.A`, each triple
/// sorted, triples ordered by their first index.
std::optional<std::vector<Triple>> three_partition_bruteforce(const ThreePartitionInstance& a);

}  // namespace diskpack
