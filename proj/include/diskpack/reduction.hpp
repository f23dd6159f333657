#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diskpack/errors.hpp"
#include "diskpack/geometry.hpp"
#include "diskpack/interval.hpp"
#include "diskpack/io.hpp"
#include "diskpack/rational.hpp"
#include "diskpack/star_search.hpp"

/// Star instances built from 3-Partition: radius function, the inequality
/// checks behind the construction, outer/central radius approximation and
/// the packing induced by a solution.
namespace diskpack::reduction {

/// A' = {180 a} + 2(m-n) copies of 60B-5 + (m-n) copies of 60B+10, B' = 180B.
ThreePartitionInstance pad_instance(const ThreePartitionInstance& a, std::int64_t m);

/// r(x) = 2 - (4 - 12x/B)/B for B/4 <= x <= B/2.
Rational radius_fn(const Rational& x, std::int64_t B);
Rational radius_fn(std::int64_t x, std::int64_t B);
/// r(B/4 + 1), the separator radius.
Rational r_min(std::int64_t B);
/// r(B/2 - 1).
Rational r_max(std::int64_t B);

struct ConditionCheck {
  std::string name;
  bool holds = false;
  // The compared quantities after squaring away the roots; holds iff
  // lhs <= rhs and margin = rhs - lhs.
  Rational lhs;
  Rational rhs;
  Rational margin;
  std::string detail;  // e.g. which path evaluated a sweep
};

struct ConditionReport {
  std::int64_t B = 0;
  std::vector<ConditionCheck> checks;

  bool all_hold() const;
  const ConditionCheck& at(const std::string& name) const;
};

/// Largest B for which the per-x conditions are swept over every x.
inline constexpr std::int64_t kSweepLimit = 2000;

/// Evaluates, in exact rational arithmetic, the seven inequalities the
/// construction relies on:
///   "infeasible-width"   12 + 17/B^2 <= s_i
///   "infeasible-overlap" d(16/B^2, x) <= r(x) - 1/B^2 for all inputs x
///   "feasible-width"     12 - 24/B^2 + 17/B^2 <= s_f
///   "feasible-overlap"   same as infeasible-overlap with its own constants
///   "bow-saving"         saving s <= 1/(4B^2) when the bow is 1/(4B^2) deep
///   "space-window"       both widths still clear the window 12 + 1/(4B^2)
///   "outer-radius-range" 6 <= r_o <= 38 for every m >= 6
/// Throws InputError unless B > 12 and B = 0 mod 4.
ConditionReport check_feasibility_conditions(std::int64_t B);

/// Radius k of the outer and central disks for six gaps whose separators
/// (radius r_sep) are `separator_distance` apart:
/// k = c + 3r + sqrt(6cr + 12r^2) with c = 2r + separator_distance.
Interval extreme_outer_radius(const Rational& r_sep, const Rational& separator_distance,
                              unsigned bits = 128);

enum class Mode { Faithful, Demonstration };

const char* to_string(Mode m);

struct ReductionParams {
  std::int64_t m = 0;               // gap count, a power of two
  std::optional<Rational> eps3;     // default 1/(16 B^2)
  std::optional<Rational> eps4;     // default 1/(128 B^2)
  Mode mode = Mode::Demonstration;
};

/// Upper bound on (pi/6)(1/(8B^2) + 2B^2(7 + r_min)^2 - r_min + 39), the
/// smallest gap count for which the bow stays shallow enough.
Rational gap_count_lower_bound(std::int64_t B);

/// Smallest power of two >= gap_count_lower_bound(B).
std::int64_t faithful_gap_count(std::int64_t B);

struct OuterCentralRadii {
  Interval outer_exact;    // encloses the exact outer radius
  Interval outer;          // every value lies in (exact, exact + eps3]
  Rational outer_value;    // midpoint of `outer`
  Interval center_exact;   // encloses outer_value / sin(pi/m) - outer_value
  Interval center;         // every value lies in (that, that + eps4]
  Rational center_value;   // midpoint of `center`
  Interval sine;           // sin(pi/m)
  unsigned bits = 0;       // precision that met the widths
};

/// Throws InputError for a non-power-of-two m or non-positive slacks, and
/// GeometryError when the widths need more than `max_bits`.
OuterCentralRadii compute_outer_central_radii(std::int64_t B, std::int64_t m, const Rational& eps3,
                                              const Rational& eps4, unsigned max_bits = 1 << 14);

/// Largest m that build_star_instance materializes in faithful mode.
inline constexpr std::int64_t kMaterializeLimit = 4096;

struct StarReductionInstance {
  ThreePartitionInstance source;
  ThreePartitionInstance padded;
  ReductionParams params;  // with eps3/eps4 filled in
  Rational center;         // weight of the central disk
  Rational outer;          // weight of each outer disk
  Rational separator;      // r_min of the padded bound
  std::vector<Rational> inputs;  // r(a') parallel to padded.A
  OuterCentralRadii radii;
  std::vector<std::string> caveats;

  std::int64_t m() const { return params.m; }
  std::size_t vertex_count() const { return 1 + 6 * static_cast<std::size_t>(params.m); }

  static VertexId center_id() { return "c"; }
  static VertexId outer_id(std::size_t j) { return "o" + std::to_string(j); }
  static VertexId input_id(std::size_t i) { return "in" + std::to_string(i); }
  static VertexId separator_id(std::size_t j) { return "s" + std::to_string(j); }

  /// The star, weights rounded to doubles.
  Graph graph() const;
  std::map<VertexId, Rational> exact_weights() const;
};

StarReductionInstance build_star_instance(const ThreePartitionInstance& a,
                                          const ReductionParams& params);

Json instance_to_json(const StarReductionInstance& inst);
StarReductionInstance instance_from_json(const Json& j);

/// Straight-base width of three tangent disks in the given order:
/// r1 + r3 + 2 sqrt(r1 r2) + 2 sqrt(r2 r3).
double triple_width(double r1, double r2, double r3);

/// A triple that cannot be placed in its gap.
class EmbedFitError : public GeometryError {
 public:
  EmbedFitError(const std::string& what, std::size_t gap, double residual)
      : GeometryError(what), gap(gap), residual(residual) {}

  std::size_t gap;
  double residual;
};

/// Per-gap placement data of an embedded solution.
struct GapPlacement {
  Triple triple;            // indices into padded.A in placement order
  std::int64_t sum = 0;
  double base_residual = 0.0;   // 12 + 1/(4B^2) minus the triple's best width
  double angle_residual = 0.0;  // spare angle on the bow, radians
};

struct EmbeddedSolution {
  Packing packing;
  std::vector<GapPlacement> gaps;
};

/// Packs the star for a partition of the padded instance: center at the
/// origin, outer disks every 2pi/m, two separators in the corners of each
/// gap and the triple on the bow. Throws InputError for a malformed
/// partition and EmbedFitError for a triple that does not fit.
EmbeddedSolution embed_solution(const StarReductionInstance& inst, const std::vector<Triple>& partition);

}  // namespace diskpack::reduction
