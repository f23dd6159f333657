#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diskpack/graph.hpp"

namespace diskpack {

/// Default contact tolerance for unit-radius geometry.
inline constexpr double kDefaultTolerance = 1e-9;

struct Disk {
  VertexId id;
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;
};

/// Positioned disks with unique ids and one contact tolerance shared by all
/// predicates. Construction validates the invariants.
class Packing {
 public:
  Packing() = default;
  Packing(std::vector<Disk> disks, double tol);

  const std::vector<Disk>& disks() const { return disks_; }
  double tol() const { return tol_; }
  std::size_t size() const { return disks_.size(); }
  bool empty() const { return disks_.empty(); }

  const Disk& at(const VertexId& id) const;
  bool contains(const VertexId& id) const { return index_.count(id) != 0; }

  Packing with_tolerance(double tol) const { return Packing(disks_, tol); }

 private:
  std::vector<Disk> disks_;
  double tol_ = kDefaultTolerance;
  std::map<VertexId, std::size_t> index_;
};

enum class Relation { Disjoint, Tangent, Overlap };

const char* to_string(Relation r);

/// Signed boundary gap: center distance minus the radius sum.
double boundary_gap(const Disk& a, const Disk& b);

Relation disk_relation(const Disk& a, const Disk& b, double tol);

/// Contact graph of a packing; throws OverlapError on the first overlapping
/// pair (ordered by packing position).
Graph extract_contact_graph(const Packing& p);

enum class ViolationKind { Overlap, MissingContact, ForbiddenContact, RadiusMismatch };

const char* to_string(ViolationKind k);

struct Violation {
  VertexId a;
  VertexId b;  // equal to `a` for RadiusMismatch
  ViolationKind kind;
  double gap;  // boundary gap, or radius error for RadiusMismatch
};

struct ContactReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::optional<double> scale;  // fitted radius/weight ratio when weights given
};

/// Checks that the packing is a contact representation of `g`, and when
/// `weights` is given that radii are proportional to it. The scale is fitted
/// from the lexicographically smallest vertex.
ContactReport validate_dcr(const Packing& p, const Graph& g,
                           const std::map<VertexId, double>* weights = nullptr);

/// Angle at the center of a disk of radius `R` between the centers of two
/// mutually tangent disks of radii `r1`, `r2` that both touch it.
double subtend_angle(double R, double r1, double r2);

}  // namespace diskpack
