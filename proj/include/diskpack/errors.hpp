#pragma once

#include <stdexcept>
#include <string>

namespace diskpack {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad files, violated preconditions).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Geometric impossibility discovered while computing (overlaps,
/// impossible tangency configurations, blocked insertions).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A pair of disks overlaps where the caller required interior-disjointness.
class OverlapError : public GeometryError {
 public:
  OverlapError(std::string a, std::string b, double gap)
      : GeometryError("disks '" + a + "' and '" + b + "' overlap (gap " +
                      std::to_string(gap) + ")"),
        first(std::move(a)),
        second(std::move(b)),
        gap(gap) {}

  std::string first;
  std::string second;
  double gap;
};

/// A constructive routine certified that no representation exists.
class NotRealizableError : public Error {
 public:
  NotRealizableError(const std::string& what, std::string vertex)
      : Error(what), vertex(std::move(vertex)) {}

  std::string vertex;
};

}  // namespace diskpack
