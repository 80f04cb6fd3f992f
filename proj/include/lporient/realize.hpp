#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lporient/numeric.hpp"
#include "lporient/pairseq.hpp"

namespace lporient {

/// A point with exact rational coordinates. All geometry in this module is
/// exact; facet side tests are sign decisions and floating point is never
/// used.
struct RationalPoint {
  std::vector<Rational> coords;

  bool operator==(const RationalPoint&) const = default;
};

/// 2d points realizing a combinatorial d-crosspolytope, with the objective
/// fixed to the first coordinate. Points follow the canonical vertex order
/// +1, -1, +2, -2, ..., and pairing[i] = (2i, 2i+1).
struct Realization {
  int d = 0;
  std::vector<RationalPoint> points;
  std::vector<std::pair<int, int>> pairing;

  bool operator==(const Realization&) const = default;
};

class BadSequenceError : public std::runtime_error {
 public:
  explicit BadSequenceError(int k)
      : std::runtime_error("bad pair sequence, break k=" + std::to_string(k)),
        break_k(k) {}
  int break_k;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-transversal verdicts: for each of the 2^d one-point-per-pair choices,
/// the sign all non-members take against the oriented facet hyperplane.
/// Mask bit i selects pairing[i].second.
struct FacetTable {
  bool valid = false;
  struct Entry {
    std::uint32_t mask;
    int side;  // +1 or -1
  };
  std::vector<Entry> entries;
  std::optional<std::uint32_t> offending_mask;
  std::string reason;
};

/// True iff each transversal spans a hyperplane with all remaining points
/// strictly on one side; those simplices then tile the boundary of a
/// combinatorial d-crosspolytope.
FacetTable verify_crosspolytope(const std::vector<RationalPoint>& points,
                                const std::vector<std::pair<int, int>>& pairing);

inline FacetTable verify_crosspolytope(const Realization& rz) {
  return verify_crosspolytope(rz.points, rz.pairing);
}

/// Adds a new antipodal pair {y, z} to a (d-1)-realization regarded as lying
/// in the slice x_d = 0 of R^d. y and z must have d coordinates, lie strictly
/// on opposite sides of that hyperplane, and the open segment yz must meet
/// the relative interior of the base polytope; violations are detected
/// exactly and raise GeometryError.
Realization extend_realization(const Realization& base, const RationalPoint& y,
                               const RationalPoint& z);

/// Exact-rational realization of a good pair sequence with objective x_1:
/// the base d = 1 is the two points 1 and 2 on a line; each level inserts
/// the last pair's two vertices at first coordinates chosen to land in the
/// right order slots, through a relative-interior point along e_1 + e_d.
/// Deterministic: a pure function of the sequence.
Realization realize(const PairSequence& s);

/// Rank vertices by first coordinate and collect pair labels; requires all
/// first coordinates distinct.
PairSequence induced_sequence(const Realization& rz);

/// Largest denominator bit-size over all coordinates (reporting aid).
std::size_t max_denominator_bits(const Realization& rz);

}  // namespace lporient
