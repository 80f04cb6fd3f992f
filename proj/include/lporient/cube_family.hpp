#pragma once

#include <cstdint>
#include <vector>

#include "lporient/model.hpp"
#include "lporient/numeric.hpp"

namespace lporient {

/// One member of the doubly-exponential family of Holt-Klee cube
/// orientations: the edges in the last coordinate class whose prefix weight
/// equals r = floor(n/2) are free, and free_bits picks a direction for each,
/// in ascending order of the prefix's binary value. Bit 1 points the edge
/// toward last coordinate 1.
struct FamilyAssignment {
  int n;
  std::vector<std::uint8_t> free_bits;
};

/// The free E_n edges (endpoints differing in coordinate n, prefix weight
/// exactly floor(n/2)), ordered by prefix binary value. Length is
/// choose(n-1, floor(n/2)). Requires n >= 2.
std::vector<std::pair<VertexId, VertexId>> free_edges(int n);

/// Number of free bits for dimension n, i.e. choose(n-1, floor(n/2)).
/// For n = 1 this is choose(0, 0) = 1: the two orientations of a segment.
BigInt family_size_log2(int n);

Orientation build_family_orientation(const FamilyAssignment& a);

}  // namespace lporient
