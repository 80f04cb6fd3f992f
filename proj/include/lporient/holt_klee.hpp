#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lporient/model.hpp"

namespace lporient {

struct CycleViolation {
  DirectedCycle cycle;
};

struct MultipleSources {
  Face face;
  std::vector<VertexId> vertices;
};

struct MultipleSinks {
  Face face;
  std::vector<VertexId> vertices;
};

/// A face of dimension k with fewer than k internally-disjoint monotone
/// source-to-sink paths. `cut` is a set of internal vertices whose removal
/// leaves only the direct source->sink arcs, so achieved = |cut| + directs
/// bounds the attainable path count from above.
struct PathDeficit {
  Face face;
  int required;
  int achieved;
  std::vector<VertexId> cut;
};

using HKViolation =
    std::variant<CycleViolation, MultipleSources, MultipleSinks, PathDeficit>;

struct HKVerdict {
  bool passed = false;
  std::optional<HKViolation> violation;
};

struct AcyclicityResult {
  bool acyclic = false;
  std::optional<DirectedCycle> cycle;
};

AcyclicityResult is_acyclic(const Orientation& o);

/// Sources and sinks of the induced subdigraph on face f, ascending ids.
std::pair<std::vector<VertexId>, std::vector<VertexId>> face_source_sink(
    const Orientation& o, const Face& f);

/// Maximum number of source->sink directed paths in a digraph, pairwise
/// disjoint except at the endpoints. Computed as a unit-vertex-capacity
/// max-flow; the returned cut witnesses optimality.
struct DisjointPaths {
  int count = 0;
  std::vector<int> cut;  // local vertex indices, internal vertices only
};

DisjointPaths max_disjoint_paths(const FaceDigraph& g, int s, int t);

/// The face operation; requires a unique source and unique sink in f.
int disjoint_monotone_paths(const Orientation& o, const Face& f);

/// Full Holt-Klee decision: acyclic, unique source/sink in every face of
/// dimension >= 1 (whole polytope included), and >= k disjoint monotone
/// paths in every face of dimension k >= 2. Faces are scanned by increasing
/// dimension, then enumeration order, so the first violation is stable.
HKVerdict is_holt_klee(const Orientation& o);

/// Re-checks a verdict's certificate against the orientation.
bool verdict_is_valid(const Orientation& o, const HKVerdict& v);

/// One-line rendering: "HK: PASS" or "HK: FAIL <kind> <face> <witnesses>".
std::string describe(const Orientation& o, const HKVerdict& v);

}  // namespace lporient
