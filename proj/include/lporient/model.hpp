#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lporient {

enum class PolytopeKind { Cube, Crosspolytope };

/// Canonical vertex index.
///  - Cube of dimension n: id = binary value of the coordinate string,
///    read most-significant-first, so id runs over 0..2^n-1 in string order.
///  - Crosspolytope of dimension d: id = 2*(pair_index-1) + (sign == '-'),
///    i.e. +1, -1, +2, -2, ..., +d, -d.
using VertexId = int;

namespace limits {
inline constexpr int kCubeDimCap = 16;
inline constexpr int kCrossDimCap = 12;
}  // namespace limits

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex of the n-cube, a binary string of length n.
/// Coordinate i (1-based) is bit (n - i) of `bits`, so the string form is the
/// usual binary representation of `bits` padded to n places.
struct CubeVertex {
  int n;
  std::uint32_t bits;

  int coordinate(int i) const { return (bits >> (n - i)) & 1u; }
  std::string name() const;
};

/// Vertex of the d-crosspolytope: one of the two ends (+ or -) of pair P_i.
struct CrossVertex {
  int pair_index;  // 1-based
  bool negative;

  std::string name() const;
};

std::string vertex_name(PolytopeKind kind, int dim, VertexId v);

/// Face of the cube: a set of fixed coordinates together with their values.
/// fixed bit (i-1) set <=> coordinate i is fixed; `values` is a submask of
/// `fixed` holding the fixed coordinates' values. The whole cube is fixed = 0.
struct CubeFace {
  int n;
  std::uint32_t fixed;
  std::uint32_t values;

  int dim() const;
  /// Pattern string, coordinate 1 first: fixed coordinates print their bit,
  /// free coordinates print '*', e.g. "**0" for {x3 = 0} in the 3-cube.
  std::string pattern() const;
  std::vector<VertexId> vertex_ids() const;  // ascending
};

/// Face of the crosspolytope: a transversal vertex set (at most one vertex
/// per pair) for proper faces, or the whole-polytope marker.
struct CrossFace {
  int d;
  bool whole = false;
  std::vector<VertexId> members;  // sorted ascending; empty iff whole

  int dim() const;
  std::string name() const;  // "{+1,-3}" or "whole"
  std::vector<VertexId> vertex_ids() const;
};

using Face = std::variant<CubeFace, CrossFace>;

int face_dim(const Face& f);
std::string face_name(const Face& f);
std::vector<VertexId> face_vertex_ids(const Face& f);

/// Immutable combinatorial data of one polytope: canonical vertex and edge
/// enumeration plus adjacency. Shared via the registry in `model_for`.
struct PolytopeModel {
  PolytopeKind kind;
  int dim;
  int vertex_count;
  /// Canonical undirected edge list, each with u < v, sorted by (u, v).
  std::vector<std::pair<VertexId, VertexId>> edges;
  /// incident[v] = (neighbor, edge index), neighbors ascending.
  std::vector<std::vector<std::pair<VertexId, int>>> incident;

  int edge_index(VertexId u, VertexId v) const;  // -1 if not an edge

 private:
  friend std::shared_ptr<const PolytopeModel> model_for(PolytopeKind, int);
  std::vector<int> cube_edge_base_;   // cube: running edge count per vertex
  std::vector<int> cross_edge_idx_;   // crosspolytope: V*V lookup table
};

/// Registry of models keyed by (kind, dim); thread-safe, values immutable.
std::shared_ptr<const PolytopeModel> model_for(PolytopeKind kind, int dim);

/// All undirected edges of the n-cube (pairs at Hamming distance 1).
std::vector<std::pair<VertexId, VertexId>> build_cube_edges(
    int n, int dim_cap = limits::kCubeDimCap);

/// All undirected edges of the d-crosspolytope (all pairs except antipodal).
std::vector<std::pair<VertexId, VertexId>> build_cross_edges(
    int d, int dim_cap = limits::kCrossDimCap);

/// All k-dimensional faces, ordered by (fixed set / pair subset, then values
/// / sign pattern), both ascending; a fixed deterministic order.
std::vector<Face> enumerate_faces(PolytopeKind kind, int dim, int k);

Face whole_face(PolytopeKind kind, int dim);

/// An orientation: one direction bit per canonical undirected edge.
/// dir[e] = 1 means the edge points from the smaller to the larger vertex id.
class Orientation {
 public:
  Orientation(PolytopeKind kind, int dim, std::vector<std::uint8_t> dir);

  PolytopeKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const PolytopeModel& model() const { return *model_; }
  const std::vector<std::uint8_t>& dir_bits() const { return dir_; }

  bool towards_larger(int edge_index) const { return dir_[edge_index] != 0; }
  VertexId head(int edge_index) const;
  VertexId tail(int edge_index) const;

  bool operator==(const Orientation& o) const {
    return kind_ == o.kind_ && dim_ == o.dim_ && dir_ == o.dir_;
  }

 private:
  PolytopeKind kind_;
  int dim_;
  std::shared_ptr<const PolytopeModel> model_;
  std::vector<std::uint8_t> dir_;
};

/// Standard orientation of the n-cube: every edge towards the endpoint with
/// an additional 1.
Orientation standard_cube_orientation(int n);

struct DirectedCycle {
  /// Vertices in directed order: v[i] -> v[i+1] and v.back() -> v.front().
  std::vector<VertexId> vertices;
};

/// Either a labeling (vertex id -> label in 1..N, every edge increasing) or
/// a directed cycle. Labels are the lexicographically smallest topological
/// order under the canonical vertex order, so output is reproducible.
using TopoResult = std::variant<std::vector<int>, DirectedCycle>;

TopoResult topological_order(const Orientation& o);

bool cycle_is_valid(const Orientation& o, const DirectedCycle& c);

/// Induced subdigraph of a face: vertices ascending, arcs as local indices.
struct FaceDigraph {
  std::vector<VertexId> vertices;
  std::vector<std::pair<int, int>> arcs;  // (tail, head) local indices
};

FaceDigraph face_subdigraph(const Orientation& o, const Face& f);

}  // namespace lporient
