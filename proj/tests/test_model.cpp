#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "lporient/model.hpp"
#include "oracles.hpp"

using namespace lporient;

TEST_CASE("cube edge counts match the closed form") {
  CHECK(build_cube_edges(1).size() == 1);
  CHECK(build_cube_edges(2).size() == 4);
  CHECK(build_cube_edges(5).size() == 80);
  for (int n = 1; n <= 8; ++n)
    CHECK(build_cube_edges(n).size() == std::size_t(n) << (n - 1));
}

TEST_CASE("cube edges are exactly the Hamming-distance-1 pairs") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<VertexId, VertexId>> expect;
    for (VertexId u = 0; u < (1 << n); ++u)
      for (VertexId v = u + 1; v < (1 << n); ++v)
        if (std::popcount(unsigned(u ^ v)) == 1) expect.insert({u, v});
    auto edges = build_cube_edges(n);
    CHECK(std::set(edges.begin(), edges.end()) == expect);
  }
}

TEST_CASE("crosspolytope edge counts match the closed form") {
  CHECK(build_cross_edges(1).size() == 0);
  CHECK(build_cross_edges(2).size() == 4);
  CHECK(build_cross_edges(3).size() == 12);
  for (int d = 1; d <= 8; ++d)
    CHECK(build_cross_edges(d).size() == std::size_t(2 * d * (d - 1)));
}

TEST_CASE("crosspolytope edges are all pairs except antipodal") {
  for (int d = 1; d <= 6; ++d) {
    std::set<std::pair<VertexId, VertexId>> expect;
    for (VertexId u = 0; u < 2 * d; ++u)
      for (VertexId v = u + 1; v < 2 * d; ++v)
        if (u / 2 != v / 2) expect.insert({u, v});
    auto edges = build_cross_edges(d);
    CHECK(std::set(edges.begin(), edges.end()) == expect);
  }
}

TEST_CASE("dimension caps are enforced") {
  CHECK_THROWS_AS(build_cube_edges(0), DimensionError);
  CHECK_THROWS_AS(build_cube_edges(17), DimensionError);
  CHECK_THROWS_AS(build_cube_edges(9, /*dim_cap=*/8), DimensionError);
  CHECK_THROWS_AS(build_cross_edges(13), DimensionError);
  CHECK_THROWS_AS(build_cross_edges(5, /*dim_cap=*/4), DimensionError);
}

TEST_CASE("face counts match the closed forms") {
  CHECK(enumerate_faces(PolytopeKind::Cube, 3, 2).size() == 6);
  CHECK(enumerate_faces(PolytopeKind::Crosspolytope, 3, 2).size() == 8);
  CHECK(enumerate_faces(PolytopeKind::Crosspolytope, 4, 1).size() == 24);

  for (int n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (int k = 0; k <= n; ++k)
      total += enumerate_faces(PolytopeKind::Cube, n, k).size();
    std::size_t pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    CHECK(total == pow3);  // sum_k C(n,k) 2^(n-k)
  }
  for (int d = 1; d <= 6; ++d) {
    std::size_t proper = 0;
    for (int k = 0; k < d; ++k)
      proper += enumerate_faces(PolytopeKind::Crosspolytope, d, k).size();
    std::size_t pow3 = 1;
    for (int i = 0; i < d; ++i) pow3 *= 3;
    CHECK(proper == pow3 - 1);
    CHECK(enumerate_faces(PolytopeKind::Crosspolytope, d, d).size() == 1);
  }
  CHECK_THROWS_AS(enumerate_faces(PolytopeKind::Cube, 3, 4), DimensionError);
  CHECK_THROWS_AS(enumerate_faces(PolytopeKind::Cube, 3, -1), DimensionError);
}

TEST_CASE("face vertex sets and naming") {
  CubeFace f{3, /*fixed=*/0b100, /*values=*/0};  // x3 = 0
  CHECK(f.dim() == 2);
  CHECK(f.pattern() == "**0");
  // coordinate 3 is the low vertex bit, so members are the even ids
  CHECK(f.vertex_ids() == std::vector<VertexId>{0, 2, 4, 6});

  CrossFace g{3, false, {0, 3}};  // {+1, -2}
  CHECK(g.dim() == 1);
  CHECK(g.name() == "{+1,-2}");
  CHECK(face_vertex_ids(whole_face(PolytopeKind::Crosspolytope, 3)).size() == 6);
}

TEST_CASE("face_subdigraph of the whole polytope is the identity") {
  Orientation o = standard_cube_orientation(3);
  FaceDigraph g = face_subdigraph(o, whole_face(PolytopeKind::Cube, 3));
  CHECK(g.vertices.size() == 8);
  CHECK(g.arcs.size() == 12);
  std::set<std::pair<VertexId, VertexId>> arcs;
  for (auto [a, b] : g.arcs) arcs.insert({g.vertices[a], g.vertices[b]});
  for (int e = 0; e < 12; ++e)
    CHECK(arcs.count({o.tail(e), o.head(e)}) == 1);
}

TEST_CASE("face_subdigraph on a 1-face is a single arc") {
  Orientation o = standard_cube_orientation(2);
  CubeFace edge{2, 0b10, 0};  // x2 = 0: vertices 00 and 10
  FaceDigraph g = face_subdigraph(o, edge);
  CHECK(g.vertices == std::vector<VertexId>{0, 2});
  REQUIRE(g.arcs.size() == 1);
  CHECK(g.vertices[g.arcs[0].first] == 0);
  CHECK(g.vertices[g.arcs[0].second] == 2);
}

TEST_CASE("face_subdigraph: 2-face x3=0 of the standard 3-cube") {
  Orientation o = standard_cube_orientation(3);
  FaceDigraph g = face_subdigraph(o, CubeFace{3, 0b100, 0});
  // diamond with source 000 (id 0) and sink 110 (id 6)
  CHECK(g.vertices == std::vector<VertexId>{0, 2, 4, 6});
  int in[4] = {0, 0, 0, 0}, out[4] = {0, 0, 0, 0};
  for (auto [a, b] : g.arcs) {
    ++out[a];
    ++in[b];
  }
  CHECK(g.arcs.size() == 4);
  CHECK((in[0] == 0 && out[0] == 2));  // 000 source
  CHECK((in[3] == 2 && out[3] == 0));  // 110 sink
}

TEST_CASE("face/polytope mismatch is rejected") {
  Orientation o = standard_cube_orientation(3);
  CHECK_THROWS_AS(face_subdigraph(o, Face(CrossFace{3, true, {}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(face_subdigraph(o, Face(CubeFace{4, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("topological order of the standard 2-cube") {
  Orientation o = standard_cube_orientation(2);
  auto r = topological_order(o);
  REQUIRE(std::holds_alternative<std::vector<int>>(r));
  auto labels = std::get<std::vector<int>>(r);
  CHECK(labels[0b00] == 1);
  CHECK(labels[0b01] == 2);  // min-id tie break
  CHECK(labels[0b10] == 3);
  CHECK(labels[0b11] == 4);
}

TEST_CASE("cyclically oriented square yields a 4-cycle certificate") {
  // 00->01->11->10->00; canonical edges (00,01),(00,10),(01,11),(10,11)
  Orientation o(PolytopeKind::Cube, 2, {1, 0, 1, 0});
  auto r = topological_order(o);
  REQUIRE(std::holds_alternative<DirectedCycle>(r));
  const auto& cyc = std::get<DirectedCycle>(r);
  CHECK(cyc.vertices.size() == 4);
  CHECK(cycle_is_valid(o, cyc));
}

TEST_CASE("topological order agrees with exhaustive cycle search") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 200; ++trial) {
    auto kind = trial % 2 ? PolytopeKind::Cube : PolytopeKind::Crosspolytope;
    int dim = 3;  // 8 or 6 vertices
    Orientation o = oracles::random_orientation(kind, dim, rng);
    auto r = topological_order(o);
    bool cyclic = oracles::has_cycle_bruteforce(o);
    if (std::holds_alternative<DirectedCycle>(r)) {
      CHECK(cyclic);
      CHECK(cycle_is_valid(o, std::get<DirectedCycle>(r)));
    } else {
      CHECK(!cyclic);
      const auto& labels = std::get<std::vector<int>>(r);
      std::vector<char> used(labels.size() + 1, 0);
      for (int l : labels) {
        CHECK(l >= 1);
        CHECK(l <= int(labels.size()));
        CHECK(!used[l]);
        used[l] = 1;
      }
      const auto& m = o.model();
      for (int e = 0; e < int(m.edges.size()); ++e)
        CHECK(labels[o.tail(e)] < labels[o.head(e)]);
    }
  }
}

TEST_CASE("topological order is deterministic") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Orientation o =
        oracles::random_acyclic_orientation(PolytopeKind::Crosspolytope, 4, rng);
    auto a = topological_order(o);
    auto b = topological_order(o);
    CHECK(std::get<std::vector<int>>(a) == std::get<std::vector<int>>(b));
  }
}

TEST_CASE("vertex names round through ids") {
  CHECK(vertex_name(PolytopeKind::Cube, 5, 0b01101) == "01101");
  CHECK(vertex_name(PolytopeKind::Crosspolytope, 3, 4) == "+3");
  CHECK(vertex_name(PolytopeKind::Crosspolytope, 3, 1) == "-1");
}
