#include "lporient/cube_family.hpp"

#include <bit>
#include <stdexcept>

namespace lporient {

namespace {

// Vertex bit for coordinate i (1-based) in an n-cube id.
inline std::uint32_t coord_bit(int n, int i) { return 1u << (n - i); }

}  // namespace

std::vector<std::pair<VertexId, VertexId>> free_edges(int n) {
  if (n < 2) throw DimensionError("free_edges requires n >= 2");
  (void)model_for(PolytopeKind::Cube, n);
  int r = n / 2;
  std::vector<std::pair<VertexId, VertexId>> out;
  // E_n edges join u and u | 1 (coordinate n is the low vertex bit); the
  // prefix is the other n-1 coordinates, whose binary value is u >> 1.
  for (std::uint32_t prefix = 0; prefix < (1u << (n - 1)); ++prefix) {
    if (std::popcount(prefix) != r) continue;
    VertexId u = static_cast<VertexId>(prefix << 1);
    out.emplace_back(u, u | 1);
  }
  return out;
}

BigInt family_size_log2(int n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  return binomial(static_cast<unsigned long>(n - 1),
                  static_cast<unsigned long>(n / 2));
}

Orientation build_family_orientation(const FamilyAssignment& a) {
  int n = a.n;
  auto model = model_for(PolytopeKind::Cube, n);
  BigInt expected = family_size_log2(n);
  if (BigInt(a.free_bits.size()) != expected)
    throw std::invalid_argument("assignment has " +
                                std::to_string(a.free_bits.size()) +
                                " bits, expected " + expected.str());

  std::vector<std::uint8_t> dir(model->edges.size(), 0);
  if (n == 1) {
    // one edge; bit 1 points toward coordinate value 1
    dir[0] = a.free_bits[0] ? 1 : 0;
    return Orientation(PolytopeKind::Cube, 1, std::move(dir));
  }

  int r = n / 2;
  std::size_t next_free = 0;
  for (std::size_t e = 0; e < model->edges.size(); ++e) {
    auto [u, v] = model->edges[e];
    std::uint32_t diff = static_cast<std::uint32_t>(u ^ v);
    if (diff != coord_bit(n, n)) {
      dir[e] = 1;  // E_i, i < n: toward the endpoint with 1 in place i
      continue;
    }
    int w = std::popcount(static_cast<std::uint32_t>(u) >> 1);
    if (w < r)
      dir[e] = 1;  // toward last coordinate 1
    else if (w > r)
      dir[e] = 0;  // toward last coordinate 0
    else
      dir[e] = a.free_bits[next_free++] ? 1 : 0;
  }
  // canonical edge order visits E_n edges by ascending u, i.e. by ascending
  // prefix value, matching the free_bits order
  return Orientation(PolytopeKind::Cube, n, std::move(dir));
}

}  // namespace lporient
