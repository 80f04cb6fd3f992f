#include "lporient/realize.hpp"

#include <algorithm>

namespace lporient {

namespace {

// Sign of det(M) by exact fraction-free elimination; M is consumed.
int sign_det(std::vector<std::vector<Rational>>& m) {
  int n = static_cast<int>(m.size());
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    if (m[col][col] < 0) sign = -sign;
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return sign;
}

// Orientation of query q against the hyperplane through base[0..d-1].
int side_of_hyperplane(const std::vector<const RationalPoint*>& base,
                       const RationalPoint& q) {
  int d = static_cast<int>(base.size());
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int r = 1; r < d; ++r)
    for (int c = 0; c < d; ++c)
      m[r - 1][c] = base[r]->coords[c] - base[0]->coords[c];
  for (int c = 0; c < d; ++c) m[d - 1][c] = q.coords[c] - base[0]->coords[c];
  return sign_det(m);
}

}  // namespace

FacetTable verify_crosspolytope(
    const std::vector<RationalPoint>& points,
    const std::vector<std::pair<int, int>>& pairing) {
  FacetTable t;
  int d = static_cast<int>(pairing.size());
  if (d < 1 || points.size() != static_cast<std::size_t>(2 * d)) {
    t.reason = "need 2d points and d pairs";
    return t;
  }
  std::vector<char> seen(points.size(), 0);
  for (auto [a, b] : pairing) {
    if (a < 0 || b < 0 || a >= 2 * d || b >= 2 * d || seen[a] || seen[b]) {
      t.reason = "pairing is not a partition of the points";
      return t;
    }
    seen[a] = seen[b] = 1;
  }
  for (const auto& p : points)
    if (static_cast<int>(p.coords.size()) != d) {
      t.reason = "points must have d coordinates";
      return t;
    }

  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<const RationalPoint*> chosen(d);
    std::vector<const RationalPoint*> rest(d);
    for (int i = 0; i < d; ++i) {
      bool second = (mask >> i) & 1;
      chosen[i] = &points[second ? pairing[i].second : pairing[i].first];
      rest[i] = &points[second ? pairing[i].first : pairing[i].second];
    }
    int common = 0;
    for (int i = 0; i < d; ++i) {
      int s = side_of_hyperplane(chosen, *rest[i]);
      if (s == 0) {
        t.offending_mask = mask;
        t.reason = "transversal degenerate or point on its hyperplane";
        return t;
      }
      if (common == 0)
        common = s;
      else if (common != s) {
        t.offending_mask = mask;
        t.reason = "points on both sides of a transversal hyperplane";
        return t;
      }
    }
    t.entries.push_back({mask, common});
  }
  t.valid = true;
  return t;
}

Realization extend_realization(const Realization& base, const RationalPoint& y,
                               const RationalPoint& z) {
  int d = base.d + 1;
  if (static_cast<int>(y.coords.size()) != d ||
      static_cast<int>(z.coords.size()) != d)
    throw GeometryError("new points must have one more coordinate than base");
  for (const auto& p : base.points)
    if (static_cast<int>(p.coords.size()) != base.d)
      throw GeometryError("base realization is malformed");

  const Rational& yd = y.coords[d - 1];
  const Rational& zd = z.coords[d - 1];
  if (yd == 0 || zd == 0)
    throw GeometryError("new points must lie off the hyperplane x_d = 0");
  if ((yd > 0) == (zd > 0))
    throw GeometryError("new points must lie on opposite sides of x_d = 0");

  FacetTable ft = verify_crosspolytope(base);
  if (!ft.valid)
    throw GeometryError("base is not a crosspolytope realization: " + ft.reason);

  // Intersection of segment yz with x_d = 0, as a point of the base space.
  Rational t = yd / (yd - zd);
  RationalPoint w;
  w.coords.resize(base.d);
  for (int c = 0; c < base.d; ++c)
    w.coords[c] = y.coords[c] + t * (z.coords[c] - y.coords[c]);

  // w must be strictly inside every facet of the base crosspolytope.
  for (const auto& entry : ft.entries) {
    std::vector<const RationalPoint*> chosen(base.d);
    for (int i = 0; i < base.d; ++i) {
      bool second = (entry.mask >> i) & 1;
      chosen[i] = &base.points[second ? base.pairing[i].second
                                      : base.pairing[i].first];
    }
    if (side_of_hyperplane(chosen, w) != entry.side)
      throw GeometryError(
          "segment between the new points misses the base's relative interior");
  }

  Realization out;
  out.d = d;
  out.points.reserve(2 * d);
  for (const auto& p : base.points) {
    RationalPoint q = p;
    q.coords.push_back(0);
    out.points.push_back(std::move(q));
  }
  out.points.push_back(y);
  out.points.push_back(z);
  out.pairing = base.pairing;
  out.pairing.emplace_back(2 * d - 2, 2 * d - 1);
  return out;
}

Realization realize(const PairSequence& s) {
  auto verdict = is_good(s);
  if (!verdict.good) throw BadSequenceError(*verdict.break_k);

  int d = s.size();
  if (d == 1) {
    Realization r;
    r.d = 1;
    r.points = {RationalPoint{{Rational(1)}}, RationalPoint{{Rational(2)}}};
    r.pairing = {{0, 1}};
    return r;
  }

  auto [l, m] = s.pairs().back();
  Realization base = realize(eliminate(s, d - 1));

  // Final positions 1..2d; the base values occupy the positions other than
  // l and m in ascending order.
  std::vector<Rational> values;
  for (const auto& p : base.points) values.push_back(p.coords[0]);
  std::sort(values.begin(), values.end());
  std::vector<Rational> value_at(2 * d + 1);
  {
    std::size_t j = 0;
    for (int pos = 1; pos <= 2 * d; ++pos) {
      if (pos == l || pos == m) continue;
      value_at[pos] = values[j++];
    }
  }
  // A good sequence's last pair avoids both the lowest two and the highest
  // two slots, so every neighbour consulted below is occupied.
  Rational l1, m1;
  if (m == l + 1) {
    const Rational& lo = value_at[l - 1];
    const Rational& hi = value_at[l + 2];
    l1 = lo + (hi - lo) / 3;
    m1 = lo + (hi - lo) * 2 / 3;
  } else {
    l1 = (value_at[l - 1] + value_at[l + 1]) / 2;
    if (m == 2 * d)
      m1 = values.back() + 1;
    else
      m1 = (value_at[m - 1] + value_at[m + 1]) / 2;
  }

  // r_1 strictly between l_1 and m_1 and strictly inside the base's first
  // coordinate range; the midpoint of the intersection interval.
  const Rational& vmin = values.front();
  const Rational& vmax = values.back();
  Rational lo_r = std::max(l1, vmin);
  Rational hi_r = std::min(m1, vmax);
  Rational r1 = (lo_r + hi_r) / 2;

  // An interior point at first coordinate r1: slide the vertex centroid
  // along the segment toward the extreme-first-coordinate vertex.
  int nb = 2 * (d - 1);
  RationalPoint centroid;
  centroid.coords.assign(base.d, Rational(0));
  for (const auto& p : base.points)
    for (int c = 0; c < base.d; ++c) centroid.coords[c] += p.coords[c];
  for (int c = 0; c < base.d; ++c) centroid.coords[c] /= nb;

  RationalPoint r = centroid;
  if (r1 != centroid.coords[0]) {
    const RationalPoint* target = nullptr;
    for (const auto& p : base.points) {
      if (r1 < centroid.coords[0] && p.coords[0] == vmin) target = &p;
      if (r1 > centroid.coords[0] && p.coords[0] == vmax) target = &p;
    }
    Rational step = (r1 - centroid.coords[0]) / (target->coords[0] - centroid.coords[0]);
    for (int c = 0; c < base.d; ++c)
      r.coords[c] = centroid.coords[c] + step * (target->coords[c] - centroid.coords[c]);
  }

  // Place the new pair along e_1 + e_d through r; the smaller label l goes
  // to the '+' vertex.
  RationalPoint y, z;
  y.coords = r.coords;
  y.coords.push_back(0);
  z = y;
  y.coords[0] = l1;
  y.coords[d - 1] = l1 - r1;
  z.coords[0] = m1;
  z.coords[d - 1] = m1 - r1;
  return extend_realization(base, y, z);
}

PairSequence induced_sequence(const Realization& rz) {
  std::vector<std::pair<Rational, int>> order;
  for (int i = 0; i < 2 * rz.d; ++i)
    order.emplace_back(rz.points[i].coords[0], i);
  std::sort(order.begin(), order.end());
  for (int i = 1; i < static_cast<int>(order.size()); ++i)
    if (order[i].first == order[i - 1].first)
      throw GeometryError("tied first coordinates have no induced order");
  std::vector<int> label(2 * rz.d);
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    label[order[i].second] = i + 1;
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : rz.pairing) pairs.emplace_back(label[a], label[b]);
  return PairSequence::from_pairs(std::move(pairs));
}

std::size_t max_denominator_bits(const Realization& rz) {
  std::size_t bits = 0;
  for (const auto& p : rz.points)
    for (const auto& q : p.coords) {
      BigInt den = denominator(q);
      bits = std::max(bits, mpz_sizeinbase(den.backend().data(), 2));
    }
  return bits;
}

}  // namespace lporient
