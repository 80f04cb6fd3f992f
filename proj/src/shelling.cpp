#include "lporient/shelling.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "lporient/parallel.hpp"

namespace lporient {

namespace {

void validate_ordering(const FacetOrdering& fo) {
  int n = fo.n;
  if (n < 1 || fo.facets.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("facet ordering must list all 2n facets");
  std::vector<char> seen(2 * n, 0);
  for (int f : fo.facets) {
    int i = std::abs(f);
    if (i < 1 || i > n || f == 0)
      throw std::invalid_argument("facet name out of range");
    int slot = 2 * (i - 1) + (f < 0 ? 1 : 0);
    if (seen[slot]) throw std::invalid_argument("facet listed twice");
    seen[slot] = 1;
  }
}

}  // namespace

FacetOrdering parse_facet_ordering(std::string_view text) {
  FacetOrdering fo;
  std::vector<int> items;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
      ++i;
    if (i >= text.size()) break;
    int sign;
    if (text[i] == '+')
      sign = 1;
    else if (text[i] == '-')
      sign = -1;
    else
      throw std::invalid_argument("facet names start with '+' or '-'");
    ++i;
    int v = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
      any = true;
    }
    if (!any) throw std::invalid_argument("facet name needs an index");
    items.push_back(sign * v);
  }
  if (items.empty() || items.size() % 2 != 0)
    throw std::invalid_argument("expected 2n facet names");
  fo.n = static_cast<int>(items.size()) / 2;
  fo.facets = std::move(items);
  validate_ordering(fo);
  return fo;
}

std::string facet_ordering_str(const FacetOrdering& fo) {
  std::string s;
  for (std::size_t i = 0; i < fo.facets.size(); ++i) {
    if (i) s += ",";
    s += (fo.facets[i] > 0 ? "+" : "-") + std::to_string(std::abs(fo.facets[i]));
  }
  return s;
}

PairSequence ordering_to_sequence(const FacetOrdering& fo) {
  validate_ordering(fo);
  std::vector<std::pair<int, int>> pairs(fo.n, {0, 0});
  for (int pos = 0; pos < 2 * fo.n; ++pos) {
    int f = fo.facets[pos];
    auto& p = pairs[std::abs(f) - 1];
    (f > 0 ? p.first : p.second) = pos + 1;
  }
  return PairSequence::from_pairs(std::move(pairs));
}

GoodnessVerdict shelling_verdict(const FacetOrdering& fo) {
  return is_good(ordering_to_sequence(fo));
}

bool is_shelling(const FacetOrdering& fo) { return shelling_verdict(fo).good; }

bool is_shelling_direct_3cube(const FacetOrdering& fo) {
  validate_ordering(fo);
  if (fo.n != 3)
    throw DimensionError("the direct shelling oracle is implemented for n = 3");

  // position of each facet in the ordering
  std::array<int, 7> pos_plus{}, pos_minus{};
  for (int p = 0; p < 6; ++p) {
    int f = fo.facets[p];
    (f > 0 ? pos_plus : pos_minus)[std::abs(f)] = p;
  }
  auto position = [&](int coord, int val) {
    return val ? pos_plus[coord] : pos_minus[coord];
  };

  for (int j = 1; j < 6; ++j) {
    int cj = std::abs(fo.facets[j]);
    // the two free coordinates of the square F_j
    int free[2], fi = 0;
    for (int c = 1; c <= 3; ++c)
      if (c != cj) free[fi++] = c;
    // boundary 4-cycle of F_j: an edge fixes one free coordinate; walk the
    // cycle (a=0),(b varies),(a=1),(b varies) -> edges in cyclic order fix
    // a=0, b=1, a=1, b=0 respectively
    struct EdgeFix {
      int coord, val;
    };
    std::array<EdgeFix, 4> cyc = {{{free[0], 0}, {free[1], 1}, {free[0], 1}, {free[1], 0}}};
    std::array<bool, 4> marked{};
    for (int e = 0; e < 4; ++e) {
      // the edge lies in F_j and in the facet fixing cyc[e]
      marked[e] = position(cyc[e].coord, cyc[e].val) < j;
    }
    int cnt = marked[0] + marked[1] + marked[2] + marked[3];
    if (cnt == 0) return false;
    if (cnt == 4) {
      if (j != 5) return false;  // whole cycle only as the last step
      continue;
    }
    int transitions = 0;
    for (int e = 0; e < 4; ++e) transitions += marked[e] != marked[(e + 1) % 4];
    if (transitions != 2) return false;  // not a single contiguous arc
  }
  return true;
}

Realization line_shelling_witness(const FacetOrdering& fo) {
  auto v = shelling_verdict(fo);
  if (!v.good) throw NotAShellingError(*v.break_k);
  return realize(ordering_to_sequence(fo));
}

ShellingCensus shelling_census(int n, int threads) {
  if (n < 1 || n > 5)
    throw DimensionError("shelling census supports 1 <= n <= 5");
  // enumerate permutations of the 2n facet names; ranks are processed in
  // contiguous blocks so the tally is order-independent
  std::vector<int> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back(i);
    names.push_back(-i);
  }
  std::sort(names.begin(), names.end());
  std::uint64_t total = 1;
  for (int i = 2; i <= 2 * n; ++i) total *= i;

  auto counts = parallel_blocks<long long>(
      total, threads, [&](std::size_t begin, std::size_t end, int) {
        // unrank the first permutation of the block
        std::vector<int> pool = names, perm;
        std::uint64_t rank = begin;
        std::vector<std::uint64_t> fact(2 * n + 1, 1);
        for (int i = 1; i <= 2 * n; ++i) fact[i] = fact[i - 1] * i;
        for (int i = 2 * n; i >= 1; --i) {
          std::uint64_t f = fact[i - 1];
          int idx = static_cast<int>(rank / f);
          rank %= f;
          perm.push_back(pool[idx]);
          pool.erase(pool.begin() + idx);
        }
        long long hits = 0;
        std::array<std::pair<int, int>, 5> pairs;
        for (std::size_t i = begin; i < end; ++i) {
          // goodness of the induced pair sequence, without allocating
          for (int p = 0; p < 2 * n; ++p) {
            int f = perm[p];
            auto& pr = pairs[std::abs(f) - 1];
            (f > 0 ? pr.first : pr.second) = p + 1;
          }
          for (int p = 0; p < n; ++p)
            if (pairs[p].first > pairs[p].second)
              std::swap(pairs[p].first, pairs[p].second);
          std::sort(pairs.begin(), pairs.begin() + n);
          bool good = true;
          int prefix_max = 0;
          for (int k = 1; k < n && good; ++k) {
            prefix_max = std::max(prefix_max, pairs[k - 1].second);
            if (prefix_max == 2 * k) good = false;
          }
          if (good) ++hits;
          std::next_permutation(perm.begin(), perm.end());
        }
        return hits;
      });
  ShellingCensus c;
  c.total = static_cast<long long>(total);
  for (long long x : counts) c.shellings += x;
  return c;
}

}  // namespace lporient
