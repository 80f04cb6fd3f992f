#include "lporient/pairseq.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_set>

#include "lporient/holt_klee.hpp"
#include "lporient/parallel.hpp"

namespace lporient {

PairSequence PairSequence::from_pairs(std::vector<std::pair<int, int>> pairs) {
  int d = static_cast<int>(pairs.size());
  if (d < 1) throw std::invalid_argument("pair sequence must be nonempty");
  std::vector<char> seen(2 * d + 1, 0);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > 2 * d || a == b)
      throw std::invalid_argument("labels must partition {1..2d}");
    if (seen[a] || seen[b])
      throw std::invalid_argument("duplicate label in pair sequence");
    seen[a] = seen[b] = 1;
  }
  std::sort(pairs.begin(), pairs.end());
  PairSequence s;
  s.pairs_ = std::move(pairs);
  return s;
}

PairSequence PairSequence::parse(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos)
      throw std::invalid_argument("unterminated pair");
    std::string_view body = text.substr(i + 1, close - i - 1);
    int a, b;
    auto comma = body.find(',');
    if (comma != std::string_view::npos) {
      auto num = [](std::string_view t) {
        std::size_t p = 0;
        while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p])))
          ++p;
        std::size_t q = t.size();
        while (q > p && std::isspace(static_cast<unsigned char>(t[q - 1])))
          --q;
        if (p == q) throw std::invalid_argument("empty label");
        int v = 0;
        for (; p < q; ++p) {
          if (!std::isdigit(static_cast<unsigned char>(t[p])))
            throw std::invalid_argument("labels must be decimal");
          v = v * 10 + (t[p] - '0');
        }
        return v;
      };
      a = num(body.substr(0, comma));
      b = num(body.substr(comma + 1));
    } else {
      if (body.size() != 2 || !std::isdigit((unsigned char)body[0]) ||
          !std::isdigit((unsigned char)body[1]))
        throw std::invalid_argument(
            "compact pair form needs exactly two digits");
      a = body[0] - '0';
      b = body[1] - '0';
    }
    pairs.emplace_back(a, b);
    i = close + 1;
    skip_ws();
  }
  return from_pairs(std::move(pairs));
}

std::string PairSequence::str() const {
  std::string s;
  for (auto [a, b] : pairs_)
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return s;
}

GoodnessVerdict is_good(const PairSequence& s) {
  int d = s.size();
  int prefix_max = 0;
  for (int k = 1; k < d; ++k) {
    prefix_max = std::max(prefix_max, s.pairs()[k - 1].second);
    // the first k pairs hold 2k distinct labels, so they comprise {1..2k}
    // exactly when their maximum is 2k
    if (prefix_max == 2 * k) return {false, k};
  }
  return {true, std::nullopt};
}

namespace {

void require_cross(const Orientation& o, const char* what) {
  if (o.kind() != PolytopeKind::Crosspolytope)
    throw std::invalid_argument(std::string(what) +
                                " requires a crosspolytope orientation");
}

PairSequence sequence_of_labels(const std::vector<int>& labels, int d) {
  std::vector<std::pair<int, int>> pairs(d);
  for (int i = 0; i < d; ++i)
    pairs[i] = {labels[2 * i], labels[2 * i + 1]};
  return PairSequence::from_pairs(std::move(pairs));
}

}  // namespace

PairSequence encode(const Orientation& o) {
  require_cross(o, "encode");
  auto topo = topological_order(o);
  if (auto* cyc = std::get_if<DirectedCycle>(&topo))
    throw CyclicOrientationError(std::move(*cyc));
  return sequence_of_labels(std::get<std::vector<int>>(topo), o.dim());
}

Orientation sequence_to_orientation(const PairSequence& s) {
  int d = s.size();
  auto model = model_for(PolytopeKind::Crosspolytope, d);
  std::vector<int> label(2 * d);
  for (int i = 0; i < d; ++i) {
    label[2 * i] = s.pairs()[i].first;  // '+' takes the smaller label
    label[2 * i + 1] = s.pairs()[i].second;
  }
  std::vector<std::uint8_t> dir(model->edges.size());
  for (std::size_t e = 0; e < model->edges.size(); ++e) {
    auto [u, v] = model->edges[e];
    dir[e] = label[u] < label[v] ? 1 : 0;
  }
  return Orientation(PolytopeKind::Crosspolytope, d, std::move(dir));
}

PairSequence eliminate(const PairSequence& s, int index) {
  int d = s.size();
  if (d < 2) throw std::invalid_argument("cannot eliminate from d = 1");
  if (index < 0 || index >= d) throw std::invalid_argument("pair index out of range");
  std::vector<int> remaining;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i) {
    if (i == index) continue;
    remaining.push_back(s.pairs()[i].first);
    remaining.push_back(s.pairs()[i].second);
  }
  std::sort(remaining.begin(), remaining.end());
  auto rank = [&](int label) {
    return static_cast<int>(std::lower_bound(remaining.begin(),
                                             remaining.end(), label) -
                            remaining.begin()) +
           1;
  };
  for (int i = 0; i < d; ++i) {
    if (i == index) continue;
    pairs.emplace_back(rank(s.pairs()[i].first), rank(s.pairs()[i].second));
  }
  return PairSequence::from_pairs(std::move(pairs));
}

BigInt count_good(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  std::vector<BigInt> a(d + 1);
  for (int j = 1; j <= d; ++j) {
    a[j] = double_factorial_odd(j);
    for (int k = 1; k <= j - 1; ++k) a[j] -= double_factorial_odd(k) * a[j - k];
  }
  return a[d];
}

LPVerdict is_lp_orientation(const Orientation& o) {
  require_cross(o, "is_lp_orientation");
  auto topo = topological_order(o);
  if (auto* cyc = std::get_if<DirectedCycle>(&topo))
    return {false, std::move(*cyc)};
  const auto& labels = std::get<std::vector<int>>(topo);
  int d = o.dim();

  // pair label ranges together with their polytope pair indices, sorted into
  // canonical sequence order
  std::vector<std::pair<std::pair<int, int>, int>> tagged(d);
  for (int i = 0; i < d; ++i) {
    int a = labels[2 * i], b = labels[2 * i + 1];
    tagged[i] = {{std::min(a, b), std::max(a, b)}, i};
  }
  std::sort(tagged.begin(), tagged.end());

  int prefix_max = 0;
  for (int k = 1; k < d; ++k) {
    prefix_max = std::max(prefix_max, tagged[k - 1].first.second);
    if (prefix_max == 2 * k) {
      InitialPairSet cert;
      cert.break_k = k;
      for (int i = 0; i < k; ++i) {
        cert.pair_indices.push_back(tagged[i].second);
        cert.prefix.push_back(tagged[i].first);
      }
      std::sort(cert.pair_indices.begin(), cert.pair_indices.end());
      return {false, std::move(cert)};
    }
  }
  return {true, std::nullopt};
}

bool lp_certificate_is_valid(const Orientation& o, const LPVerdict& v) {
  if (v.lp) return !v.certificate.has_value();
  if (!v.certificate) return false;
  if (const auto* cyc = std::get_if<DirectedCycle>(&*v.certificate))
    return cycle_is_valid(o, *cyc);

  const auto& cert = std::get<InitialPairSet>(*v.certificate);
  int d = o.dim();
  if (cert.break_k < 1 || cert.break_k >= d) return false;
  if (static_cast<int>(cert.pair_indices.size()) != cert.break_k) return false;
  std::vector<char> in_set(2 * d, 0);
  for (int p : cert.pair_indices) {
    if (p < 0 || p >= d) return false;
    in_set[2 * p] = in_set[2 * p + 1] = 1;
  }
  // every edge between the set and its complement must leave the set
  const auto& m = o.model();
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e) {
    auto [u, v2] = m.edges[e];
    if (in_set[u] == in_set[v2]) continue;
    if (in_set[o.head(e)]) return false;
  }
  return true;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Lexicographic permutation of {0..n-1} with the given rank.
std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
  std::vector<int> pool(n), out;
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = n; i >= 1; --i) {
    std::uint64_t f = factorial(i - 1);
    int idx = static_cast<int>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return out;
}

Orientation orientation_from_key(int d, std::uint64_t key, std::size_t edges) {
  std::vector<std::uint8_t> dir(edges);
  for (std::size_t e = 0; e < edges; ++e) dir[e] = (key >> e) & 1;
  return Orientation(PolytopeKind::Crosspolytope, d, std::move(dir));
}

}  // namespace

CensusResult count_lp_orientations_bruteforce(int d, int threads) {
  if (d < 1 || d > 5)
    throw DimensionError("exhaustive census supports 1 <= d <= 5");
  auto model = model_for(PolytopeKind::Crosspolytope, d);
  const auto& edges = model->edges;
  int V = 2 * d;
  std::uint64_t total = factorial(V);

  // Pass 1: all labelings -> distinct orientation keys.
  using KeySet = std::unordered_set<std::uint64_t>;
  auto locals = parallel_blocks<KeySet>(
      total, threads, [&](std::size_t begin, std::size_t end, int) {
        KeySet keys;
        std::vector<int> perm = unrank_permutation(V, begin);
        for (std::size_t i = begin; i < end; ++i) {
          std::uint64_t key = 0;
          for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (perm[u] < perm[v]) key |= std::uint64_t{1} << e;
          }
          keys.insert(key);
          std::next_permutation(perm.begin(), perm.end());
        }
        return keys;
      });
  KeySet merged;
  for (auto& s : locals) merged.merge(s);
  std::vector<std::uint64_t> keys(merged.begin(), merged.end());
  std::sort(keys.begin(), keys.end());

  // Pass 2: classify each distinct orientation.
  struct Tally {
    long long hk = 0, lp = 0;
    std::map<PairSequence, long long> fibers;
  };
  auto tallies = parallel_blocks<Tally>(
      keys.size(), threads, [&](std::size_t begin, std::size_t end, int) {
        Tally t;
        for (std::size_t i = begin; i < end; ++i) {
          Orientation o = orientation_from_key(d, keys[i], edges.size());
          if (is_holt_klee(o).passed) ++t.hk;
          auto lv = is_lp_orientation(o);
          if (lv.lp) ++t.lp;
          ++t.fibers[encode(o)];  // all census orientations are acyclic
        }
        return t;
      });

  CensusResult r;
  r.d = d;
  r.acyclic = static_cast<long long>(keys.size());
  std::map<PairSequence, long long> fibers;
  for (const auto& t : tallies) {
    r.holt_klee += t.hk;
    r.lp += t.lp;
    for (const auto& [seq, cnt] : t.fibers) fibers[seq] += cnt;
  }
  r.hk_minus_lp_fraction = r.holt_klee == 0
                               ? Rational(0)
                               : Rational(r.holt_klee - r.lp, r.holt_klee);
  r.fibers.assign(fibers.begin(), fibers.end());
  return r;
}

}  // namespace lporient
