#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "lporient/holt_klee.hpp"
#include "lporient/pairseq.hpp"
#include "oracles.hpp"

using namespace lporient;

TEST_CASE("parsing accepts both forms and canonicalizes") {
  CHECK(PairSequence::parse("(14)(25)(36)").str() == "(1,4)(2,5)(3,6)");
  CHECK(PairSequence::parse("(2,5)(14)(36)").str() == "(1,4)(2,5)(3,6)");
  CHECK(PairSequence::parse("(5,2) (4,1)(3,6)").str() == "(1,4)(2,5)(3,6)");
  CHECK(PairSequence::parse("(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)").size() == 6);

  CHECK_THROWS_AS(PairSequence::parse("(12)(34"), std::invalid_argument);
  CHECK_THROWS_AS(PairSequence::parse("(12)(3x)"), std::invalid_argument);
  CHECK_THROWS_AS(PairSequence::parse("(12)(13)"), std::invalid_argument);
  CHECK_THROWS_AS(PairSequence::parse("(12)(35)"), std::invalid_argument);
  CHECK_THROWS_AS(PairSequence::parse("(11)"), std::invalid_argument);
  CHECK_THROWS_AS(PairSequence::parse(""), std::invalid_argument);
}

TEST_CASE("goodness basics") {
  auto bad1 = is_good(PairSequence::parse("(12)(34)"));
  CHECK(!bad1.good);
  CHECK(bad1.break_k == 1);

  auto bad2 = is_good(PairSequence::parse("(13)(24)(57)(68)"));
  CHECK(!bad2.good);
  CHECK(bad2.break_k == 2);

  CHECK(is_good(PairSequence::parse("(14)(25)(36)")).good);
  CHECK(is_good(PairSequence::parse("(12)")).good);  // d = 1, vacuous
}

TEST_CASE("goodness agrees with the literal set-union reading, d <= 6") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& s : oracles::all_matchings(d))
      CHECK(is_good(s).good == oracles::is_good_setunion(s));
}

TEST_CASE("octahedron encoding from the worked sequence") {
  PairSequence s = PairSequence::parse("(14)(25)(36)");
  Orientation o = sequence_to_orientation(s);
  CHECK(encode(o) == s);
  // the labeling puts pair labels {1,4},{2,5},{3,6}
  auto labels = std::get<std::vector<int>>(topological_order(o));
  CHECK(std::min(labels[0], labels[1]) == 1);
  CHECK(std::max(labels[0], labels[1]) == 4);
  CHECK(std::min(labels[2], labels[3]) == 2);
  CHECK(std::max(labels[2], labels[3]) == 5);
  CHECK(std::min(labels[4], labels[5]) == 3);
  CHECK(std::max(labels[4], labels[5]) == 6);
}

TEST_CASE("d=1 encodes to (12)") {
  Orientation o(PolytopeKind::Crosspolytope, 1, {});
  CHECK(encode(o).str() == "(1,2)");
}

TEST_CASE("encode round-trips sequence_to_orientation, d <= 5 exhaustively") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& s : oracles::all_matchings(d))
      CHECK(encode(sequence_to_orientation(s)) == s);
}

TEST_CASE("sequence (13)(24) gives source (1,+) and sink (2,-)") {
  Orientation o = sequence_to_orientation(PairSequence::parse("(13)(24)"));
  auto [src, snk] =
      face_source_sink(o, whole_face(PolytopeKind::Crosspolytope, 2));
  CHECK(src == std::vector<VertexId>{0});  // +1
  CHECK(snk == std::vector<VertexId>{3});  // -2
}

TEST_CASE("encode is invariant under pair relabeling") {
  std::mt19937 rng(41);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 25; ++trial) {
      Orientation o = oracles::random_acyclic_orientation(
          PolytopeKind::Crosspolytope, d, rng);
      // permute pair indices and swap signs arbitrarily
      std::vector<int> perm(d);
      for (int i = 0; i < d; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> vmap(2 * d);
      for (int i = 0; i < d; ++i) {
        bool flip = rng() & 1;
        vmap[2 * i] = 2 * perm[i] + flip;
        vmap[2 * i + 1] = 2 * perm[i] + !flip;
      }
      const auto& m = o.model();
      std::vector<std::uint8_t> dir(m.edges.size());
      for (int e = 0; e < int(m.edges.size()); ++e) {
        auto [u, v] = m.edges[e];
        int mu = vmap[u], mv = vmap[v];
        int e2 = m.edge_index(mu, mv);
        bool towards_mv = o.towards_larger(e);  // u -> v maps to mu -> mv
        dir[e2] = (mu < mv) == towards_mv ? 1 : 0;
      }
      Orientation relabeled(PolytopeKind::Crosspolytope, d, std::move(dir));
      CHECK(encode(relabeled) == encode(o));
    }
  }
}

TEST_CASE("encode does not depend on the topological order used") {
  std::mt19937 rng(20240918);
  for (int d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 100; ++trial) {
      Orientation o = oracles::random_acyclic_orientation(
          PolytopeKind::Crosspolytope, d, rng);
      PairSequence expected = encode(o);
      for (int rep = 0; rep < 5; ++rep) {
        auto labels = oracles::random_topological_labels(o, rng);
        std::vector<std::pair<int, int>> pairs(d);
        for (int i = 0; i < d; ++i)
          pairs[i] = {labels[2 * i], labels[2 * i + 1]};
        CHECK(PairSequence::from_pairs(pairs) == expected);
      }
    }
  }
}

TEST_CASE("encode on a cyclic orientation raises with the cycle") {
  // 3-cycle inside the octahedron: +1 -> +2 -> +3 -> +1, rest arbitrary
  auto model = model_for(PolytopeKind::Crosspolytope, 3);
  std::vector<std::uint8_t> dir(model->edges.size(), 1);
  auto set_arc = [&](VertexId a, VertexId b) {
    int e = model->edge_index(a, b);
    dir[e] = a < b ? 1 : 0;
  };
  set_arc(0, 2);
  set_arc(2, 4);
  set_arc(4, 0);
  Orientation o(PolytopeKind::Crosspolytope, 3, std::move(dir));
  CHECK_THROWS_AS(encode(o), CyclicOrientationError);
  try {
    encode(o);
  } catch (const CyclicOrientationError& e) {
    CHECK(cycle_is_valid(o, e.cycle));
  }
}

TEST_CASE("eliminate matches the worked example") {
  PairSequence s = PairSequence::parse("(14)(25)(36)");
  CHECK(eliminate(s, 1).str() == "(1,3)(2,4)");   // drop (2,5)
  CHECK(eliminate(PairSequence::parse("(13)(24)"), 0).str() == "(1,2)");
  CHECK_THROWS_AS(eliminate(PairSequence::parse("(12)"), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(eliminate(s, 3), std::invalid_argument);
}

TEST_CASE("eliminating the last pair of a good sequence stays good, d <= 6") {
  for (int d = 2; d <= 6; ++d)
    for (const auto& s : oracles::all_matchings(d))
      if (is_good(s).good) CHECK(is_good(eliminate(s, d - 1)).good);
}

TEST_CASE("count_good: recursion equals brute force and pinned values") {
  CHECK(count_good(1) == 1);
  CHECK(count_good(2) == 2);
  CHECK(count_good(3) == 10);
  CHECK(count_good(4) == 74);
  for (int d = 1; d <= 6; ++d) {
    long long brute = 0;
    for (const auto& s : oracles::all_matchings(d)) brute += is_good(s).good;
    CHECK(count_good(d) == brute);
  }
}

TEST_CASE("count_good: convolution works written either way") {
  // a_d = M(d) - sum M(k) a_{d-k} = M(d) - sum a_k M(d-k)
  for (int d = 1; d <= 12; ++d) {
    BigInt other = double_factorial_odd(d);
    for (int k = 1; k <= d - 1; ++k)
      other -= count_good(k) * double_factorial_odd(d - k);
    CHECK(count_good(d) == other);
  }
}

TEST_CASE("is_lp_orientation basics") {
  auto yes = is_lp_orientation(
      sequence_to_orientation(PairSequence::parse("(13)(24)")));
  CHECK(yes.lp);

  Orientation bad = sequence_to_orientation(PairSequence::parse("(12)(34)"));
  auto no = is_lp_orientation(bad);
  CHECK(!no.lp);
  REQUIRE(no.certificate.has_value());
  const auto& cert = std::get<InitialPairSet>(*no.certificate);
  CHECK(cert.break_k == 1);
  CHECK(cert.pair_indices == std::vector<int>{0});
  CHECK(lp_certificate_is_valid(bad, no));

  Orientation counterexample =
      sequence_to_orientation(PairSequence::parse("(13)(24)(57)(68)"));
  auto v = is_lp_orientation(counterexample);
  CHECK(!v.lp);
  CHECK(is_holt_klee(counterexample).passed);
  CHECK(lp_certificate_is_valid(counterexample, v));
}

TEST_CASE("cyclic input yields lp = false with a cycle certificate") {
  auto model = model_for(PolytopeKind::Crosspolytope, 3);
  std::vector<std::uint8_t> dir(model->edges.size(), 1);
  auto set_arc = [&](VertexId a, VertexId b) {
    dir[model->edge_index(a, b)] = a < b ? 1 : 0;
  };
  set_arc(0, 2);
  set_arc(2, 4);
  set_arc(4, 0);
  Orientation o(PolytopeKind::Crosspolytope, 3, std::move(dir));
  auto v = is_lp_orientation(o);
  CHECK(!v.lp);
  CHECK(std::holds_alternative<DirectedCycle>(*v.certificate));
  CHECK(lp_certificate_is_valid(o, v));
}

namespace {

// Every distinct acyclic orientation, generated from all vertex labelings.
std::vector<Orientation> all_acyclic_orientations(int d) {
  auto model = model_for(PolytopeKind::Crosspolytope, d);
  std::vector<int> perm(2 * d);
  for (int i = 0; i < 2 * d; ++i) perm[i] = i;
  std::set<std::vector<std::uint8_t>> seen;
  do {
    std::vector<std::uint8_t> dir(model->edges.size());
    for (std::size_t e = 0; e < model->edges.size(); ++e) {
      auto [u, v] = model->edges[e];
      dir[e] = perm[u] < perm[v] ? 1 : 0;
    }
    seen.insert(std::move(dir));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Orientation> out;
  for (const auto& dir : seen)
    out.emplace_back(PolytopeKind::Crosspolytope, d, dir);
  return out;
}

}  // namespace

TEST_CASE("sequence and initial-set characterizations agree, d <= 4") {
  for (int d = 1; d <= 4; ++d) {
    for (const Orientation& o : all_acyclic_orientations(d)) {
      bool via_sequence = is_lp_orientation(o).lp;
      bool via_subsets = !oracles::has_initial_pair_subset(o);
      CHECK(via_sequence == via_subsets);
      if (via_sequence) CHECK(is_holt_klee(o).passed);  // LP implies HK
    }
  }
}

TEST_CASE("census: d = 1 and d = 2 pinned values and fibers") {
  auto c1 = count_lp_orientations_bruteforce(1);
  CHECK(c1.acyclic == 1);
  CHECK(c1.holt_klee == 1);
  CHECK(c1.lp == 1);

  auto c2 = count_lp_orientations_bruteforce(2);
  CHECK(c2.acyclic == 14);
  CHECK(c2.holt_klee == 12);
  CHECK(c2.lp == 12);
  CHECK(c2.hk_minus_lp_fraction == 0);

  std::map<std::string, long long> fibers;
  for (const auto& [seq, cnt] : c2.fibers) fibers[seq.str()] = cnt;
  CHECK(fibers.size() == 3);
  CHECK(fibers["(1,3)(2,4)"] == 8);
  CHECK(fibers["(1,4)(2,3)"] == 4);
  CHECK(fibers["(1,2)(3,4)"] == 2);
}

TEST_CASE("census: d = 3 has HK = LP") {
  auto c3 = count_lp_orientations_bruteforce(3);
  CHECK(c3.holt_klee == c3.lp);
  CHECK(c3.hk_minus_lp_fraction == 0);
  // fiber masses add up to the acyclic total
  long long sum = 0;
  for (const auto& [seq, cnt] : c3.fibers) sum += cnt;
  CHECK(sum == c3.acyclic);
  CHECK(c3.fibers.size() == 15);  // every matching of {1..6} is realized
}

TEST_CASE("census: d = 4 separates LP from HK") {
  auto c4 = count_lp_orientations_bruteforce(4, /*threads=*/4);
  CHECK(c4.lp < c4.holt_klee);
  CHECK(c4.hk_minus_lp_fraction > 0);
  // the counterexample sequence has a nonempty fiber
  bool found = false;
  for (const auto& [seq, cnt] : c4.fibers)
    if (seq.str() == "(1,3)(2,4)(5,7)(6,8)") found = cnt > 0;
  CHECK(found);
}

TEST_CASE("census is deterministic across thread counts") {
  auto a = count_lp_orientations_bruteforce(3, 1);
  auto b = count_lp_orientations_bruteforce(3, 4);
  CHECK(a == b);
}

TEST_CASE("census rejects d > 5") {
  CHECK_THROWS_AS(count_lp_orientations_bruteforce(6), DimensionError);
}
