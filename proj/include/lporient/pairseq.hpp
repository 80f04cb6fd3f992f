#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lporient/model.hpp"
#include "lporient/numeric.hpp"

namespace lporient {

class CyclicOrientationError : public std::runtime_error {
 public:
  explicit CyclicOrientationError(DirectedCycle c)
      : std::runtime_error("orientation has a directed cycle"),
        cycle(std::move(c)) {}
  DirectedCycle cycle;
};

/// A partition of {1..2d} into d pairs, stored canonically: each pair
/// smaller-first, pairs in ascending order of smaller element.
class PairSequence {
 public:
  static PairSequence from_pairs(std::vector<std::pair<int, int>> pairs);
  /// Accepts "(1,4)(2,5)(3,6)" and, when all labels are single digits, the
  /// compact form "(14)(25)(36)". Whitespace between groups is ignored.
  static PairSequence parse(std::string_view text);

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::string str() const;

  auto operator<=>(const PairSequence&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

struct GoodnessVerdict {
  bool good = false;
  std::optional<int> break_k;  // least k with first k pairs = {1..2k}
};

/// Good <=> no prefix of k < d pairs comprises exactly {1..2k}; equivalently
/// the running maximum over the first k pairs exceeds 2k.
GoodnessVerdict is_good(const PairSequence& s);

/// Pair sequence of an acyclic crosspolytope orientation: label vertices by
/// a topological order and collect each antipodal pair's two labels. The
/// result does not depend on which topological order is used.
PairSequence encode(const Orientation& o);

/// Canonical orientation with a given pair sequence: polytope pair P_i takes
/// sequence pair i, '+' getting the smaller label; edges point to the larger
/// label. Left inverse of encode on its image: encode(of(s)) == s.
Orientation sequence_to_orientation(const PairSequence& s);

/// Remove the pair at `index` (0-based, canonical order) and renumber the
/// remaining labels order-preservingly onto {1..2d-2}.
PairSequence eliminate(const PairSequence& s, int index);

/// The number a_d of good pair sequences of length d, by the recursion
/// a_d = M(d) - sum_{k=1}^{d-1} M(k) a_{d-k} with M(j) = (2j-1)!!.
BigInt count_good(int d);

struct InitialPairSet {
  int break_k;
  std::vector<int> pair_indices;             // 0-based polytope pairs
  std::vector<std::pair<int, int>> prefix;   // the first break_k label pairs
};

struct LPVerdict {
  bool lp = false;
  std::optional<std::variant<DirectedCycle, InitialPairSet>> certificate;
};

/// An acyclic crosspolytope orientation is an LP-orientation iff its pair
/// sequence is good; cyclic input yields lp = false with a cycle certificate.
LPVerdict is_lp_orientation(const Orientation& o);

bool lp_certificate_is_valid(const Orientation& o, const LPVerdict& v);

struct CensusResult {
  int d = 0;
  long long acyclic = 0;
  long long holt_klee = 0;
  long long lp = 0;
  Rational hk_minus_lp_fraction;  // |HK \ LP| / |HK|
  /// Orientations per pair sequence (the fibers of encode), canonical order.
  std::vector<std::pair<PairSequence, long long>> fibers;

  bool operator==(const CensusResult&) const = default;
};

/// Exhaustive census: enumerate all (2d)! vertex labelings, map each to its
/// orientation, deduplicate structurally, classify every distinct
/// orientation. Requires d <= 5.
CensusResult count_lp_orientations_bruteforce(int d, int threads = 1);

}  // namespace lporient
