#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lporient/pairseq.hpp"
#include "lporient/realize.hpp"

namespace lporient {

/// An ordering of the 2n facets of the n-cube; facet +i is {x_i = 1} and
/// facet -i is {x_i = 0}. Stored as signed pair indices.
struct FacetOrdering {
  int n = 0;
  std::vector<int> facets;  // values in {±1..±n}, a permutation

  bool operator==(const FacetOrdering&) const = default;
};

FacetOrdering parse_facet_ordering(std::string_view text);
std::string facet_ordering_str(const FacetOrdering& fo);

/// Label each facet by its position and collect the labels of +i and -i.
PairSequence ordering_to_sequence(const FacetOrdering& fo);

/// A facet ordering of the cube is a shelling iff its pair sequence is good.
GoodnessVerdict shelling_verdict(const FacetOrdering& fo);
bool is_shelling(const FacetOrdering& fo);

/// Independent oracle for n = 3, straight from the shelling definition: for
/// each j >= 2 the earlier facets must meet facet j in a nonempty contiguous
/// path of 1..3 edges of its boundary 4-cycle, or the whole cycle at j = 6.
bool is_shelling_direct_3cube(const FacetOrdering& fo);

class NotAShellingError : public std::runtime_error {
 public:
  explicit NotAShellingError(int k)
      : std::runtime_error("ordering is not a shelling, break k=" +
                           std::to_string(k)),
        break_k(k) {}
  int break_k;
};

/// Realization of the dual crosspolytope whose first-coordinate vertex
/// order matches the facet order: the line-shelling certificate.
Realization line_shelling_witness(const FacetOrdering& fo);

struct ShellingCensus {
  long long total = 0;
  long long shellings = 0;
};

/// Scan all (2n)! facet orderings.
ShellingCensus shelling_census(int n, int threads = 1);

}  // namespace lporient
