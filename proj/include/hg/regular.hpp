#pragma once

#include <map>
#include <string>
#include <vector>

#include "hg/catalog.hpp"
#include "hg/crossed.hpp"

namespace hg {

struct RegularSubgroup {
  std::vector<HolElement> elems;  // sorted by key
  std::vector<uint32_t> keys;     // canonical form
  std::string iso_label;
};

struct CensusReport {
  std::string g_label;
  std::string n_label;
  uint64_t raw_count = 0;  // deduplicated regular subgroups isomorphic to G
  uint64_t hom_count = 0;  // bijective-cocycle homomorphisms (labeled count)
  uint64_t aut_g = 0;
  uint64_t aut_n = 0;
  uint64_t e_value = 0;  // aut_g * raw_count / aut_n, exact
  uint64_t nodes = 0;
  int64_t wall_ms = 0;
};

struct RegularEnumResult {
  std::vector<RegularSubgroup> subgroups;
  uint64_t hom_count = 0;
  uint64_t nodes = 0;
};

// All regular subgroups of Hol(N) isomorphic to G, deduplicated on canonical
// forms. hom_count is the number of bijective-cocycle homomorphisms
// G -> Hol(N), counted through conjugacy orbits of the first generator
// image; it always equals |Aut(G)| * |subgroups|.
RegularEnumResult regular_subgroups_iso(const GroupPtr& g, const GroupPtr& n,
                                        SearchBudget* budget = nullptr,
                                        int jobs = 1);
RegularEnumResult regular_subgroups_iso(const GroupPtr& g, const HolPtr& hol,
                                        SearchBudget* budget = nullptr,
                                        int jobs = 1);

// Byott's count e(G,N) = |Aut(G)| / |Aut(N)| * raw_count, in exact integer
// arithmetic. Throws NonIntegral when the division is not exact (which
// signals an enumeration bug).
CensusReport count_e(const GroupPtr& g, const GroupPtr& n,
                     SearchBudget* budget = nullptr, int jobs = 1);

struct Classification {
  std::map<std::string, uint64_t> counts;  // iso label -> subgroup count
  bool partial = false;   // census tier not exhaustive
  bool unknown = false;   // some type missing from the census
};

// Counts all regular subgroups of Hol(N) by isomorphism type, resolved
// against the given census tier. Types outside the tier get synthetic
// labels. Feasible for small N only.
Classification classify_regulars(const GroupPtr& n, const CensusTier& tier,
                                 SearchBudget* budget = nullptr);

// Independent Greither-Pareigis oracle: the number of regular subgroups of
// Perm(G) isomorphic to N and normalized by lambda(G), enumerated directly
// in the symmetric group on G's elements. |G| <= 8.
uint64_t gp_direct_count(const GroupPtr& g, const GroupPtr& n,
                         SearchBudget* budget = nullptr);

}  // namespace hg
