#pragma once

#include <string>
#include <vector>

#include "hg/regular.hpp"

namespace hg {

struct Verdict {
  std::string scenario;
  bool pass = false;
  bool partial = false;  // census tier not exhaustive
  std::string expected;
  std::string observed;
  std::string witness;  // non-empty on failure
  int64_t wall_ms = 0;
};

// Bundled Schur multiplier data. Labels: "A<n>" (n >= 5), "M11", "M23",
// "PSL<n>(<q>)", "PSU<n>(<q>)" with n >= 3 for PSU. Exceptional parameters
// carry fixed values; all other PSL/PSU go through the gcd formulas.
int schur_lookup(const std::string& label);
const std::vector<int>& schur_m_set();  // {1, 2, 3, 4, 6, 12}

// Resolves a small simple group to the label schur_lookup understands, by
// order and isomorphism against bundled constructors. UnknownLabel if the
// group is not in the resolver list.
std::string simple_group_label(const GroupPtr& g);

// e(G,G) = 1 (abelian) or 2 (non-abelian) and e(G,N) = 0 for every other N
// in the tier. Partial when the tier is not exhaustive.
Verdict verify_extreme_pattern(const GroupPtr& g, const CensusTier& tier,
                               SearchBudget* budget = nullptr, int jobs = 1);

// The order-336 computer check: for every group N in the tier, the raw
// count of regular subgroups of Hol(N) isomorphic to SL2(7) is 2 when N is
// perfect (and they are exactly lambda and rho) and 0 otherwise. One verdict
// per N; the bundled tier covers the three insolvable groups.
std::vector<Verdict> verify_336(const std::string& census_dir = "",
                                SearchBudget* budget = nullptr, int jobs = 1);

// Desk-scale instances of the CFSG-dependent lemmas:
//   <label>/fixed_points   every automorphism fixes a non-identity element
//   <label>/szep           no factorization A = B1 B2 with both centers
//                          non-trivial
//   <label>/prime_power    prime-power subgroup indices match the case list
std::vector<Verdict> cfsg_desk_checks(const GroupPtr& a,
                                      const std::string& label);

// Quasisimple preflight: perfect, G/Z(G) simple, |Z(G)| divides the Schur
// multiplier of G/Z(G), and every proper normal subgroup is central.
Verdict quasisimple_preflight(const GroupPtr& g);

}  // namespace hg
