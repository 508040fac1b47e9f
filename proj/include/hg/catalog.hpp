#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hg/group.hpp"

namespace hg {

// Constructors. Each returns a validated table with the identity at index 0.
GroupPtr cyclic(int n);
GroupPtr abelian(const std::vector<int>& invariants);
GroupPtr dihedral(int n);  // symmetries of the n-gon, order 2n
GroupPtr sym(int degree);  // degree <= 7
GroupPtr alt(int degree);
GroupPtr sl2(int q);   // q a prime power <= 11
GroupPtr psl2(int q);
GroupPtr pgl2(int q);

// A homomorphism from `src` into Aut(`tgt`), given as one automorphism image
// table per element of src. Verified on construction (BadAction otherwise).
struct GroupAction {
  GroupPtr src;
  GroupPtr tgt;
  std::vector<std::vector<Elt>> auto_of;  // index: src element

  static GroupAction verified(GroupPtr src, GroupPtr tgt,
                              std::vector<std::vector<Elt>> auto_of);
  static GroupAction trivial(GroupPtr src, GroupPtr tgt);
  // Curated named actions used by the GroupSpec grammar:
  //   "invert"    src acts through its sign (element order parity vs a
  //               subgroup of index 2) by inversion; tgt must be abelian.
  //   "frobenius" src = cyclic(k) acts on tgt = cyclic(n) by multiplication
  //               by the smallest primitive k-th root of unity mod n.
  static GroupAction named(const std::string& name, GroupPtr src,
                           GroupPtr tgt);
};

// Direct product when no action is given, semidirect tgt x| src otherwise
// (multiplication (x1,y1)(x2,y2) = (x1 . act(y1)(x2), y1 y2)).
GroupPtr product(const GroupPtr& a, const GroupPtr& b);
GroupPtr product(const GroupPtr& a, const GroupPtr& b,
                 const GroupAction& action);

// GroupSpec grammar:
//   cyclic(n) | abelian(d1,...,dk) | dihedral(n) | sym(n) | alt(n) |
//   SL2(q) | PSL2(q) | PGL2(q) | direct(spec,spec) |
//   semidirect(spec,spec,action) | file(path)
GroupPtr build_group(const std::string& spec);

// gtab / pgen file formats (see README). Round trip:
// parse_group_file(serialize(g)) == g entry-wise.
GroupPtr parse_group_file(std::istream& in, const std::string& name);
GroupPtr parse_group_file_text(const std::string& text,
                               const std::string& name);
std::string serialize(const GroupPtr& g);

struct CensusEntry {
  int order = 0;
  std::string label;
  GroupPtr group;
  bool solvable = false;
  bool perfect = false;
  bool abelian = false;
  std::string provenance;  // "constructor" or the source file name
};

struct CensusTier {
  int order = 0;
  std::vector<CensusEntry> entries;
  // The entries are complete up to isomorphism.
  bool exhaustive = false;
  // The insolvable entries are complete up to isomorphism.
  bool insolvable_exhaustive = false;
};

// Bundled tiers: every order <= 8 (complete), 15 (complete), 60, 120, 336
// (insolvable part complete, solvable part sampled). `extra_dir`, when
// non-empty, is scanned for *.gtab / *.pgen files whose groups have the
// requested order; they extend the tier (deduplicated up to isomorphism).
CensusTier bundled_census(int order, const std::string& extra_dir = "");

}  // namespace hg
