#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hg/group.hpp"

namespace hg {

// An automorphism stored as a full image table (O(1) application).
struct Automorphism {
  GroupPtr parent;
  std::vector<Elt> img;

  Elt operator()(Elt x) const { return img[x]; }
};

// The full automorphism group of a table, enumerated by backtracking on the
// images of a generating set. Composition i*j applies j first.
class AutGroup {
 public:
  const GroupPtr& parent() const { return parent_; }
  int order() const { return int(img_.size()); }
  Elt apply(int a, Elt x) const { return img_[a][x]; }
  const std::vector<Elt>& image_table(int a) const { return img_[a]; }
  int identity() const { return id_; }
  int compose(int a, int b) const;  // a after b
  int invert(int a) const { return inv_[a]; }
  int elt_order(int a) const { return ord_[a]; }
  int index_of(const std::vector<Elt>& img) const;  // -1 if absent
  const std::vector<int>& generators() const { return gens_; }
  const std::vector<int>& inner() const { return inner_; }  // sorted indices
  Automorphism at(int a) const { return Automorphism{parent_, img_[a]}; }

 private:
  friend AutGroup automorphism_group(const GroupPtr&, int);
  void finish();  // index map, composition/inverse tables, inner, generators

  GroupPtr parent_;
  std::vector<std::vector<Elt>> img_;
  std::vector<int> comp_;  // order^2 when built, else composed on the fly
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<int> gens_;
  std::vector<int> inner_;
  int id_ = 0;
  std::unordered_map<uint64_t, std::vector<int>> index_;  // hash -> candidates
};

using AutPtr = std::shared_ptr<const AutGroup>;

AutGroup automorphism_group(const GroupPtr& n, int cap = Caps::aut_max);
AutPtr automorphism_group_ptr(const GroupPtr& n, int cap = Caps::aut_max);

// Number of automorphisms without materializing them (for large groups).
uint64_t automorphism_count(const GroupPtr& n);

Automorphism conj_map(const GroupPtr& n, Elt eta);

// All characteristic subgroups (each flagged maximal when it is maximal
// among proper characteristic subgroups). Characteristic subgroups are
// normal, so the scan runs over the normal subgroup lattice.
std::vector<std::pair<Subgroup, bool>> characteristic_subgroups(
    const GroupPtr& n, const AutGroup& aut);
std::vector<std::pair<Subgroup, bool>> characteristic_subgroups(
    const GroupPtr& n);

bool is_characteristic(const Subgroup& s, const AutGroup& aut);

// The induced automorphism on a subgroup preserved by phi, re-indexed
// through the subgroup's own table. Throws NotPreserved.
Automorphism restrict_to(const Automorphism& phi, const SubgroupTable& sub);

struct CharSimpleDecomposition {
  GroupPtr simple_factor;
  int multiplicity = 0;
};

// Q ~ T^m with T simple, when Q is characteristically simple; nullopt
// otherwise. The decomposition is verified against an explicit direct power.
std::optional<CharSimpleDecomposition> char_simple_decompose(const GroupPtr& q);

}  // namespace hg
