#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hg/common.hpp"

namespace hg {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

// A finite group as a validated multiplication table over indices 0..n-1.
// The identity is always index 0 (build() relabels if needed). Instances are
// immutable after construction and safe to share across threads.
class GroupTable {
 public:
  // Full validation: Latin square, identity, two-sided inverses, and
  // associativity (exhaustive for n <= Caps::assoc_exhaustive, sampled
  // beyond). Throws NotAGroup with a witness.
  static GroupPtr build(int n, std::vector<Elt> mul, std::string label);

  // For tables produced by constructors whose algebra guarantees
  // associativity (products, quotients, permutation closures). Latin-square,
  // identity and inverse checks still run.
  static GroupPtr trusted(int n, std::vector<Elt> mul, std::string label);

  int order() const { return n_; }
  Elt mul(Elt x, Elt y) const { return mul_[size_t(x) * n_ + y]; }
  Elt inv(Elt x) const { return inv_[x]; }
  int elt_order(Elt x) const { return ord_[x]; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  Elt commutator(Elt x, Elt y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  const std::string& label() const { return label_; }
  const Elt* row(Elt x) const { return mul_.data() + size_t(x) * n_; }

  int class_of(Elt x) const { return class_id_[x]; }
  int class_size(Elt x) const { return class_sizes_[class_id_[x]]; }
  int num_classes() const { return int(class_sizes_.size()); }
  const std::vector<Elt>& class_reps() const { return class_reps_; }
  bool is_abelian() const { return abelian_; }

  // Sorted multiset of element orders, used by fingerprints.
  std::vector<int> order_multiset() const;
  // Class sizes of x, x^2, ..., x^ord; an isomorphism invariant of x.
  std::vector<int> power_profile(Elt x) const;

 private:
  GroupTable() = default;
  static GroupPtr finish(int n, std::vector<Elt> mul, std::string label,
                         bool check_assoc);

  int n_ = 0;
  std::vector<Elt> mul_;
  std::vector<Elt> inv_;
  std::vector<int> ord_;
  std::vector<int> class_id_;
  std::vector<int> class_sizes_;
  std::vector<Elt> class_reps_;
  bool abelian_ = false;
  std::string label_;
};

// A subgroup is a sorted element list of its parent.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> elements;  // strictly ascending, contains 0

  int size() const { return int(elements.size()); }
  bool contains(Elt x) const;
};

// A subgroup re-indexed through its own table. to_parent maps the new
// indices back into the parent group.
struct SubgroupTable {
  GroupPtr table;
  std::vector<Elt> to_parent;
};

// Cheap isomorphism invariants. Equality is necessary, never sufficient.
struct IsoFingerprint {
  int order = 0;
  std::vector<int> order_multiset;
  int center_size = 0;
  int derived_size = 0;
  std::vector<int> class_sizes;
  bool abelian = false;

  bool operator==(const IsoFingerprint&) const = default;
};

struct DerivedSeries {
  std::vector<Subgroup> series;  // G = series[0] >= series[1] >= ...
  bool perfect = false;
  bool solvable = false;
};

struct QuotientResult {
  GroupPtr table;
  std::vector<Elt> proj;  // element index -> coset index
};

Subgroup close_generated(const GroupPtr& g, const std::vector<Elt>& gens);
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    int order_cap = Caps::subgroup_order_max);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);
Subgroup center(const GroupPtr& g);
DerivedSeries derived_series(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
bool is_normal(const Subgroup& h);
QuotientResult quotient(const GroupPtr& g, const Subgroup& k);
SubgroupTable subgroup_table(const Subgroup& h);
IsoFingerprint fingerprint(const GroupPtr& g);
std::optional<std::vector<Elt>> are_isomorphic(const GroupPtr& a,
                                               const GroupPtr& b);

// Small generating set: greedy closure ascent by index order, then pruned to
// an inclusion-minimal set. Deterministic.
std::vector<Elt> generating_set(const GroupPtr& g);

bool is_subgroup_closed(const GroupPtr& g, const std::vector<Elt>& elems);

}  // namespace hg
