#pragma once

#include <memory>
#include <vector>

#include "hg/aut.hpp"
#include "hg/group.hpp"

namespace hg {

// An element (eta, alpha) of Hol(N) = rho(N) x| Aut(N). It acts on N by
// x -> alpha(x) * eta^-1 and composes by
// (eta1, a1)(eta2, a2) = (eta1 * a1(eta2), a1 a2).
struct HolElement {
  Elt eta = 0;
  int alpha = 0;

  bool operator==(const HolElement&) const = default;
  auto operator<=>(const HolElement&) const = default;
};

class HolGroup {
 public:
  HolGroup(GroupPtr base, AutPtr aut);

  const GroupPtr& base() const { return base_; }
  const AutGroup& aut() const { return *aut_; }
  const AutPtr& aut_ptr() const { return aut_; }
  uint64_t order() const { return uint64_t(base_->order()) * aut_->order(); }

  HolElement identity() const { return HolElement{0, aut_->identity()}; }
  HolElement compose(HolElement a, HolElement b) const {
    return HolElement{base_->mul(a.eta, aut_->apply(a.alpha, b.eta)),
                      aut_->compose(a.alpha, b.alpha)};
  }
  HolElement inverse(HolElement a) const {
    int ai = aut_->invert(a.alpha);
    return HolElement{aut_->apply(ai, base_->inv(a.eta)), ai};
  }
  Elt act(HolElement a, Elt x) const {
    return base_->mul(aut_->apply(a.alpha, x), base_->inv(a.eta));
  }
  int elt_order(HolElement a) const;

  // All non-identity powers act without fixed points; such elements are the
  // only possible members of a regular subgroup.
  bool semiregular(HolElement a) const;

  uint32_t key(HolElement a) const {
    return uint32_t(a.eta) * uint32_t(aut_->order()) + uint32_t(a.alpha);
  }
  HolElement from_key(uint32_t k) const {
    return HolElement{Elt(k / aut_->order()), int(k % aut_->order())};
  }

  HolElement rho(Elt eta) const { return HolElement{eta, aut_->identity()}; }
  HolElement lambda(Elt eta) const;
  std::vector<HolElement> rho_image() const;
  std::vector<HolElement> lambda_image() const;

  // A small generating set: rho of base generators plus Aut generators.
  std::vector<HolElement> generators() const;

 private:
  GroupPtr base_;
  AutPtr aut_;
};

using HolPtr = std::shared_ptr<const HolGroup>;

// Builds Hol(N), verifying the group laws (identity and inverse laws
// exhaustively up to 10000 elements, associativity on a deterministic
// sample).
HolPtr build_hol(const GroupPtr& n);
HolPtr build_hol(const GroupPtr& n, AutPtr aut);

// True iff S is a subgroup (checked; NotASubgroup otherwise) of size |N|
// acting regularly on N.
bool is_regular(const HolGroup& hol, const std::vector<HolElement>& s);

// The Cayley table of Hol(N) itself, for small holomorphs.
GroupPtr hol_to_table(const HolGroup& hol);

// Canonical form: keys sorted ascending.
std::vector<uint32_t> canonical_keys(const HolGroup& hol,
                                     const std::vector<HolElement>& s);

}  // namespace hg
