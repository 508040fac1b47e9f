#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hg/holomorph.hpp"

namespace hg {

// A homomorphism G -> K stored as the full image map.
struct HomToGroup {
  GroupPtr src;
  GroupPtr tgt;
  std::vector<Elt> img;
};

// A homomorphism theta: G -> Hol(N), the fused form of a crossed pair.
struct HomToHol {
  GroupPtr src;
  HolPtr hol;
  std::vector<HolElement> img;
};

// f: G -> Aut(N) together with the cocycle g: G -> N. theta(s) splits as
// (g(s), f(s)); the cocycle identity g(st) = g(s) * f(s)(g(t)) is exactly
// the statement that theta is a homomorphism.
struct CrossedPair {
  GroupPtr src;
  HolPtr hol;
  std::vector<int> f;  // Aut(N) indices
  std::vector<Elt> g;  // N elements
};

// All homomorphisms G -> K, found by assigning generator images with
// ord(image) | ord(generator) and accepting when the closure of the graph in
// G x K has size exactly |G|. Deterministic order.
std::vector<HomToGroup> enumerate_homs(const GroupPtr& g, const GroupPtr& k,
                                       SearchBudget* budget = nullptr);

// Same search into Hol(N). With `bijective_only`, images are restricted to
// semiregular elements of exactly matching order and the closure rejects
// repeated eta components, so the survivors are exactly the homomorphisms
// with bijective cocycle part.
std::vector<HomToHol> enumerate_homs_hol(const GroupPtr& g, const HolPtr& hol,
                                         bool bijective_only,
                                         SearchBudget* budget = nullptr);

// Incremental closure tester for partial maps G -> Hol(N); shared by the
// crossed-homomorphism enumeration and the regular-subgroup search.
class HolGraphProbe {
 public:
  HolGraphProbe(GroupPtr g, const HolGroup& hol, bool eta_injective);

  // Closes the graph over gens[0..count) -> imgs[0..count) from a clean
  // state. On success returns true and keeps the assignment (call undo()
  // before the next attempt); on failure the state is restored.
  bool attempt(const std::vector<Elt>& gens,
               const std::vector<HolElement>& imgs, int count,
               SearchBudget* budget);
  void undo();
  bool complete() const { return int(touched_.size()) == src_->order(); }
  HolElement image(Elt sigma) const { return hol_->from_key(slot_[sigma]); }
  std::vector<HolElement> image_map() const;

 private:
  GroupPtr src_;
  const HolGroup* hol_;
  bool eta_injective_;
  std::vector<uint32_t> slot_;  // UINT32_MAX = empty
  std::vector<char> eta_used_;
  std::vector<Elt> touched_;
};

CrossedPair split_hom(const HomToHol& theta);
HomToHol fuse(const CrossedPair& pair);

// nullopt when the cocycle identity holds everywhere; a witness (s, t)
// otherwise. Also validates g(1) = 1.
std::optional<std::pair<Elt, Elt>> cocycle_witness(const CrossedPair& pair);

// h(s) = conj(g(s)) . f(s), verified to be a homomorphism into Aut(N).
std::vector<int> h_map(const CrossedPair& pair);

bool g_bijective(const CrossedPair& pair);

// Prop 2.3 machinery. lambda must be characteristic in N.
CrossedPair induce_quotient(const CrossedPair& pair, const Subgroup& lambda);
Subgroup preimage_subgroup(const CrossedPair& pair, const Subgroup& lambda);

struct DescendResult {
  HolPtr hol_lambda;
  std::vector<HolElement> subgroup;  // regular in Hol(lambda)
};
DescendResult descend_regular(const CrossedPair& pair, const Subgroup& lambda);

}  // namespace hg
