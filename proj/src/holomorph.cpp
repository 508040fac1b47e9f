#include "hg/holomorph.hpp"

#include <algorithm>

namespace hg {

HolGroup::HolGroup(GroupPtr base, AutPtr aut)
    : base_(std::move(base)), aut_(std::move(aut)) {
  if (aut_->parent().get() != base_.get())
    fail(ErrorKind::Internal, "automorphism group belongs to a different base");
  if (order() > Caps::hol_max)
    fail(ErrorKind::CapExceeded,
         "holomorph order " + std::to_string(order()) + " exceeds cap");
}

int HolGroup::elt_order(HolElement a) const {
  HolElement id = identity();
  if (a == id) return 1;
  int o = 1;
  HolElement p = a;
  while (p != id) {
    p = compose(p, a);
    ++o;
    if (uint64_t(o) > order())
      fail(ErrorKind::Internal, "holomorph element order overflow");
  }
  return o;
}

bool HolGroup::semiregular(HolElement a) const {
  const int n = base_->order();
  HolElement id = identity();
  HolElement p = a;
  while (p != id) {
    for (Elt x = 0; x < n; ++x)
      if (act(p, x) == x) return false;
    p = compose(p, a);
  }
  return true;
}

HolElement HolGroup::lambda(Elt eta) const {
  std::vector<Elt> img(base_->order());
  for (Elt x = 0; x < base_->order(); ++x) img[x] = base_->conj(eta, x);
  int idx = aut_->index_of(img);
  if (idx < 0) fail(ErrorKind::Internal, "conjugation map missing from Aut");
  return HolElement{base_->inv(eta), idx};
}

std::vector<HolElement> HolGroup::rho_image() const {
  std::vector<HolElement> out;
  out.reserve(base_->order());
  for (Elt eta = 0; eta < base_->order(); ++eta) out.push_back(rho(eta));
  return out;
}

std::vector<HolElement> HolGroup::lambda_image() const {
  std::vector<HolElement> out;
  out.reserve(base_->order());
  for (Elt eta = 0; eta < base_->order(); ++eta) out.push_back(lambda(eta));
  return out;
}

std::vector<HolElement> HolGroup::generators() const {
  std::vector<HolElement> gens;
  for (Elt x : generating_set(base_)) gens.push_back(rho(x));
  for (int a : aut_->generators()) gens.push_back(HolElement{0, a});
  if (gens.empty()) gens.push_back(identity());
  return gens;
}

HolPtr build_hol(const GroupPtr& n, AutPtr aut) {
  auto hol = std::make_shared<const HolGroup>(n, std::move(aut));

  // Identity and inverse laws, exhaustive on small holomorphs.
  const uint64_t total = hol->order();
  HolElement id = hol->identity();
  if (total <= 10000) {
    for (uint32_t k = 0; k < total; ++k) {
      HolElement h = hol->from_key(k);
      if (hol->compose(id, h) != h || hol->compose(h, id) != h)
        fail(ErrorKind::Internal, "holomorph identity law fails");
      HolElement hi = hol->inverse(h);
      if (hol->compose(h, hi) != id || hol->compose(hi, h) != id)
        fail(ErrorKind::Internal, "holomorph inverse law fails");
    }
  }
  // Associativity and action compatibility on a deterministic sample.
  SplitMix64 rng(0x484f4cu);
  const int samples = total <= 10000 ? 20000 : 4000;
  for (int i = 0; i < samples; ++i) {
    HolElement a = hol->from_key(uint32_t(rng.below(total)));
    HolElement b = hol->from_key(uint32_t(rng.below(total)));
    HolElement c = hol->from_key(uint32_t(rng.below(total)));
    if (hol->compose(hol->compose(a, b), c) != hol->compose(a, hol->compose(b, c)))
      fail(ErrorKind::Internal, "holomorph associativity fails");
    Elt x = Elt(rng.below(n->order()));
    if (hol->act(hol->compose(a, b), x) != hol->act(a, hol->act(b, x)))
      fail(ErrorKind::Internal, "holomorph action compatibility fails");
    HolElement hi = hol->inverse(a);
    if (hol->compose(a, hi) != id || hol->compose(hi, a) != id)
      fail(ErrorKind::Internal, "holomorph inverse law fails");
  }
  return hol;
}

HolPtr build_hol(const GroupPtr& n) {
  return build_hol(n, automorphism_group_ptr(n));
}

bool is_regular(const HolGroup& hol, const std::vector<HolElement>& s) {
  const int n = hol.base()->order();
  // Closure check.
  std::vector<uint32_t> keys = canonical_keys(hol, s);
  auto member = [&](HolElement h) {
    return std::binary_search(keys.begin(), keys.end(), hol.key(h));
  };
  if (!member(hol.identity()))
    fail(ErrorKind::NotASubgroup, "set does not contain the identity");
  for (const auto& a : s)
    for (const auto& b : s)
      if (!member(hol.compose(a, b)))
        fail(ErrorKind::NotASubgroup, "set is not closed under composition");

  if (int(s.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (const auto& a : s) {
    Elt v = hol.act(a, 0);
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

GroupPtr hol_to_table(const HolGroup& hol) {
  const uint64_t total = hol.order();
  if (total > uint64_t(Caps::table_max))
    fail(ErrorKind::CapExceeded, "holomorph too large for a table");
  const int n = int(total);
  std::vector<Elt> mul(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[size_t(i) * n + j] = Elt(
          hol.key(hol.compose(hol.from_key(uint32_t(i)), hol.from_key(uint32_t(j)))));
  return GroupTable::trusted(n, std::move(mul),
                             "Hol(" + hol.base()->label() + ")");
}

std::vector<uint32_t> canonical_keys(const HolGroup& hol,
                                     const std::vector<HolElement>& s) {
  std::vector<uint32_t> keys;
  keys.reserve(s.size());
  for (const auto& h : s) keys.push_back(hol.key(h));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace hg
