#include "hg/crossed.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace hg {

namespace {
constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();
}

HolGraphProbe::HolGraphProbe(GroupPtr g, const HolGroup& hol,
                             bool eta_injective)
    : src_(std::move(g)),
      hol_(&hol),
      eta_injective_(eta_injective),
      slot_(src_->order(), kEmpty),
      eta_used_(hol.base()->order(), 0) {}

bool HolGraphProbe::attempt(const std::vector<Elt>& gens,
                            const std::vector<HolElement>& imgs, int count,
                            SearchBudget* budget) {
  const GroupTable& a = *src_;
  touched_.clear();
  auto assign = [&](Elt x, HolElement v) -> int {
    uint32_t vk = hol_->key(v);
    if (slot_[x] != kEmpty) return slot_[x] == vk ? 0 : -1;
    if (eta_injective_) {
      if (eta_used_[v.eta]) return -1;
      eta_used_[v.eta] = 1;
    }
    slot_[x] = vk;
    touched_.push_back(x);
    return 1;
  };
  bool ok = assign(0, hol_->identity()) >= 0;
  for (int i = 0; ok && i < count; ++i)
    if (assign(gens[i], imgs[i]) < 0) ok = false;
  for (size_t qi = 0; ok && qi < touched_.size(); ++qi) {
    Elt x = touched_[qi];
    HolElement hx = hol_->from_key(slot_[x]);
    for (int i = 0; i < count && ok; ++i) {
      Elt y = a.mul(x, gens[i]);
      if (assign(y, hol_->compose(hx, imgs[i])) < 0) ok = false;
    }
  }
  if (budget) budget->charge(touched_.size() + 1);
  if (!ok) undo();
  return ok;
}

void HolGraphProbe::undo() {
  for (Elt x : touched_) {
    if (eta_injective_) eta_used_[hol_->from_key(slot_[x]).eta] = 0;
    slot_[x] = kEmpty;
  }
  touched_.clear();
}

std::vector<HolElement> HolGraphProbe::image_map() const {
  std::vector<HolElement> out(src_->order());
  for (Elt x = 0; x < src_->order(); ++x) out[x] = hol_->from_key(slot_[x]);
  return out;
}

// ---- plain homomorphism enumeration -----------------------------------------

std::vector<HomToGroup> enumerate_homs(const GroupPtr& g, const GroupPtr& k,
                                       SearchBudget* budget) {
  const int n = g->order();
  std::vector<Elt> gens = generating_set(g);
  const int kk = int(gens.size());
  std::vector<std::vector<Elt>> cands(kk);
  for (int i = 0; i < kk; ++i)
    for (Elt x = 0; x < k->order(); ++x)
      if (g->elt_order(gens[i]) % k->elt_order(x) == 0) cands[i].push_back(x);

  std::vector<HomToGroup> out;
  std::vector<Elt> slot(n, -1), touched;
  std::vector<Elt> imgs(kk);

  auto assign = [&](Elt x, Elt v) -> int {
    if (slot[x] >= 0) return slot[x] == v ? 0 : -1;
    slot[x] = v;
    touched.push_back(x);
    return 1;
  };
  auto undo = [&]() {
    for (Elt x : touched) slot[x] = -1;
    touched.clear();
  };
  auto probe = [&](int count) -> bool {
    touched.clear();
    bool ok = assign(0, 0) >= 0;
    for (int i = 0; ok && i < count; ++i)
      if (assign(gens[i], imgs[i]) < 0) ok = false;
    for (size_t qi = 0; ok && qi < touched.size(); ++qi) {
      Elt x = touched[qi];
      for (int i = 0; i < count && ok; ++i)
        if (assign(g->mul(x, gens[i]), k->mul(slot[x], imgs[i])) < 0)
          ok = false;
    }
    if (budget) budget->charge(touched.size() + 1);
    if (!ok) undo();
    return ok;
  };
  auto rec = [&](auto&& self, int level) -> void {
    if (!probe(level)) return;
    if (level == kk) {
      out.push_back(HomToGroup{g, k, std::vector<Elt>(slot.begin(), slot.end())});
      undo();
      return;
    }
    undo();
    for (Elt c : cands[level]) {
      imgs[level] = c;
      self(self, level + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<HomToHol> enumerate_homs_hol(const GroupPtr& g, const HolPtr& hol,
                                         bool bijective_only,
                                         SearchBudget* budget) {
  std::vector<HomToHol> out;
  if (bijective_only && g->order() != hol->base()->order())
    return out;  // a bijective cocycle needs |G| = |N|
  std::vector<Elt> gens = generating_set(g);
  const int kk = int(gens.size());
  const uint64_t total = hol->order();

  std::vector<std::vector<HolElement>> cands(kk);
  for (int i = 0; i < kk; ++i) {
    int go = g->elt_order(gens[i]);
    for (uint64_t key = 0; key < total; ++key) {
      HolElement h = hol->from_key(uint32_t(key));
      int ho = hol->elt_order(h);
      if (bijective_only) {
        if (ho != go || !hol->semiregular(h)) continue;
      } else {
        if (go % ho != 0) continue;
      }
      cands[i].push_back(h);
    }
  }

  HolGraphProbe probe(g, *hol, bijective_only);
  std::vector<HolElement> imgs(kk);
  auto rec = [&](auto&& self, int level) -> void {
    if (!probe.attempt(gens, imgs, level, budget)) return;
    if (level == kk) {
      if (probe.complete()) out.push_back(HomToHol{g, hol, probe.image_map()});
      probe.undo();
      return;
    }
    probe.undo();
    for (const HolElement& c : cands[level]) {
      imgs[level] = c;
      self(self, level + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---- crossed pairs -----------------------------------------------------------

CrossedPair split_hom(const HomToHol& theta) {
  const auto& g = *theta.src;
  const auto& hol = *theta.hol;
  const int n = g.order();
  if (int(theta.img.size()) != n)
    fail(ErrorKind::Internal, "homomorphism image map has wrong size");
  for (Elt s = 0; s < n; ++s)
    for (Elt t = 0; t < n; ++t)
      if (theta.img[g.mul(s, t)] != hol.compose(theta.img[s], theta.img[t]))
        fail(ErrorKind::Internal, "split_hom given a non-homomorphism");
  CrossedPair pair;
  pair.src = theta.src;
  pair.hol = theta.hol;
  pair.f.resize(n);
  pair.g.resize(n);
  for (Elt s = 0; s < n; ++s) {
    pair.f[s] = theta.img[s].alpha;
    pair.g[s] = theta.img[s].eta;
  }
  // f must be a homomorphism and (f, g) a cocycle; both follow from theta
  // being a homomorphism, but they are cheap to recheck.
  const AutGroup& aut = theta.hol->aut();
  for (Elt s = 0; s < n; ++s)
    for (Elt t = 0; t < n; ++t)
      if (pair.f[g.mul(s, t)] != aut.compose(pair.f[s], pair.f[t]))
        fail(ErrorKind::Internal, "split produced a non-homomorphism f");
  if (cocycle_witness(pair))
    fail(ErrorKind::Internal, "split produced a non-cocycle g");
  return pair;
}

HomToHol fuse(const CrossedPair& pair) {
  const int n = pair.src->order();
  HomToHol theta;
  theta.src = pair.src;
  theta.hol = pair.hol;
  theta.img.resize(n);
  for (Elt s = 0; s < n; ++s)
    theta.img[s] = HolElement{pair.g[s], pair.f[s]};
  return theta;
}

std::optional<std::pair<Elt, Elt>> cocycle_witness(const CrossedPair& pair) {
  const auto& g = *pair.src;
  const auto& n = *pair.hol->base();
  const AutGroup& aut = pair.hol->aut();
  if (pair.g[0] != 0) return std::make_pair(Elt(0), Elt(0));
  for (Elt s = 0; s < g.order(); ++s)
    for (Elt t = 0; t < g.order(); ++t) {
      Elt lhs = pair.g[g.mul(s, t)];
      Elt rhs = n.mul(pair.g[s], aut.apply(pair.f[s], pair.g[t]));
      if (lhs != rhs) return std::make_pair(s, t);
    }
  return std::nullopt;
}

std::vector<int> h_map(const CrossedPair& pair) {
  if (cocycle_witness(pair))
    fail(ErrorKind::Internal, "h_map requires a valid cocycle");
  const auto& g = *pair.src;
  const auto& nt = *pair.hol->base();
  const AutGroup& aut = pair.hol->aut();
  const int nn = nt.order();
  std::vector<int> h(g.order());
  std::vector<Elt> buf(nn);
  for (Elt s = 0; s < g.order(); ++s) {
    const std::vector<Elt>& fimg = aut.image_table(pair.f[s]);
    Elt c = pair.g[s];
    for (Elt x = 0; x < nn; ++x) buf[x] = nt.conj(c, fimg[x]);
    int idx = aut.index_of(buf);
    if (idx < 0)
      fail(ErrorKind::Internal, "conj(g(s)) . f(s) is not an automorphism");
    h[s] = idx;
  }
  for (Elt s = 0; s < g.order(); ++s)
    for (Elt t = 0; t < g.order(); ++t)
      if (h[g.mul(s, t)] != aut.compose(h[s], h[t]))
        fail(ErrorKind::Internal, "h map is not a homomorphism");
  return h;
}

bool g_bijective(const CrossedPair& pair) {
  const int nn = pair.hol->base()->order();
  if (pair.src->order() != nn) return false;
  std::vector<char> hit(nn, 0);
  for (Elt v : pair.g) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

namespace {

void require_characteristic(const CrossedPair& pair, const Subgroup& lambda) {
  if (lambda.parent.get() != pair.hol->base().get())
    fail(ErrorKind::NotCharacteristic,
         "subgroup belongs to a different group");
  if (!is_characteristic(lambda, pair.hol->aut()))
    fail(ErrorKind::NotCharacteristic,
         "subgroup is not invariant under Aut(N)");
}

}  // namespace

CrossedPair induce_quotient(const CrossedPair& pair, const Subgroup& lambda) {
  require_characteristic(pair, lambda);
  const GroupPtr& n = pair.hol->base();
  auto q = quotient(n, lambda);
  auto holq = build_hol(q.table);
  const AutGroup& autn = pair.hol->aut();
  const AutGroup& autq = holq->aut();

  // Coset representatives for the reduction Aut(N) -> Aut(N/lambda).
  std::vector<Elt> rep(q.table->order(), -1);
  for (Elt x = 0; x < n->order(); ++x)
    if (rep[q.proj[x]] < 0) rep[q.proj[x]] = x;

  std::map<int, int> reduced;  // Aut(N) index -> Aut(N/lambda) index
  auto reduce = [&](int a) -> int {
    auto it = reduced.find(a);
    if (it != reduced.end()) return it->second;
    std::vector<Elt> img(q.table->order());
    for (Elt c = 0; c < q.table->order(); ++c)
      img[c] = q.proj[autn.apply(a, rep[c])];
    int idx = autq.index_of(img);
    if (idx < 0)
      fail(ErrorKind::Internal, "reduced automorphism missing from Aut(N/L)");
    reduced.emplace(a, idx);
    return idx;
  };

  CrossedPair out;
  out.src = pair.src;
  out.hol = holq;
  out.f.resize(pair.src->order());
  out.g.resize(pair.src->order());
  for (Elt s = 0; s < pair.src->order(); ++s) {
    out.f[s] = reduce(pair.f[s]);
    out.g[s] = q.proj[pair.g[s]];
  }
  if (auto w = cocycle_witness(out))
    fail(ErrorKind::Internal, "induced pair violates the cocycle identity at (" +
                                  std::to_string(w->first) + "," +
                                  std::to_string(w->second) + ")");
  return out;
}

Subgroup preimage_subgroup(const CrossedPair& pair, const Subgroup& lambda) {
  require_characteristic(pair, lambda);
  if (cocycle_witness(pair))
    fail(ErrorKind::Internal, "preimage_subgroup requires a valid cocycle");
  std::vector<Elt> elems;
  for (Elt s = 0; s < pair.src->order(); ++s)
    if (lambda.contains(pair.g[s])) elems.push_back(s);
  Subgroup h{pair.src, std::move(elems)};
  if (!is_subgroup_closed(pair.src, h.elements))
    fail(ErrorKind::Internal, "cocycle preimage is not closed");
  return h;
}

DescendResult descend_regular(const CrossedPair& pair,
                              const Subgroup& lambda) {
  require_characteristic(pair, lambda);
  if (!g_bijective(pair))
    fail(ErrorKind::NotBijective, "descend_regular needs a bijective cocycle");
  Subgroup h = preimage_subgroup(pair, lambda);

  SubgroupTable lt = subgroup_table(lambda);
  auto holl = build_hol(lt.table);
  const AutGroup& autl = holl->aut();

  std::vector<Elt> to_sub(pair.hol->base()->order(), -1);
  for (int i = 0; i < lt.table->order(); ++i) to_sub[lt.to_parent[i]] = i;

  std::vector<HolElement> s;
  for (Elt sigma : h.elements) {
    Automorphism r = restrict_to(pair.hol->aut().at(pair.f[sigma]), lt);
    int idx = autl.index_of(r.img);
    if (idx < 0)
      fail(ErrorKind::Internal, "restricted automorphism missing from Aut(L)");
    s.push_back(HolElement{to_sub[pair.g[sigma]], idx});
  }
  if (!is_regular(*holl, s))
    fail(ErrorKind::Internal, "descended subgroup is not regular");
  // Isomorphic to the preimage subgroup.
  auto stab = subgroup_table(h).table;
  std::vector<uint32_t> keys = canonical_keys(*holl, s);
  const int m = int(keys.size());
  std::vector<Elt> mul(size_t(m) * m);
  std::map<uint32_t, Elt> pos;
  for (int i = 0; i < m; ++i) pos[keys[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mul[size_t(i) * m + j] = pos.at(holl->key(
          holl->compose(holl->from_key(keys[i]), holl->from_key(keys[j]))));
  auto stable = GroupTable::trusted(m, std::move(mul), "descended");
  if (!are_isomorphic(stab, stable))
    fail(ErrorKind::Internal,
         "descended subgroup is not isomorphic to the preimage");
  return DescendResult{holl, std::move(s)};
}

}  // namespace hg
