#include "hg/aut.hpp"

#include <algorithm>
#include <numeric>

#include "hg/catalog.hpp"

namespace hg {

namespace {

uint64_t img_hash(const std::vector<Elt>& img) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (Elt v : img) {
    h ^= uint64_t(v) + 0x9e3779b97f4a7c15ULL;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Elt> compose_img(const std::vector<Elt>& a,
                             const std::vector<Elt>& b) {
  std::vector<Elt> r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

// Backtracking over generator images; calls sink(full image table) for every
// automorphism. Candidate images are filtered by order, class size and power
// profile before the closure test.
template <typename Sink>
void enumerate_autos(const GroupPtr& gp, Sink&& sink) {
  const GroupTable& g = *gp;
  const int n = g.order();
  std::vector<Elt> gens = generating_set(gp);
  const int k = int(gens.size());
  if (k == 0) {  // trivial group
    sink(std::vector<Elt>{0});
    return;
  }
  std::vector<std::vector<Elt>> cands(k);
  for (int i = 0; i < k; ++i) {
    Elt a = gens[i];
    auto prof = g.power_profile(a);
    for (Elt x = 0; x < n; ++x)
      if (g.elt_order(x) == g.elt_order(a) &&
          g.class_size(x) == g.class_size(a) && g.power_profile(x) == prof)
        cands[i].push_back(x);
  }

  std::vector<Elt> slot(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Elt> touched;
  std::vector<Elt> imgs(k);

  auto assign = [&](Elt x, Elt v) -> int {
    if (slot[x] >= 0) return slot[x] == v ? 0 : -1;
    if (used[v]) return -1;
    used[v] = 1;
    slot[x] = v;
    touched.push_back(x);
    return 1;
  };
  auto undo = [&]() {
    for (Elt x : touched) {
      used[slot[x]] = 0;
      slot[x] = -1;
    }
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
        if (assign(g.mul(x, gens[i]), g.mul(slot[x], imgs[i])) < 0) ok = false;
    }
    if (!ok) undo();
    return ok;
  };

  auto rec = [&](auto&& self, int level) -> void {
    if (!probe(level)) return;
    if (level == k) {
      if (int(touched.size()) == n) sink(slot);
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
}

}  // namespace

int AutGroup::compose(int a, int b) const {
  const int m = order();
  if (!comp_.empty()) return comp_[size_t(a) * m + b];
  int idx = index_of(compose_img(img_[a], img_[b]));
  if (idx < 0) fail(ErrorKind::Internal, "automorphism set not closed");
  return idx;
}

int AutGroup::index_of(const std::vector<Elt>& img) const {
  auto it = index_.find(img_hash(img));
  if (it == index_.end()) return -1;
  for (int i : it->second)
    if (img_[i] == img) return i;
  return -1;
}

void AutGroup::finish() {
  const int m = order();
  const int n = parent_->order();
  for (int i = 0; i < m; ++i) index_[img_hash(img_[i])].push_back(i);

  std::vector<Elt> idimg(n);
  std::iota(idimg.begin(), idimg.end(), 0);
  id_ = index_of(idimg);
  if (id_ < 0) fail(ErrorKind::Internal, "identity automorphism missing");

  // Composition table when affordable; otherwise compose() falls back to
  // vector composition plus an index lookup.
  if (uint64_t(m) * m <= 16'000'000) {
    comp_.assign(size_t(m) * m, -1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int idx = index_of(compose_img(img_[i], img_[j]));
        if (idx < 0) fail(ErrorKind::Internal, "automorphism set not closed");
        comp_[size_t(i) * m + j] = idx;
      }
  }

  inv_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    // img is a permutation; its inverse table is the inverse automorphism.
    std::vector<Elt> inv(n);
    for (Elt x = 0; x < n; ++x) inv[img_[i][x]] = x;
    inv_[i] = index_of(inv);
    if (inv_[i] < 0) fail(ErrorKind::Internal, "inverse automorphism missing");
  }

  ord_.assign(m, 1);
  for (int i = 0; i < m; ++i) {
    int o = 1, p = i;
    while (p != id_) {
      p = compose(p, i);
      ++o;
    }
    ord_[i] = o;
  }

  // Inner automorphisms.
  {
    std::vector<int> in;
    for (Elt eta = 0; eta < n; ++eta) {
      std::vector<Elt> c(n);
      for (Elt x = 0; x < n; ++x) c[x] = parent_->conj(eta, x);
      int idx = index_of(c);
      if (idx < 0)
        fail(ErrorKind::Internal, "inner automorphism missing from Aut");
      in.push_back(idx);
    }
    std::sort(in.begin(), in.end());
    in.erase(std::unique(in.begin(), in.end()), in.end());
    inner_ = std::move(in);
    int zn = center(parent_).size();
    if (int(inner_.size()) * zn != n)
      fail(ErrorKind::Internal, "|Inn| * |Z| != |G|");
  }

  // Small generating set of the automorphism group, greedy.
  {
    std::vector<char> in(m, 0);
    std::vector<int> cl{id_};
    in[id_] = 1;
    for (int cand = 0; cand < m; ++cand) {
      if (in[cand]) continue;
      gens_.push_back(cand);
      std::vector<int> fresh{cand};
      in[cand] = 1;
      cl.push_back(cand);
      for (size_t qi = cl.size() - 1; qi < cl.size(); ++qi) {
        for (size_t j = 0; j < cl.size(); ++j) {
          for (int p : {compose(cl[qi], cl[j]), compose(cl[j], cl[qi])}) {
            if (!in[p]) {
              in[p] = 1;
              cl.push_back(p);
            }
          }
        }
      }
      if (int(cl.size()) == m) break;
    }
  }
}

AutGroup automorphism_group(const GroupPtr& n, int cap) {
  AutGroup a;
  a.parent_ = n;
  enumerate_autos(n, [&](const std::vector<Elt>& img) {
    if (int(a.img_.size()) >= cap)
      fail(ErrorKind::CapExceeded,
           "automorphism group exceeds cap " + std::to_string(cap));
    a.img_.push_back(img);
  });
  std::sort(a.img_.begin(), a.img_.end());
  a.finish();
  return a;
}

AutPtr automorphism_group_ptr(const GroupPtr& n, int cap) {
  return std::make_shared<const AutGroup>(automorphism_group(n, cap));
}

uint64_t automorphism_count(const GroupPtr& n) {
  uint64_t count = 0;
  enumerate_autos(n, [&](const std::vector<Elt>&) { ++count; });
  return count;
}

Automorphism conj_map(const GroupPtr& n, Elt eta) {
  std::vector<Elt> img(n->order());
  for (Elt x = 0; x < n->order(); ++x) img[x] = n->conj(eta, x);
  return Automorphism{n, std::move(img)};
}

bool is_characteristic(const Subgroup& s, const AutGroup& aut) {
  // Invariance under the generators implies invariance under the group.
  for (int gi : aut.generators()) {
    for (Elt x : s.elements)
      if (!s.contains(aut.apply(gi, x))) return false;
  }
  return true;
}

std::vector<std::pair<Subgroup, bool>> characteristic_subgroups(
    const GroupPtr& n, const AutGroup& aut) {
  std::vector<std::pair<Subgroup, bool>> out;
  for (auto& s : normal_subgroups(n))
    if (is_characteristic(s, aut)) out.emplace_back(std::move(s), false);
  // Maximal among proper characteristic subgroups.
  for (size_t i = 0; i < out.size(); ++i) {
    const auto& si = out[i].first;
    if (si.size() == n->order()) continue;
    bool maximal = true;
    for (size_t j = 0; j < out.size() && maximal; ++j) {
      if (j == i) continue;
      const auto& sj = out[j].first;
      if (sj.size() == n->order() || sj.size() <= si.size()) continue;
      maximal = !std::includes(sj.elements.begin(), sj.elements.end(),
                               si.elements.begin(), si.elements.end());
    }
    out[i].second = maximal;
  }
  return out;
}

std::vector<std::pair<Subgroup, bool>> characteristic_subgroups(
    const GroupPtr& n) {
  return characteristic_subgroups(n, automorphism_group(n));
}

Automorphism restrict_to(const Automorphism& phi, const SubgroupTable& sub) {
  const auto& par = phi.parent;
  const int m = sub.table->order();
  std::vector<Elt> to_sub(par->order(), -1);
  for (int i = 0; i < m; ++i) to_sub[sub.to_parent[i]] = i;
  std::vector<Elt> img(m);
  for (int i = 0; i < m; ++i) {
    Elt v = phi.img[sub.to_parent[i]];
    if (to_sub[v] < 0)
      fail(ErrorKind::NotPreserved,
           "automorphism does not preserve the subgroup (element " +
               std::to_string(sub.to_parent[i]) + " maps outside)");
    img[i] = to_sub[v];
  }
  return Automorphism{sub.table, std::move(img)};
}

std::optional<CharSimpleDecomposition> char_simple_decompose(
    const GroupPtr& q) {
  const int n = q->order();
  if (n == 1) return std::nullopt;  // trivial group: not characteristically simple

  if (q->is_abelian()) {
    // Characteristically simple abelian groups are elementary abelian.
    int p = 0;
    for (Elt x = 1; x < n; ++x) {
      int o = q->elt_order(x);
      if (p == 0) p = o;
      if (o != p) return std::nullopt;
    }
    // p must be prime and n a power of p.
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) return std::nullopt;
    int m = 0;
    long long t = 1;
    while (t < n) {
      t *= p;
      ++m;
    }
    if (t != n) return std::nullopt;
    auto power = abelian(std::vector<int>(m, p));
    if (!are_isomorphic(q, power)) return std::nullopt;
    auto factor = cyclic(p);
    return CharSimpleDecomposition{factor, m};
  }

  // Non-abelian: Q is characteristically simple iff it is the product of its
  // minimal normal subgroups and these are pairwise isomorphic simple groups.
  auto normals = normal_subgroups(q);
  std::vector<Subgroup> minimal;
  for (const auto& s : normals) {
    if (s.size() == 1 || s.size() == n) continue;
    bool is_min = true;
    for (const auto& t : normals) {
      if (t.size() == 1 || t.size() >= s.size()) continue;
      if (std::includes(s.elements.begin(), s.elements.end(),
                        t.elements.begin(), t.elements.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(s);
  }
  if (minimal.empty()) {
    // No proper nontrivial normal subgroup: Q itself is simple.
    return CharSimpleDecomposition{q, 1};
  }
  // Socle must be everything.
  std::vector<Elt> gens;
  for (const auto& s : minimal)
    gens.insert(gens.end(), s.elements.begin(), s.elements.end());
  if (close_generated(q, gens).size() != n) return std::nullopt;

  auto t0 = subgroup_table(minimal[0]).table;
  // Each minimal normal factor must be simple and isomorphic to the first.
  for (const auto& s : minimal) {
    auto st = subgroup_table(s).table;
    if (normal_subgroups(st).size() != 2) return std::nullopt;
    if (!are_isomorphic(t0, st)) return std::nullopt;
  }
  int m = 0;
  long long t = 1;
  while (t < n) {
    t *= t0->order();
    ++m;
  }
  if (t != n) return std::nullopt;
  GroupPtr power = t0;
  for (int i = 1; i < m; ++i) power = product(power, t0);
  if (!are_isomorphic(q, power)) return std::nullopt;
  return CharSimpleDecomposition{t0, m};
}

}  // namespace hg
