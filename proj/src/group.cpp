#include "hg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hg {

namespace {

std::string witness3(Elt x, Elt y, Elt z) {
  std::ostringstream os;
  os << "(" << x << "," << y << "," << z << ")";
  return os.str();
}

// Incremental closure of `start` under multiplication. `start` need not be
// sorted; the result is ascending. O(|result|^2) table lookups.
std::vector<Elt> closure_elems(const GroupTable& g, std::vector<Elt> start) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Elt> list;
  list.reserve(start.size() + 1);
  auto push = [&](Elt x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  push(0);
  for (Elt x : start) push(x);
  for (size_t i = 0; i < list.size(); ++i) {
    Elt z = list[i];
    for (size_t j = 0; j <= i; ++j) {
      Elt m = list[j];
      push(g.mul(z, m));
      push(g.mul(m, z));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

std::vector<int> GroupTable::order_multiset() const {
  std::vector<int> v(ord_);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> GroupTable::power_profile(Elt x) const {
  std::vector<int> prof;
  Elt p = x;
  while (p != 0) {
    prof.push_back(class_size(p));
    p = mul(p, x);
  }
  return prof;
}

GroupPtr GroupTable::finish(int n, std::vector<Elt> mul, std::string label,
                            bool check_assoc) {
  if (n < 1) fail(ErrorKind::NotAGroup, "order must be >= 1");
  if (n > Caps::table_max)
    fail(ErrorKind::CapExceeded,
         "table order " + std::to_string(n) + " exceeds cap");
  if (mul.size() != size_t(n) * n)
    fail(ErrorKind::NotAGroup, "table has wrong size");
  for (Elt v : mul)
    if (v < 0 || v >= n) fail(ErrorKind::NotAGroup, "entry out of range");

  auto at = [&](Elt x, Elt y) -> Elt& { return mul[size_t(x) * n + y]; };

  // Locate the identity and relabel it to index 0 if necessary.
  Elt e = -1;
  for (Elt c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (Elt x = 0; x < n && ok; ++x)
      ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) fail(ErrorKind::NotAGroup, "no two-sided identity");
  if (e != 0) {
    auto p = [&](Elt x) -> Elt { return x == 0 ? e : (x == e ? Elt(0) : x); };
    std::vector<Elt> re(size_t(n) * n);
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        re[size_t(p(x)) * n + p(y)] = p(at(x, y));
    mul.swap(re);
  }

  // Latin square.
  {
    std::vector<char> seen(n);
    for (Elt x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elt y = 0; y < n; ++y) {
        Elt v = at(x, y);
        if (seen[v])
          fail(ErrorKind::NotAGroup,
               "row " + std::to_string(x) + " repeats value " +
                   std::to_string(v));
        seen[v] = 1;
      }
    }
    for (Elt y = 0; y < n; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elt x = 0; x < n; ++x) {
        Elt v = at(x, y);
        if (seen[v])
          fail(ErrorKind::NotAGroup,
               "column " + std::to_string(y) + " repeats value " +
                   std::to_string(v));
        seen[v] = 1;
      }
    }
  }

  // Two-sided inverses.
  std::vector<Elt> inv(n, -1);
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y)
      if (at(x, y) == 0 && at(y, x) == 0) {
        inv[x] = y;
        break;
      }
    if (inv[x] < 0)
      fail(ErrorKind::NotAGroup,
           "element " + std::to_string(x) + " has no two-sided inverse");
  }

  if (check_assoc) {
    if (n <= Caps::assoc_exhaustive) {
      for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
          Elt xy = at(x, y);
          for (Elt z = 0; z < n; ++z)
            if (at(xy, z) != at(x, at(y, z)))
              fail(ErrorKind::NotAGroup,
                   "associativity fails at " + witness3(x, y, z));
        }
    } else {
      SplitMix64 rng(0x48472d41u);
      for (int i = 0; i < (1 << 21); ++i) {
        Elt x = Elt(rng.below(n)), y = Elt(rng.below(n)), z = Elt(rng.below(n));
        if (at(at(x, y), z) != at(x, at(y, z)))
          fail(ErrorKind::NotAGroup,
               "associativity fails at " + witness3(x, y, z));
      }
    }
  }

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->n_ = n;
  g->mul_ = std::move(mul);
  g->inv_ = std::move(inv);
  g->label_ = std::move(label);

  g->ord_.assign(n, 0);
  for (Elt x = 0; x < n; ++x) {
    int o = 1;
    Elt p = x;
    while (p != 0) {
      p = g->mul(p, x);
      ++o;
      if (o > n) fail(ErrorKind::NotAGroup, "element order overflow");
    }
    g->ord_[x] = o;
  }

  // Conjugacy classes.
  g->class_id_.assign(n, -1);
  for (Elt x = 0; x < n; ++x) {
    if (g->class_id_[x] >= 0) continue;
    int cid = int(g->class_reps_.size());
    g->class_reps_.push_back(x);
    int sz = 0;
    std::vector<Elt> stack{x};
    g->class_id_[x] = cid;
    while (!stack.empty()) {
      Elt y = stack.back();
      stack.pop_back();
      ++sz;
      for (Elt t = 0; t < n; ++t) {
        Elt c = g->conj(t, y);
        if (g->class_id_[c] < 0) {
          g->class_id_[c] = cid;
          stack.push_back(c);
        }
      }
    }
    g->class_sizes_.push_back(sz);
  }
  g->abelian_ = int(g->class_reps_.size()) == n;
  return g;
}

GroupPtr GroupTable::build(int n, std::vector<Elt> mul, std::string label) {
  return finish(n, std::move(mul), std::move(label), true);
}

GroupPtr GroupTable::trusted(int n, std::vector<Elt> mul, std::string label) {
  return finish(n, std::move(mul), std::move(label), false);
}

bool Subgroup::contains(Elt x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup close_generated(const GroupPtr& g, const std::vector<Elt>& gens) {
  for (Elt x : gens)
    if (x < 0 || x >= g->order())
      fail(ErrorKind::NotAGroup, "generator index out of range");
  return Subgroup{g, closure_elems(*g, gens)};
}

bool is_subgroup_closed(const GroupPtr& g, const std::vector<Elt>& elems) {
  std::vector<char> in(g->order(), 0);
  for (Elt x : elems) in[x] = 1;
  if (!in[0]) return false;
  for (Elt x : elems)
    for (Elt y : elems)
      if (!in[g->mul(x, y)]) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_cap) {
  const int n = g->order();
  if (n > order_cap)
    fail(ErrorKind::CapExceeded, "all_subgroups cap is " +
                                     std::to_string(order_cap) + ", group has " +
                                     std::to_string(n));

  // One generator per distinct cyclic subgroup.
  std::vector<Elt> seeds;
  {
    std::set<std::vector<Elt>> cyc;
    for (Elt x = 0; x < n; ++x) {
      auto c = closure_elems(*g, {x});
      if (cyc.insert(c).second) seeds.push_back(x);
    }
  }

  std::set<std::vector<Elt>> found;
  std::vector<std::vector<Elt>> queue;
  auto add = [&](std::vector<Elt> s) {
    if (found.insert(s).second) queue.push_back(std::move(s));
  };
  add({0});
  for (size_t i = 0; i < queue.size(); ++i) {
    std::vector<Elt> s = queue[i];
    for (Elt c : seeds) {
      if (std::binary_search(s.begin(), s.end(), c)) continue;
      auto t = s;
      t.push_back(c);
      add(closure_elems(*g, t));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(Subgroup{g, e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  const int n = g->order();
  // Class members, grouped.
  std::vector<std::vector<Elt>> classes(g->num_classes());
  for (Elt x = 0; x < n; ++x) classes[g->class_of(x)].push_back(x);

  std::set<std::vector<Elt>> found;
  std::vector<std::vector<Elt>> queue;
  auto add = [&](std::vector<Elt> s) {
    if (found.insert(s).second) queue.push_back(std::move(s));
  };
  add({0});
  for (size_t i = 0; i < queue.size(); ++i) {
    std::vector<Elt> s = queue[i];
    for (int c = 0; c < g->num_classes(); ++c) {
      Elt rep = g->class_reps()[c];
      if (std::binary_search(s.begin(), s.end(), rep)) continue;
      auto t = s;
      t.insert(t.end(), classes[c].begin(), classes[c].end());
      add(closure_elems(*g, t));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(Subgroup{g, e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elt> z;
  for (Elt x = 0; x < g->order(); ++x)
    if (g->class_size(x) == 1) z.push_back(x);
  return Subgroup{g, std::move(z)};
}

Subgroup derived_subgroup(const GroupPtr& g) {
  const int n = g->order();
  std::vector<char> in(n, 0);
  std::vector<Elt> gens;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      Elt c = g->commutator(x, y);
      if (!in[c]) {
        in[c] = 1;
        gens.push_back(c);
      }
    }
  return Subgroup{g, closure_elems(*g, gens)};
}

namespace {
Subgroup derived_of(const GroupPtr& g, const Subgroup& h) {
  std::vector<char> in(g->order(), 0);
  std::vector<Elt> gens;
  for (Elt x : h.elements)
    for (Elt y : h.elements) {
      Elt c = g->commutator(x, y);
      if (!in[c]) {
        in[c] = 1;
        gens.push_back(c);
      }
    }
  return Subgroup{g, closure_elems(*g, gens)};
}
}  // namespace

DerivedSeries derived_series(const GroupPtr& g) {
  DerivedSeries ds;
  std::vector<Elt> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  ds.series.push_back(Subgroup{g, std::move(all)});
  for (;;) {
    Subgroup next = derived_of(g, ds.series.back());
    if (next.elements == ds.series.back().elements) break;
    ds.series.push_back(std::move(next));
  }
  ds.perfect = ds.series.size() == 1;
  ds.solvable = ds.series.back().size() == 1;
  return ds;
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.parent;
  for (Elt t = 0; t < g.order(); ++t)
    for (Elt x : h.elements)
      if (!h.contains(g.conj(t, x))) return false;
  return true;
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& k) {
  const int n = g->order();
  if (k.parent.get() != g.get())
    fail(ErrorKind::NotNormal, "subgroup belongs to a different group");
  // Normality check with witness.
  for (Elt t = 0; t < n; ++t)
    for (Elt x : k.elements)
      if (!k.contains(g->conj(t, x)))
        fail(ErrorKind::NotNormal, "conjugate of " + std::to_string(x) +
                                       " by " + std::to_string(t) +
                                       " leaves the subgroup");

  std::vector<Elt> proj(n, -1);
  std::vector<Elt> reps;
  for (Elt x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    Elt cid = Elt(reps.size());
    reps.push_back(x);
    for (Elt h : k.elements) proj[g->mul(x, h)] = cid;
  }
  const int m = int(reps.size());
  std::vector<Elt> qmul(size_t(m) * m);
  for (Elt a = 0; a < m; ++a)
    for (Elt b = 0; b < m; ++b)
      qmul[size_t(a) * m + b] = proj[g->mul(reps[a], reps[b])];
  auto q = GroupTable::trusted(m, std::move(qmul), g->label() + "/" +
                                                       std::to_string(k.size()));
  // The projection must respect multiplication everywhere.
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (q->mul(proj[x], proj[y]) != proj[g->mul(x, y)])
        fail(ErrorKind::NotNormal,
             "projection is not a homomorphism at (" + std::to_string(x) +
                 "," + std::to_string(y) + ")");
  return QuotientResult{std::move(q), std::move(proj)};
}

SubgroupTable subgroup_table(const Subgroup& h) {
  const auto& g = *h.parent;
  const int m = h.size();
  std::vector<Elt> idx(g.order(), -1);
  for (int i = 0; i < m; ++i) idx[h.elements[i]] = i;
  std::vector<Elt> mul(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Elt p = g.mul(h.elements[i], h.elements[j]);
      if (idx[p] < 0)
        fail(ErrorKind::NotASubgroup, "element list is not closed");
      mul[size_t(i) * m + j] = idx[p];
    }
  auto t = GroupTable::trusted(
      m, std::move(mul), g.label() + "<" + std::to_string(m) + ">");
  return SubgroupTable{std::move(t), h.elements};
}

IsoFingerprint fingerprint(const GroupPtr& g) {
  IsoFingerprint fp;
  fp.order = g->order();
  fp.order_multiset = g->order_multiset();
  fp.center_size = center(g).size();
  fp.derived_size = derived_subgroup(g).size();
  for (int c = 0; c < g->num_classes(); ++c)
    fp.class_sizes.push_back(g->class_size(g->class_reps()[c]));
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  fp.abelian = g->is_abelian();
  return fp;
}

namespace {

// Tries to extend gens[i] -> imgs[i] (i < count) to a homomorphism of the
// subgroup generated by those gens. Runs a closure over the graph in A x B
// from scratch; on success the graph is left in `slot` and the assigned
// domain elements in `touched` (the caller must undo). On failure the state
// is already restored. With `injective`, repeated images are rejected.
bool hom_probe(const GroupTable& a, const GroupTable& b,
               const std::vector<Elt>& gens, const std::vector<Elt>& imgs,
               size_t count, bool injective, std::vector<Elt>& slot,
               std::vector<Elt>& touched, std::vector<char>& used) {
  touched.clear();
  auto assign = [&](Elt x, Elt v) -> int {
    if (slot[x] >= 0) return slot[x] == v ? 0 : -1;
    if (injective) {
      if (used[v]) return -1;
      used[v] = 1;
    }
    slot[x] = v;
    touched.push_back(x);
    return 1;
  };
  bool ok = assign(0, 0) >= 0;
  for (size_t i = 0; ok && i < count; ++i)
    if (assign(gens[i], imgs[i]) < 0) ok = false;
  for (size_t qi = 0; ok && qi < touched.size(); ++qi) {
    Elt x = touched[qi];
    for (size_t i = 0; i < count && ok; ++i) {
      Elt y = a.mul(x, gens[i]);
      Elt v = b.mul(slot[x], imgs[i]);
      if (assign(y, v) < 0) ok = false;
    }
  }
  if (!ok) {
    for (Elt x : touched) {
      if (injective) used[slot[x]] = 0;
      slot[x] = -1;
    }
    touched.clear();
  }
  return ok;
}

void hom_probe_undo(std::vector<Elt>& slot, std::vector<Elt>& touched,
                    std::vector<char>& used, bool injective) {
  for (Elt x : touched) {
    if (injective) used[slot[x]] = 0;
    slot[x] = -1;
  }
  touched.clear();
}

}  // namespace

std::optional<std::vector<Elt>> are_isomorphic(const GroupPtr& a,
                                               const GroupPtr& b) {
  const int n = a->order();
  if (n != b->order()) return std::nullopt;
  // Identical table data: the identity map works.
  if (a.get() == b.get() ||
      std::equal(a->row(0), a->row(0) + size_t(n) * n, b->row(0))) {
    std::vector<Elt> id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;

  std::vector<Elt> gens = generating_set(a);
  const int k = int(gens.size());
  std::vector<std::vector<Elt>> cands(k);
  for (int i = 0; i < k; ++i) {
    Elt ga = gens[i];
    auto prof = a->power_profile(ga);
    for (Elt x = 0; x < n; ++x)
      if (b->elt_order(x) == a->elt_order(ga) &&
          b->class_size(x) == a->class_size(ga) && b->power_profile(x) == prof)
        cands[i].push_back(x);
    if (cands[i].empty()) return std::nullopt;
  }

  std::vector<Elt> slot(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Elt> touched;
  std::vector<Elt> imgs(k);

  std::optional<std::vector<Elt>> result;
  auto rec = [&](auto&& self, int level) -> bool {
    if (!hom_probe(*a, *b, gens, imgs, level, true, slot, touched, used))
      return false;
    if (level == k) {
      std::vector<Elt> map(slot);
      hom_probe_undo(slot, touched, used, true);
      for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y)
          if (map[a->mul(x, y)] != b->mul(map[x], map[y]))
            fail(ErrorKind::Internal, "closure produced a non-homomorphism");
      result = std::move(map);
      return true;
    }
    hom_probe_undo(slot, touched, used, true);
    for (Elt c : cands[level]) {
      imgs[level] = c;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

std::vector<Elt> generating_set(const GroupPtr& g) {
  const int n = g->order();
  if (n == 1) return {};
  // One generator when cyclic.
  for (Elt x = 0; x < n; ++x)
    if (g->elt_order(x) == n) return {x};
  // Bounded two-generator scan: a maximal-order first element, every
  // possible partner.
  {
    int maxo = 0;
    Elt a = -1;
    for (Elt x = 0; x < n; ++x)
      if (g->elt_order(x) > maxo) {
        maxo = g->elt_order(x);
        a = x;
      }
    for (Elt b = 1; b < n; ++b)
      if (b != a && int(closure_elems(*g, {a, b}).size()) == n)
        return {a, b};
  }
  // Greedy ascent by index order, then pruned to inclusion-minimal.
  std::vector<Elt> gens;
  std::vector<Elt> cl = closure_elems(*g, {});
  while (int(cl.size()) < n) {
    Elt next = -1;
    for (Elt x = 0; x < n; ++x)
      if (!std::binary_search(cl.begin(), cl.end(), x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    cl = closure_elems(*g, gens);
  }
  for (size_t i = 0; i < gens.size();) {
    std::vector<Elt> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (int(closure_elems(*g, rest).size()) == n)
      gens = std::move(rest);
    else
      ++i;
  }
  return gens;
}

}  // namespace hg
