#include <doctest.h>

#include <algorithm>
#include <set>

#include "hg/catalog.hpp"
#include "hg/group.hpp"

using namespace hg;

namespace {

// Independent closure oracle: plain fixpoint iteration over all pairs.
std::set<Elt> naive_closure(const GroupPtr& g, std::set<Elt> s) {
  s.insert(0);
  for (;;) {
    std::set<Elt> next(s);
    for (Elt x : s)
      for (Elt y : s) next.insert(g->mul(x, y));
    if (next == s) return s;
    s.swap(next);
  }
}

// Independent subgroup enumeration: closures of all generator sets of size
// at most two. Complete whenever every subgroup is 2-generated.
std::set<std::set<Elt>> two_generated_subgroups(const GroupPtr& g) {
  std::set<std::set<Elt>> subs;
  subs.insert(naive_closure(g, {}));
  for (Elt x = 0; x < g->order(); ++x) {
    subs.insert(naive_closure(g, {x}));
    for (Elt y = x + 1; y < g->order(); ++y)
      subs.insert(naive_closure(g, {x, y}));
  }
  return subs;
}

std::vector<Elt> cyclic_mul(int n) {
  std::vector<Elt> mul(size_t(n) * n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) mul[size_t(x) * n + y] = (x + y) % n;
  return mul;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("trivial table") {
  auto g = GroupTable::build(1, {0}, "triv");
  CHECK(g->order() == 1);
  CHECK(g->mul(0, 0) == 0);
  CHECK(g->elt_order(0) == 1);
}

TEST_CASE("cyclic of order three") {
  auto g = GroupTable::build(3, cyclic_mul(3), "Z3");
  std::vector<int> ords{g->elt_order(0), g->elt_order(1), g->elt_order(2)};
  std::sort(ords.begin(), ords.end());
  CHECK(ords == std::vector<int>{1, 3, 3});
  CHECK(g->is_abelian());
}

TEST_CASE("perturbed table is rejected") {
  auto mul = cyclic_mul(4);
  mul[1 * 4 + 2] = (mul[1 * 4 + 2] + 1) % 4;  // break one entry
  CHECK_THROWS_AS(GroupTable::build(4, mul, "bad"), Error);
}

TEST_CASE("identity is relocated to index 0") {
  // Z/3 written with identity at index 2 (relabel 0<->2 of the usual table).
  // perm p: 0->2, 2->0; table t[x][y] = p(cyclic[p(x)][p(y)])
  std::vector<Elt> mul(9);
  auto p = [](Elt x) { return x == 0 ? 2 : (x == 2 ? 0 : x); };
  auto c = cyclic_mul(3);
  for (Elt x = 0; x < 3; ++x)
    for (Elt y = 0; y < 3; ++y) mul[p(x) * 3 + p(y)] = p(c[x * 3 + y]);
  auto g = GroupTable::build(3, mul, "relabeled");
  for (Elt x = 0; x < 3; ++x) {
    CHECK(g->mul(0, x) == x);
    CHECK(g->mul(x, 0) == x);
  }
}

TEST_CASE("close_generated basics") {
  auto s3 = dihedral(3);
  // a 3-cycle: the rotation element 1 has order 3
  CHECK(s3->elt_order(1) == 3);
  CHECK(close_generated(s3, {1}).size() == 3);
  CHECK(close_generated(s3, {}).elements == std::vector<Elt>{0});

  auto a5 = alt(5);
  // Find a 5-element and an involution that generate; closure must be 60.
  bool found = false;
  for (Elt x = 0; x < 60 && !found; ++x) {
    if (a5->elt_order(x) != 5) continue;
    for (Elt y = 0; y < 60 && !found; ++y) {
      if (a5->elt_order(y) != 2) continue;
      if (close_generated(a5, {x, y}).size() == 60) found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("closure of closure is closure") {
  auto g = dihedral(6);
  auto s = close_generated(g, {3, 7});
  auto s2 = close_generated(g, s.elements);
  CHECK(s.elements == s2.elements);
  CHECK(is_subgroup_closed(g, s.elements));
}

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(cyclic(6)).size() == 4);
  CHECK(all_subgroups(dihedral(3)).size() == 6);
}

TEST_CASE("A5 has 59 subgroups") {
  auto a5 = alt(5);
  auto subs = all_subgroups(a5);
  CHECK(subs.size() == 59);
  // Independent oracle: every subgroup of A5 is at most 2-generated, so the
  // two-generator sweep enumerates them all.
  auto oracle = two_generated_subgroups(a5);
  CHECK(oracle.size() == 59);
  std::set<std::set<Elt>> got;
  for (const auto& s : subs)
    got.insert(std::set<Elt>(s.elements.begin(), s.elements.end()));
  CHECK(got == oracle);
}

TEST_CASE("all_subgroups cap") {
  CHECK_THROWS_AS(all_subgroups(cyclic(60), 30), Error);
}

TEST_CASE("center") {
  auto c8 = cyclic(8);
  CHECK(center(c8).size() == 8);
  CHECK(center(dihedral(3)).elements == std::vector<Elt>{0});
  CHECK(center(sl2(5)).size() == 2);
}

TEST_CASE("derived series") {
  auto a5 = alt(5);
  auto ds = derived_series(a5);
  CHECK(ds.series.size() == 1);
  CHECK(ds.perfect);
  CHECK(!ds.solvable);

  auto s3 = dihedral(3);
  auto ds3 = derived_series(s3);
  REQUIRE(ds3.series.size() == 3);
  CHECK(ds3.series[0].size() == 6);
  CHECK(ds3.series[1].size() == 3);
  CHECK(ds3.series[2].size() == 1);
  CHECK(ds3.solvable);
  CHECK(!ds3.perfect);

  auto ds4 = derived_series(cyclic(4));
  CHECK(ds4.series.size() == 2);
  CHECK(ds4.solvable);
  CHECK(!ds4.perfect);
}

TEST_CASE("quotients") {
  auto g = sl2(5);
  auto q = quotient(g, center(g));
  CHECK(q.table->order() == 60);
  CHECK(are_isomorphic(q.table, alt(5)));
  // Projection respects multiplication (spot check on top of the built-in
  // verification).
  for (Elt x = 0; x < 20; ++x)
    for (Elt y = 0; y < 20; ++y)
      CHECK(q.proj[g->mul(x, y)] == q.table->mul(q.proj[x], q.proj[y]));

  auto c6 = cyclic(6);
  auto qq = quotient(c6, close_generated(c6, {3}));
  CHECK(are_isomorphic(qq.table, cyclic(3)));

  auto whole = quotient(c6, close_generated(c6, {}));
  CHECK(are_isomorphic(whole.table, c6));

  // Non-normal subgroup is rejected with a witness.
  auto s3 = dihedral(3);
  auto refl = close_generated(s3, {3});
  CHECK(refl.size() == 2);
  CHECK_THROWS_AS(quotient(s3, refl), Error);
}

TEST_CASE("quotients of perfect groups are perfect") {
  for (auto& g : {sl2(5), alt(5)}) {
    for (const auto& k : normal_subgroups(g)) {
      auto q = quotient(g, k);
      CHECK(derived_series(q.table).perfect);
    }
  }
}

TEST_CASE("isomorphism testing") {
  CHECK(!are_isomorphic(cyclic(6), dihedral(3)));

  // Two independently built copies of D4: the constructor table and a
  // relabeled version of it.
  auto d4 = dihedral(4);
  std::vector<Elt> perm{0, 3, 1, 2, 6, 5, 7, 4};
  std::vector<Elt> mul(64);
  for (Elt x = 0; x < 8; ++x)
    for (Elt y = 0; y < 8; ++y)
      mul[perm[x] * 8 + perm[y]] = perm[d4->mul(x, y)];
  auto d4b = GroupTable::build(8, mul, "D4b");
  auto iso = are_isomorphic(d4, d4b);
  REQUIRE(iso.has_value());
  for (Elt x = 0; x < 8; ++x)
    for (Elt y = 0; y < 8; ++y)
      CHECK((*iso)[d4->mul(x, y)] == d4b->mul((*iso)[x], (*iso)[y]));
  CHECK(are_isomorphic(d4b, d4).has_value());

  CHECK(are_isomorphic(alt(5), psl2(5)).has_value());
  CHECK(!are_isomorphic(dihedral(4), cyclic(8)));
}

TEST_CASE("generating sets") {
  auto gens = generating_set(alt(5));
  CHECK(gens.size() == 2);
  CHECK(close_generated(alt(5), gens).size() == 60);

  auto e8 = abelian({2, 2, 2});
  auto g8 = generating_set(e8);
  CHECK(g8.size() == 3);
  CHECK(close_generated(e8, g8).size() == 8);

  CHECK(generating_set(cyclic(1)).empty());
}

TEST_CASE("fingerprints distinguish the order-8 groups") {
  auto q8tier = bundled_census(8);
  REQUIRE(q8tier.entries.size() == 5);
  std::set<std::vector<int>> oms;
  for (const auto& e : q8tier.entries)
    oms.insert(e.group->order_multiset());
  CHECK(oms.size() == 5);  // pairwise distinct already on order multisets
}

TEST_CASE("table validation invariants on random triples") {
  auto g = sl2(3);
  SplitMix64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    Elt x = Elt(rng.below(24)), y = Elt(rng.below(24)), z = Elt(rng.below(24));
    CHECK(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
  }
  for (Elt x = 0; x < 24; ++x) {
    CHECK(g->mul(x, g->inv(x)) == 0);
    CHECK(g->mul(0, x) == x);
  }
}

}  // TEST_SUITE
