#include <doctest.h>

#include "hg/aut.hpp"
#include "hg/catalog.hpp"

using namespace hg;

TEST_SUITE("aut") {

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(cyclic(15)).order() == 8);
  CHECK(automorphism_group(abelian({2, 2})).order() == 6);
  CHECK(automorphism_group(cyclic(4)).order() == 2);
  CHECK(automorphism_group(dihedral(3)).order() == 6);
}

TEST_CASE("Aut(SL2(5)) has order 120 with inner index 2") {
  auto aut = automorphism_group(sl2(5));
  CHECK(aut.order() == 120);
  CHECK(aut.inner().size() == 60);
}

TEST_CASE("every stored automorphism is a homomorphism") {
  for (auto& g : {dihedral(4), abelian({2, 4}), alt(4)}) {
    auto aut = automorphism_group(g);
    for (int i = 0; i < aut.order(); ++i)
      for (Elt x = 0; x < g->order(); ++x)
        for (Elt y = 0; y < g->order(); ++y)
          CHECK(aut.apply(i, g->mul(x, y)) ==
                g->mul(aut.apply(i, x), aut.apply(i, y)));
  }
}

TEST_CASE("composition and inverse tables are consistent") {
  auto aut = automorphism_group(dihedral(4));
  for (int i = 0; i < aut.order(); ++i) {
    CHECK(aut.compose(i, aut.invert(i)) == aut.identity());
    for (int j = 0; j < aut.order(); ++j) {
      int c = aut.compose(i, j);
      for (Elt x = 0; x < 8; ++x)
        CHECK(aut.apply(c, x) == aut.apply(i, aut.apply(j, x)));
    }
  }
}

TEST_CASE("conjugation maps") {
  auto s3 = dihedral(3);
  CHECK(conj_map(s3, 0).img == std::vector<Elt>{0, 1, 2, 3, 4, 5});
  auto c = conj_map(s3, 3);  // a reflection
  bool moved = false;
  for (Elt x = 0; x < 6; ++x) {
    CHECK(c.img[c.img[x]] == x);  // conj by an involution squares to id
    if (c.img[x] != x) moved = true;
  }
  CHECK(moved);

  auto ab = cyclic(6);
  for (Elt e = 0; e < 6; ++e)
    for (Elt x = 0; x < 6; ++x) CHECK(conj_map(ab, e).img[x] == x);
}

TEST_CASE("characteristic subgroups") {
  auto a5 = alt(5);
  auto cs = characteristic_subgroups(a5);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].first.size() == 1);
  CHECK(cs[0].second);  // trivial subgroup is the maximal proper one
  CHECK(cs[1].first.size() == 60);

  auto c4 = cyclic(4);
  auto cs4 = characteristic_subgroups(c4);
  REQUIRE(cs4.size() == 3);
  CHECK(cs4[1].first.size() == 2);
  CHECK(cs4[1].second);

  auto g = sl2(5);
  auto csg = characteristic_subgroups(g);
  REQUIRE(csg.size() == 3);
  CHECK(csg[1].first.size() == 2);
  CHECK(csg[1].second);  // the center is the maximal proper one
}

TEST_CASE("center and derived subgroup are characteristic") {
  for (int order : {6, 8}) {
    for (const auto& e : bundled_census(order).entries) {
      auto aut = automorphism_group(e.group);
      CHECK(is_characteristic(center(e.group), aut));
      CHECK(is_characteristic(derived_subgroup(e.group), aut));
    }
  }
}

TEST_CASE("restriction to characteristic subgroups") {
  auto c4 = cyclic(4);
  auto aut = automorphism_group(c4);
  auto sub = subgroup_table(close_generated(c4, {2}));  // the C2 inside

  // Identity restricts to the identity.
  auto rid = restrict_to(aut.at(aut.identity()), sub);
  CHECK(rid.img == std::vector<Elt>{0, 1});

  // Inversion fixes the involution, so it also restricts to the identity.
  int invidx = -1;
  for (int i = 0; i < aut.order(); ++i)
    if (i != aut.identity()) invidx = i;
  REQUIRE(invidx >= 0);
  auto rinv = restrict_to(aut.at(invidx), sub);
  CHECK(rinv.img == std::vector<Elt>{0, 1});

  // An automorphism that does not preserve a subgroup is rejected.
  auto v4 = abelian({2, 2});
  auto av4 = automorphism_group(v4);
  auto c2 = subgroup_table(close_generated(v4, {1}));
  bool threw = false;
  for (int i = 0; i < av4.order(); ++i) {
    try {
      restrict_to(av4.at(i), c2);
    } catch (const Error& e) {
      threw = true;
    }
  }
  CHECK(threw);  // some automorphism moves the chosen C2
}

TEST_CASE("characteristically simple decomposition") {
  auto d = char_simple_decompose(abelian({2, 2}));
  REQUIRE(d.has_value());
  CHECK(d->simple_factor->order() == 2);
  CHECK(d->multiplicity == 2);

  auto a5 = char_simple_decompose(alt(5));
  REQUIRE(a5.has_value());
  CHECK(a5->simple_factor->order() == 60);
  CHECK(a5->multiplicity == 1);

  CHECK(!char_simple_decompose(abelian({2, 4})).has_value());
  CHECK(!char_simple_decompose(cyclic(6)).has_value());
  CHECK(!char_simple_decompose(product(alt(5), cyclic(2))).has_value());
  CHECK(!char_simple_decompose(dihedral(3)).has_value());
}

TEST_CASE("inner automorphism count matches |G|/|Z|") {
  for (auto& g : {dihedral(4), sl2(3), alt(4)}) {
    auto aut = automorphism_group(g);
    CHECK(int(aut.inner().size()) * center(g).size() == g->order());
  }
}

}  // TEST_SUITE

TEST_SUITE("slow") {

TEST_CASE("A5 x A5 decomposes as (A5, 2)") {
  auto q = product(alt(5), alt(5));
  auto d = char_simple_decompose(q);
  REQUIRE(d.has_value());
  CHECK(d->simple_factor->order() == 60);
  CHECK(d->multiplicity == 2);
}

TEST_CASE("Aut(A5^2) order is 2 |Aut(A5)|^2") {
  auto q = product(alt(5), alt(5));
  CHECK(automorphism_count(q) == uint64_t(2) * 120 * 120);
}

}  // TEST_SUITE
