#include <doctest.h>

#include <set>

#include "hg/catalog.hpp"
#include "hg/holomorph.hpp"

using namespace hg;

TEST_SUITE("holomorph") {

TEST_CASE("holomorph orders") {
  CHECK(build_hol(cyclic(3))->order() == 6);
  CHECK(build_hol(cyclic(4))->order() == 8);
  CHECK(build_hol(abelian({2, 2}))->order() == 24);
  CHECK(build_hol(cyclic(15))->order() == 120);
}

TEST_CASE("Hol(C4) is dihedral") {
  auto hol = build_hol(cyclic(4));
  auto t = hol_to_table(*hol);
  CHECK(!t->is_abelian());
  CHECK(are_isomorphic(t, dihedral(4)).has_value());
}

TEST_CASE("composition laws") {
  auto hol = build_hol(dihedral(3));
  HolElement id = hol->identity();
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    HolElement h = hol->from_key(uint32_t(rng.below(hol->order())));
    CHECK(hol->compose(id, h) == h);
    CHECK(hol->compose(h, id) == h);
    CHECK(hol->compose(h, hol->inverse(h)) == id);
    CHECK(hol->compose(hol->inverse(h), h) == id);
  }
  // rho is a homomorphism: (eta, id)(eta', id) = (eta eta', id).
  auto n = hol->base();
  for (Elt a = 0; a < n->order(); ++a)
    for (Elt b = 0; b < n->order(); ++b)
      CHECK(hol->compose(hol->rho(a), hol->rho(b)) == hol->rho(n->mul(a, b)));
}

TEST_CASE("action laws") {
  auto hol = build_hol(dihedral(3));
  auto n = hol->base();
  for (Elt x = 0; x < 6; ++x) CHECK(hol->act(hol->identity(), x) == x);
  // act(rho(eta), x) = x * eta^-1
  for (Elt eta = 0; eta < 6; ++eta)
    for (Elt x = 0; x < 6; ++x)
      CHECK(hol->act(hol->rho(eta), x) == n->mul(x, n->inv(eta)));
  // act(compose(a,b), x) = act(a, act(b, x)) on random triples
  SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    HolElement a = hol->from_key(uint32_t(rng.below(hol->order())));
    HolElement b = hol->from_key(uint32_t(rng.below(hol->order())));
    Elt x = Elt(rng.below(6));
    CHECK(hol->act(hol->compose(a, b), x) == hol->act(a, hol->act(b, x)));
  }
}

TEST_CASE("lambda and rho embeddings") {
  auto ab = build_hol(cyclic(6));
  auto lam = canonical_keys(*ab, ab->lambda_image());
  auto rho = canonical_keys(*ab, ab->rho_image());
  CHECK(lam == rho);  // abelian: the embeddings coincide

  auto hol = build_hol(dihedral(3));
  auto n = hol->base();
  auto l = hol->lambda_image();
  auto r = hol->rho_image();
  CHECK(canonical_keys(*hol, l) != canonical_keys(*hol, r));
  // lambda is a homomorphism and acts by left translation.
  for (Elt a = 0; a < 6; ++a) {
    for (Elt b = 0; b < 6; ++b)
      CHECK(hol->compose(hol->lambda(a), hol->lambda(b)) ==
            hol->lambda(n->mul(a, b)));
    CHECK(hol->act(hol->lambda(a), 0) == a);
    CHECK(hol->act(hol->rho(a), 0) == n->inv(a));
    for (Elt x = 0; x < 6; ++x)
      CHECK(hol->act(hol->lambda(a), x) == n->mul(a, x));
  }
  // The images intersect in the identity only (trivial center).
  auto lkeys = canonical_keys(*hol, l);
  auto rkeys = canonical_keys(*hol, r);
  std::set<uint32_t> lk(lkeys.begin(), lkeys.end());
  int common = 0;
  for (uint32_t k : rkeys) common += lk.count(k);
  CHECK(common == 1);
  // lambda and rho centralize each other.
  for (Elt a = 0; a < 6; ++a)
    for (Elt b = 0; b < 6; ++b)
      CHECK(hol->compose(hol->lambda(a), hol->rho(b)) ==
            hol->compose(hol->rho(b), hol->lambda(a)));
}

TEST_CASE("regularity") {
  auto hol = build_hol(dihedral(3));
  CHECK(is_regular(*hol, hol->rho_image()));
  CHECK(is_regular(*hol, hol->lambda_image()));

  // The point stabilizer {(0, alpha)} is closed but not regular.
  std::vector<HolElement> stab;
  for (int a = 0; a < hol->aut().order(); ++a)
    stab.push_back(HolElement{0, a});
  CHECK(!is_regular(*hol, stab));

  // A non-closed set errors.
  std::vector<HolElement> bad{hol->identity(), hol->rho(1)};
  bool threw = false;
  try {
    is_regular(*hol, bad);
  } catch (const Error&) {
    threw = true;
  }
  CHECK(threw);
}

TEST_CASE("order-4 subgroups of Hol(C4)") {
  auto hol = build_hol(cyclic(4));
  auto t = hol_to_table(*hol);
  int klein = 0, klein_regular = 0, order4 = 0;
  for (const auto& s : all_subgroups(t)) {
    if (s.size() != 4) continue;
    ++order4;
    std::vector<HolElement> elems;
    for (Elt i : s.elements) elems.push_back(hol->from_key(uint32_t(i)));
    bool is_klein = true;
    for (Elt i : s.elements)
      if (t->elt_order(i) == 4) is_klein = false;
    if (is_klein) {
      ++klein;
      if (is_regular(*hol, elems)) ++klein_regular;
    }
  }
  CHECK(order4 == 3);
  CHECK(klein == 2);
  CHECK(klein_regular == 1);  // the unique fixed-point-free Klein subgroup
}

TEST_CASE("faithful action on small holomorphs") {
  for (auto& n : {cyclic(6), dihedral(3), abelian({2, 2})}) {
    auto hol = build_hol(n);
    for (uint32_t k = 0; k < hol->order(); ++k) {
      HolElement h = hol->from_key(k);
      if (h == hol->identity()) continue;
      bool moves = false;
      for (Elt x = 0; x < n->order() && !moves; ++x)
        if (hol->act(h, x) != x) moves = true;
      CHECK(moves);
    }
  }
}

TEST_CASE("semiregular detection") {
  auto hol = build_hol(cyclic(4));
  for (Elt eta = 1; eta < 4; ++eta)
    CHECK(hol->semiregular(hol->rho(eta)));  // translations are fixed-point-free
  // (0, inversion) fixes 0, hence not semiregular.
  int inv_idx = 1 - hol->aut().identity();
  CHECK(!hol->semiregular(HolElement{0, inv_idx}));
}

}  // TEST_SUITE
