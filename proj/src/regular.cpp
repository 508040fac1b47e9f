#include "hg/regular.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "hg/aut.hpp"

namespace hg {

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

// Semiregular elements of each required exact order, ascending keys.
std::map<int, std::vector<uint32_t>> semiregular_candidates(
    const HolGroup& hol, const std::vector<int>& orders,
    SearchBudget* budget) {
  std::map<int, std::vector<uint32_t>> cand;
  for (int o : orders) cand[o];
  int max_o = orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end());
  const uint64_t total = hol.order();
  HolElement id = hol.identity();
  for (uint64_t k = 0; k < total; ++k) {
    HolElement h = hol.from_key(uint32_t(k));
    if (h == id) continue;
    int o = 1;
    HolElement p = h;
    while (p != id && o <= max_o) {
      p = hol.compose(p, h);
      ++o;
    }
    if (p != id) continue;  // order exceeds every requested one
    auto it = cand.find(o);
    if (it == cand.end()) continue;
    if (budget) budget->charge(o);
    if (hol.semiregular(h)) it->second.push_back(uint32_t(k));
  }
  if (budget) budget->charge(total / 16 + 1);
  return cand;
}

struct Orbit {
  uint32_t rep;
  // (element, witness) with witness * rep * witness^-1 == element.
  std::vector<std::pair<uint32_t, uint32_t>> members;
};

std::vector<Orbit> conj_orbits(const HolGroup& hol,
                               const std::vector<uint32_t>& cands) {
  std::vector<HolElement> gens = hol.generators();
  std::vector<uint32_t> wit_map(hol.order(), 0);
  std::vector<char> state(hol.order(), 0);  // 1 = candidate, 2 = visited
  for (uint32_t k : cands) state[k] = 1;

  std::vector<Orbit> orbits;
  for (uint32_t k : cands) {
    if (state[k] == 2) continue;
    Orbit orb;
    orb.rep = k;
    std::vector<uint32_t> queue{k};
    state[k] = 2;
    wit_map[k] = hol.key(hol.identity());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      uint32_t xk = queue[qi];
      HolElement x = hol.from_key(xk);
      HolElement wx = hol.from_key(wit_map[xk]);
      orb.members.emplace_back(xk, wit_map[xk]);
      for (const HolElement& g : gens) {
        HolElement y = hol.compose(hol.compose(g, x), hol.inverse(g));
        uint32_t yk = hol.key(y);
        if (state[yk] == 1) {
          state[yk] = 2;
          wit_map[yk] = hol.key(hol.compose(g, wx));
          queue.push_back(yk);
        } else if (state[yk] == 0) {
          fail(ErrorKind::Internal,
               "conjugation left the semiregular candidate set");
        }
      }
    }
    std::sort(orb.members.begin(), orb.members.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

// Picks the generator tuple for the homomorphism search. Prefers a
// generating pair whose image-candidate pool is smallest (first generator
// weighted by conjugacy-orbit count since only orbit representatives are
// tried). Falls back to the generic greedy generating set.
std::vector<Elt> choose_hom_generators(
    const GroupPtr& g, const std::map<int, std::vector<uint32_t>>& cand,
    const std::map<int, size_t>& orbit_count) {
  const int n = g->order();
  for (Elt x = 0; x < n; ++x)
    if (g->elt_order(x) == n) return {x};  // cyclic

  struct Ranked {
    uint64_t cost;
    int o1, o2;
  };
  std::vector<Ranked> ranked;
  for (const auto& [o1, c1] : cand)
    for (const auto& [o2, c2] : cand) {
      uint64_t reps = orbit_count.count(o1) ? orbit_count.at(o1) : c1.size();
      ranked.push_back(Ranked{reps * (c2.size() + 1), o1, o2});
    }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return std::tie(a.cost, a.o1, a.o2) < std::tie(b.cost, b.o1, b.o2);
  });

  std::vector<Elt> by_order_first;
  for (const auto& r : ranked) {
    int attempts = 0;
    for (Elt a = 1; a < n && attempts < 300; ++a) {
      if (g->elt_order(a) != r.o1) continue;
      for (Elt b = 1; b < n && attempts < 300; ++b) {
        if (g->elt_order(b) != r.o2 || b == a) continue;
        ++attempts;
        if (close_generated(g, {a, b}).size() == n) return {a, b};
      }
    }
  }
  return generating_set(g);
}

GroupPtr table_of_hol_subgroup(const HolGroup& hol,
                               const std::vector<uint32_t>& keys) {
  const int m = int(keys.size());
  std::vector<Elt> mul(size_t(m) * m);
  std::map<uint32_t, Elt> pos;
  for (int i = 0; i < m; ++i) pos[keys[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = pos.find(hol.key(
          hol.compose(hol.from_key(keys[i]), hol.from_key(keys[j]))));
      if (it == pos.end())
        fail(ErrorKind::NotASubgroup, "key set is not closed");
      mul[size_t(i) * m + j] = it->second;
    }
  return GroupTable::trusted(m, std::move(mul), "holsub");
}

}  // namespace

RegularEnumResult regular_subgroups_iso(const GroupPtr& g, const HolPtr& hol,
                                        SearchBudget* budget, int jobs) {
  const GroupPtr& n = hol->base();
  if (g->order() != n->order())
    fail(ErrorKind::SpecOutOfRange, "e(G,N) needs |G| = |N|");
  RegularEnumResult result;

  if (g->order() == 1) {
    RegularSubgroup triv;
    triv.elems = {hol->identity()};
    triv.keys = {hol->key(hol->identity())};
    triv.iso_label = g->label();
    result.subgroups.push_back(std::move(triv));
    result.hom_count = 1;
    return result;
  }

  // Needed element orders and their multiplicities in G.
  std::map<int, int> gcount;
  for (Elt x = 1; x < g->order(); ++x) ++gcount[g->elt_order(x)];
  std::vector<int> orders;
  for (const auto& [o, c] : gcount) orders.push_back(o);

  auto cand = semiregular_candidates(*hol, orders, budget);

  // A bijective cocycle matches element orders one-to-one, so each order
  // class of G must fit inside the semiregular pool of that exact order.
  for (const auto& [o, c] : gcount)
    if (size_t(c) > cand[o].size()) return result;

  std::map<int, std::vector<Orbit>> orbits_by_order;
  std::map<int, size_t> orbit_count;
  for (const auto& [o, keys] : cand) {
    orbits_by_order[o] = conj_orbits(*hol, keys);
    orbit_count[o] = orbits_by_order[o].size();
  }

  std::vector<Elt> gens = choose_hom_generators(g, cand, orbit_count);
  const int k = int(gens.size());
  const auto& first_orbits = orbits_by_order[g->elt_order(gens[0])];

  std::set<std::vector<uint32_t>> global_subs;
  uint64_t hom_total = 0;

  for (const Orbit& orb : first_orbits) {
    // All homomorphisms with theta(gens[0]) = rep.
    std::vector<std::vector<uint32_t>> images_here;
    uint64_t homs_here = 0;

    auto search_tail = [&](HolGraphProbe& probe, std::vector<HolElement>& imgs,
                           auto&& self, int level) -> void {
      if (!probe.attempt(gens, imgs, level, budget)) return;
      if (level == k) {
        if (probe.complete()) {
          std::vector<uint32_t> keys;
          keys.reserve(g->order());
          for (Elt s = 0; s < g->order(); ++s)
            keys.push_back(hol->key(probe.image(s)));
          std::sort(keys.begin(), keys.end());
          images_here.push_back(std::move(keys));
        }
        probe.undo();
        return;
      }
      probe.undo();
      for (uint32_t c : cand[g->elt_order(gens[level])]) {
        imgs[level] = hol->from_key(c);
        self(probe, imgs, self, level + 1);
      }
    };

    if (k == 2 && jobs > 1) {
      const auto& c2 = cand[g->elt_order(gens[1])];
      const int width = std::min<int>(jobs, std::max<size_t>(c2.size(), 1));
      std::vector<std::vector<std::vector<uint32_t>>> chunk_images(width);
      std::vector<std::exception_ptr> errs(width);
      std::vector<std::thread> threads;
      for (int t = 0; t < width; ++t) {
        threads.emplace_back([&, t]() {
          try {
            HolGraphProbe probe(g, *hol, true);
            std::vector<HolElement> imgs(2);
            imgs[0] = hol->from_key(orb.rep);
            for (size_t i = t; i < c2.size(); i += width) {
              imgs[1] = hol->from_key(c2[i]);
              if (probe.attempt(gens, imgs, 2, budget)) {
                if (probe.complete()) {
                  std::vector<uint32_t> keys;
                  keys.reserve(g->order());
                  for (Elt s = 0; s < g->order(); ++s)
                    keys.push_back(hol->key(probe.image(s)));
                  std::sort(keys.begin(), keys.end());
                  chunk_images[t].push_back(std::move(keys));
                }
                probe.undo();
              }
            }
          } catch (...) {
            errs[t] = std::current_exception();
          }
        });
      }
      for (auto& th : threads) th.join();
      for (auto& e : errs)
        if (e) std::rethrow_exception(e);
      for (auto& ci : chunk_images)
        for (auto& img : ci) images_here.push_back(std::move(img));
    } else {
      HolGraphProbe probe(g, *hol, true);
      std::vector<HolElement> imgs(k);
      imgs[0] = hol->from_key(orb.rep);
      search_tail(probe, imgs, search_tail, 1);
    }

    homs_here = images_here.size();
    if (homs_here == 0) continue;
    hom_total += homs_here * orb.members.size();

    // Distinct images at the representative, then their conjugates across
    // the orbit.
    std::set<std::vector<uint32_t>> rep_subs(images_here.begin(),
                                             images_here.end());
    for (const auto& [elem_key, wit_key] : orb.members) {
      HolElement w = hol->from_key(wit_key);
      HolElement wi = hol->inverse(w);
      for (const auto& sub : rep_subs) {
        std::vector<uint32_t> conj;
        conj.reserve(sub.size());
        for (uint32_t sk : sub)
          conj.push_back(
              hol->key(hol->compose(hol->compose(w, hol->from_key(sk)), wi)));
        std::sort(conj.begin(), conj.end());
        global_subs.insert(std::move(conj));
      }
      (void)elem_key;
    }
  }

  // Verify every survivor: regular, and isomorphic to G.
  for (const auto& keys : global_subs) {
    RegularSubgroup rs;
    rs.keys = keys;
    for (uint32_t kk : keys) rs.elems.push_back(hol->from_key(kk));
    if (!is_regular(*hol, rs.elems))
      fail(ErrorKind::Internal, "enumerated subgroup is not regular");
    auto table = table_of_hol_subgroup(*hol, keys);
    if (!are_isomorphic(table, g))
      fail(ErrorKind::Internal, "enumerated subgroup is not isomorphic to G");
    rs.iso_label = g->label();
    result.subgroups.push_back(std::move(rs));
  }
  result.hom_count = hom_total;
  if (budget) result.nodes = budget->used.load();
  return result;
}

RegularEnumResult regular_subgroups_iso(const GroupPtr& g, const GroupPtr& n,
                                        SearchBudget* budget, int jobs) {
  return regular_subgroups_iso(g, build_hol(n), budget, jobs);
}

CensusReport count_e(const GroupPtr& g, const GroupPtr& n,
                     SearchBudget* budget, int jobs) {
  auto t0 = Clock::now();
  CensusReport rep;
  rep.g_label = g->label();
  rep.n_label = n->label();

  auto hol = build_hol(n);
  rep.aut_n = hol->aut().order();
  rep.aut_g = automorphism_count(g);

  auto enumr = regular_subgroups_iso(g, hol, budget, jobs);
  rep.raw_count = enumr.subgroups.size();
  rep.hom_count = enumr.hom_count;
  rep.nodes = enumr.nodes;

  // The labeled count must factor exactly through |Aut(G)|.
  if (rep.hom_count != rep.aut_g * rep.raw_count)
    fail(ErrorKind::Internal,
         "labeling identity violated: " + std::to_string(rep.hom_count) +
             " homs vs |Aut(G)|=" + std::to_string(rep.aut_g) + " x " +
             std::to_string(rep.raw_count));

  uint64_t num = rep.aut_g * rep.raw_count;
  if (num % rep.aut_n != 0)
    fail(ErrorKind::NonIntegral,
         "e(G,N) = " + std::to_string(num) + "/" + std::to_string(rep.aut_n) +
             " is not an integer (enumeration bug)");
  rep.e_value = num / rep.aut_n;
  rep.wall_ms = ms_since(t0);
  return rep;
}

// ---- exhaustive regular-subgroup sweeps --------------------------------------

namespace {

// Enumerates subgroups all of whose non-identity elements lie in `cands`
// (order dividing `target`), up to size `target`. Calls sink for each
// subgroup of size exactly `target`. Element keys compose via `mul`.
template <typename Mul, typename Sink>
void semiregular_subgroup_sweep(uint32_t id_key,
                                const std::vector<uint32_t>& cands,
                                int target, Mul&& mul, SearchBudget* budget,
                                Sink&& sink) {
  std::set<uint32_t> cand_set(cands.begin(), cands.end());
  std::set<std::vector<uint32_t>> visited;
  std::vector<std::vector<uint32_t>> queue;
  queue.push_back({id_key});
  visited.insert(queue.back());

  auto closure = [&](const std::vector<uint32_t>& base,
                     uint32_t extra) -> std::vector<uint32_t> {
    std::vector<uint32_t> list(base);
    list.push_back(extra);
    std::set<uint32_t> in(list.begin(), list.end());
    if (budget) budget->charge(1);
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        for (uint32_t p : {mul(list[i], list[j]), mul(list[j], list[i])}) {
          if (in.insert(p).second) {
            if (int(in.size()) > target) return {};
            if (p != id_key && !cand_set.count(p)) return {};
            list.push_back(p);
          }
        }
      }
    if (budget) budget->charge(list.size());
    std::vector<uint32_t> out(in.begin(), in.end());
    return out;
  };

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<uint32_t> s = queue[qi];
    if (int(s.size()) == target) {
      sink(s);
      continue;
    }
    for (uint32_t c : cands) {
      if (std::binary_search(s.begin(), s.end(), c)) continue;
      auto t = closure(s, c);
      if (t.empty()) continue;
      if (target % int(t.size()) != 0) continue;  // Lagrange inside a regular subgroup
      if (visited.insert(t).second) queue.push_back(std::move(t));
    }
  }
}

}  // namespace

Classification classify_regulars(const GroupPtr& n, const CensusTier& tier,
                                 SearchBudget* budget) {
  if (tier.order != n->order())
    fail(ErrorKind::UnknownOrder, "census tier has the wrong order");
  Classification out;
  out.partial = !tier.exhaustive;

  auto hol = build_hol(n);
  const int target = n->order();

  // Semiregular elements of any order dividing |N|.
  std::vector<int> orders;
  for (int o = 2; o <= target; ++o)
    if (target % o == 0) orders.push_back(o);
  auto cand_by_order = semiregular_candidates(*hol, orders, budget);
  std::vector<uint32_t> cands;
  for (auto& [o, keys] : cand_by_order)
    cands.insert(cands.end(), keys.begin(), keys.end());
  std::sort(cands.begin(), cands.end());

  std::vector<IsoFingerprint> prints;
  for (const auto& e : tier.entries) prints.push_back(fingerprint(e.group));

  int unknown_counter = 0;
  semiregular_subgroup_sweep(
      hol->key(hol->identity()), cands, target,
      [&](uint32_t a, uint32_t b) {
        return hol->key(hol->compose(hol->from_key(a), hol->from_key(b)));
      },
      budget,
      [&](const std::vector<uint32_t>& keys) {
        std::vector<HolElement> elems;
        for (uint32_t k : keys) elems.push_back(hol->from_key(k));
        if (!is_regular(*hol, elems)) return;
        auto table = table_of_hol_subgroup(*hol, keys);
        auto fp = fingerprint(table);
        std::string label;
        for (size_t i = 0; i < tier.entries.size(); ++i) {
          if (prints[i] == fp && are_isomorphic(tier.entries[i].group, table)) {
            label = tier.entries[i].label;
            break;
          }
        }
        if (label.empty()) {
          label = "unknown#" + std::to_string(unknown_counter++);
          out.unknown = true;
        }
        ++out.counts[label];
      });
  return out;
}

uint64_t gp_direct_count(const GroupPtr& g, const GroupPtr& n,
                         SearchBudget* budget) {
  const int d = g->order();
  if (d > Caps::gp_degree_max)
    fail(ErrorKind::CapExceeded,
         "direct Greither-Pareigis search capped at degree " +
             std::to_string(Caps::gp_degree_max));
  if (d != n->order()) return 0;

  // Permutations of 0..d-1 packed 4 bits per point.
  auto pack = [d](const std::vector<int>& p) {
    uint32_t k = 0;
    for (int i = 0; i < d; ++i) k |= uint32_t(p[i]) << (4 * i);
    return k;
  };
  auto apply = [](uint32_t k, int x) { return int((k >> (4 * x)) & 15u); };
  auto compose = [&](uint32_t a, uint32_t b) {
    uint32_t r = 0;
    for (int i = 0; i < d; ++i)
      r |= uint32_t(apply(a, apply(b, i))) << (4 * i);
    return r;
  };

  std::vector<int> idp(d);
  std::iota(idp.begin(), idp.end(), 0);
  const uint32_t id_key = pack(idp);

  // Semiregular candidates: permutations whose nonzero powers are
  // fixed-point-free, of order dividing d.
  std::vector<uint32_t> cands;
  {
    std::vector<int> p(idp);
    do {
      uint32_t k = pack(p);
      if (k == id_key) continue;
      int o = 1;
      uint32_t q = k;
      bool semireg = true;
      while (q != id_key && semireg) {
        for (int x = 0; x < d; ++x)
          if (apply(q, x) == x) {
            semireg = false;
            break;
          }
        q = compose(q, k);
        ++o;
      }
      if (semireg && d % o == 0) cands.push_back(k);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(cands.begin(), cands.end());
  }

  // Left translations of G.
  std::vector<uint32_t> lambda_gens;
  for (Elt x : generating_set(g)) {
    std::vector<int> p(d);
    for (int y = 0; y < d; ++y) p[y] = g->mul(x, y);
    lambda_gens.push_back(pack(p));
  }
  auto invert = [&](uint32_t k) {
    std::vector<int> p(d);
    for (int i = 0; i < d; ++i) p[apply(k, i)] = i;
    return pack(p);
  };

  uint64_t count = 0;
  semiregular_subgroup_sweep(
      id_key, cands, d, compose, budget,
      [&](const std::vector<uint32_t>& keys) {
        // Normalized by lambda(G)?
        for (uint32_t lg : lambda_gens) {
          uint32_t lgi = invert(lg);
          for (uint32_t t : keys)
            if (!std::binary_search(keys.begin(), keys.end(),
                                    compose(compose(lg, t), lgi)))
              return;
        }
        // Isomorphic to N?
        const int m = int(keys.size());
        std::vector<Elt> mul(size_t(m) * m);
        std::map<uint32_t, Elt> pos;
        for (int i = 0; i < m; ++i) pos[keys[i]] = i;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            mul[size_t(i) * m + j] = pos.at(compose(keys[i], keys[j]));
        auto table = GroupTable::trusted(m, std::move(mul), "permsub");
        if (are_isomorphic(table, n)) ++count;
      });
  return count;
}

}  // namespace hg
