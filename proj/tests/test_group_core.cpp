#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "xmod/catalog.hpp"
#include "xmod/isoclinism.hpp"

using namespace xmod;

namespace {

GroupPtr cyclic(std::size_t n) { return make_group(cyclic_group(n)); }

std::size_t automorphism_closure_size(const AutomorphismGroup& a) {
  return detail::automorphism_closure(a, automorphism_generators(a)).size();
}

}  // namespace

TEST_CASE("catalog covers orders 1..24 with the standard group counts") {
  const unsigned expected[25] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  const auto& cat = bundled_catalog();
  std::size_t total = 0;
  for (unsigned n = 1; n <= 24; ++n) {
    CHECK(cat.groups_of_order(n).size() == expected[n]);
    total += expected[n];
  }
  CHECK(cat.entries().size() == total);
  CHECK_FALSE(cat.find_duplicate_isomorphism_type().has_value());
}

TEST_CASE("catalog groups satisfy the group axioms exhaustively") {
  for (const auto& e : bundled_catalog().entries()) {
    if (e.id.order > 18) continue;
    const auto& g = *bundled_catalog().group(e.id);
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a) {
      REQUIRE(g.mul(0, Elem(a)) == a);
      REQUIRE(g.mul(Elem(a), 0) == a);
      REQUIRE(g.mul(Elem(a), g.inv(Elem(a))) == 0);
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          REQUIRE(g.mul(g.mul(Elem(a), Elem(b)), Elem(c)) == g.mul(Elem(a), g.mul(Elem(b), Elem(c))));
    }
  }
}

TEST_CASE("catalog names match the expected isomorphism types") {
  auto g = [](unsigned o, unsigned i) { return catalog_group(o, i); };
  CHECK(g(8, 3)->name() == "D8");
  CHECK(g(8, 4)->name() == "Q8");
  CHECK(g(4, 2)->name() == "C2 x C2");
  CHECK(g(8, 3)->catalog_id()->bracket() == "[8,3]");
  CHECK(center(g(8, 3)).size() == 2);
  CHECK(g(12, 3)->name() == "A4");
  CHECK(derived_subgroup(g(12, 3)).size() == 4);
}

TEST_CASE("catalog text round-trips and rejects malformed input") {
  const auto& cat = bundled_catalog();
  std::string text = format_catalog(cat.entries());
  GroupCatalog again(text);
  CHECK(format_catalog(again.entries()) == text);
  CHECK(again.version_stamp() == cat.version_stamp());
  CHECK_THROWS_AS(GroupCatalog("not a catalog\n"), Error);
  CHECK_THROWS_AS(GroupCatalog("xmod-catalog 99\n"), Error);
  CHECK_THROWS_AS(GroupCatalog("xmod-catalog 1\n4 1 C4 | (1,2,3)\n"), Error);  // wrong order
  CHECK_THROWS_AS(parse_catalog_id("8-3"), Error);
  CHECK(parse_catalog_id("18:4").str() == "18:4");
}

TEST_CASE("homomorphism counts agree with the brute-force oracle") {
  auto c2 = cyclic(2), c3 = cyclic(3);
  auto kl = catalog_group(4, 2);
  CHECK(all_homs(c2, c2).size() == 2);
  CHECK(all_homs(c2, c3).size() == 1);
  CHECK(all_homs(kl, c2).size() == 4);
  CHECK(oracle::homs(*kl, *c2).size() == 4);
  for (unsigned a = 1; a <= 6; ++a)
    for (const auto& g : bundled_catalog().groups_of_order(a))
      for (unsigned b = 1; b <= 4; ++b)
        for (const auto& h : bundled_catalog().groups_of_order(b)) {
          auto homs = all_homs(g, h);
          for (const auto& f : homs) REQUIRE(f.is_homomorphism());
          REQUIRE(homs.size() == oracle::homs(*g, *h).size());
        }
}

TEST_CASE("isomorphism search") {
  auto q8 = catalog_group(8, 4), d8 = catalog_group(8, 3), kl = catalog_group(4, 2);
  CHECK(all_isos(q8, d8).empty());
  CHECK(brute::all_isos(q8, d8).empty());
  CHECK_FALSE(are_isomorphic(q8, d8));
  CHECK(all_isos(cyclic(32), kl).empty());
  auto id = all_isos(d8, d8);
  CHECK(std::find(id.begin(), id.end(), GroupHom::identity(d8)) != id.end());
  // relabelled copy is found
  auto s3 = catalog_group(6, 1);
  std::vector<Elem> perm{0, 3, 5, 1, 2, 4};
  std::vector<Elem> inv(6);
  for (Elem i = 0; i < 6; ++i) inv[perm[i]] = i;
  std::vector<Elem> t(36);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) t[perm[a] * 6 + perm[b]] = perm[s3->mul(a, b)];
  CHECK(are_isomorphic(s3, make_group(FiniteGroup(6, t))));
}

TEST_CASE("isomorphism existence is symmetric across catalog pairs") {
  const auto& cat = bundled_catalog();
  for (unsigned n = 1; n <= 18; ++n) {
    auto gs = cat.groups_of_order(n);
    for (const auto& a : gs)
      for (const auto& b : gs) REQUIRE(all_isos(a, b).empty() == all_isos(b, a).empty());
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(trivial_group()).group->order() == 1);
  CHECK(automorphism_group(catalog_group(4, 2)).group->order() == 6);
  CHECK(automorphism_group(cyclic(32)).group->order() == 16);
  for (unsigned n = 1; n <= 10; ++n)
    for (const auto& g : bundled_catalog().groups_of_order(n)) {
      auto aut = automorphism_group(g);
      REQUIRE(aut.group->order() == oracle::automorphisms(*g).size());
      // composition convention (f o g)(x) = f(g(x))
      for (std::size_t i = 0; i < aut.maps.size(); ++i)
        for (std::size_t j = 0; j < aut.maps.size(); ++j) {
          auto fg = aut.maps[aut.group->mul(Elem(i), Elem(j))];
          for (std::size_t x = 0; x < g->order(); ++x) REQUIRE(fg(Elem(x)) == aut.maps[i](aut.maps[j](Elem(x))));
        }
    }
}

TEST_CASE("automorphisms without a table") {
  GroupPtr e16;
  for (const auto& g : bundled_catalog().groups_of_order(16)) {
    const auto& o = g->elem_orders();
    if (*std::max_element(o.begin(), o.end()) == 2) e16 = g;
  }
  REQUIRE(e16);
  CHECK_THROWS_AS(automorphism_group(e16), Error);
  auto bare = automorphism_maps(e16);
  CHECK(bare.maps.size() == 20160);  // |GL(4,2)|
  CHECK(bare.group == nullptr);
  auto gens = automorphism_generators(bare);
  CHECK(gens.size() <= 8);  // greedy, not minimal
  CHECK(detail::automorphism_closure(bare, gens).size() == 20160);
  std::size_t involutions = 0;
  for_each_action_hom(catalog_group(2, 1), bare, [&](const std::vector<Elem>&) {
    ++involutions;
    return true;
  });
  CHECK(involutions == 316);  // identity and the 315 involutions of GL(4,2)
  // both search paths give the same homomorphisms into Aut(G1)
  for (unsigned n : {4u, 6u, 8u})
    for (const auto& g1 : bundled_catalog().groups_of_order(n)) {
      auto tabled = automorphism_group(g1);
      auto plain = automorphism_maps(g1);
      REQUIRE(plain.maps.size() == tabled.maps.size());
      REQUIRE(automorphism_closure_size(plain) == tabled.maps.size());
      for (unsigned m : {1u, 2u, 4u, 6u, 8u})
        for (const auto& g0 : bundled_catalog().groups_of_order(m)) {
          std::set<std::vector<std::vector<Elem>>> a, b;
          for_each_action_hom(g0, tabled, [&](const std::vector<Elem>& phi) {
            std::vector<std::vector<Elem>> maps;
            for (Elem i : phi) maps.push_back(tabled.maps[i].image_of);
            a.insert(maps);
            return true;
          });
          for_each_action_hom(g0, plain, [&](const std::vector<Elem>& phi) {
            std::vector<std::vector<Elem>> maps;
            for (Elem i : phi) maps.push_back(plain.maps[i].image_of);
            b.insert(maps);
            return true;
          });
          REQUIRE(a == b);
          REQUIRE(a.size() == all_homs(g0, tabled.group).size());
        }
    }
}

TEST_CASE("group invariants") {
  auto d8 = catalog_group(8, 3);
  CHECK(group_rank_order(d8) == 8);
  CHECK(render_log2(group_rank_order(d8), true) == "3");
  CHECK(group_middle_length_order(d8) == 1);
  CHECK(group_nilpotency_class(d8) == 2u);
  for (unsigned i = 1; i <= 5; ++i) {
    auto g = catalog_group(18, i);
    unsigned oc = oracle::group_class(*g);
    auto c = group_nilpotency_class(g);
    REQUIRE(c.value_or(0) == oc);
    if (g->is_abelian()) {
      CHECK(group_rank_order(g) == 1);
      CHECK(group_middle_length_order(g) == 1);
      CHECK(c == 1u);
    }
  }
  auto g181 = catalog_group(18, 1);
  CHECK(render_log2(group_rank_order(g181), false) == "4.17");
  CHECK(render_log2(group_middle_length_order(g181), false) == "3.17");
  CHECK_FALSE(group_nilpotency_class(g181).has_value());
  CHECK(group_lower_central_series(g181).back().size() == 9);
  for (unsigned n = 1; n <= 16; ++n)
    for (const auto& g : bundled_catalog().groups_of_order(n))
      REQUIRE(group_nilpotency_class(g).value_or(0) == oracle::group_class(*g));
}

TEST_CASE("group isoclinism") {
  auto q8 = catalog_group(8, 4), d8 = catalog_group(8, 3);
  auto w = is_isoclinic_group(q8, d8);
  REQUIRE(w.has_value());
  CHECK(validate_group_isoclinism(group_pairing(q8), group_pairing(d8), *w));
  CHECK(is_isoclinic_group(cyclic(32), catalog_group(4, 2)).has_value());
  CHECK(is_isoclinic_group(catalog_group(12, 2), catalog_group(6, 2)).has_value());
  CHECK_FALSE(is_isoclinic_group(d8, catalog_group(6, 1)).has_value());
  CHECK(is_isoclinic_group(q8, d8, true).has_value());
}

TEST_CASE("group families for orders 8 and 18") {
  auto sizes = [](unsigned n) {
    auto fams = group_family_partition(bundled_catalog().groups_of_order(n));
    std::vector<std::size_t> s;
    for (const auto& f : fams) s.push_back(f.size());
    return s;
  };
  CHECK(sizes(8) == std::vector<std::size_t>{3, 2});
  CHECK(sizes(18) == std::vector<std::size_t>{1, 2, 1, 1});
  CHECK(sizes(1) == std::vector<std::size_t>{1});
}

TEST_CASE("group isoclinism is an equivalence relation on small orders") {
  for (unsigned n = 1; n <= 18; ++n) {
    auto gs = bundled_catalog().groups_of_order(n);
    auto fams = group_family_partition(gs);
    std::vector<std::size_t> fam_of(gs.size());
    for (std::size_t f = 0; f < fams.size(); ++f)
      for (std::size_t i : fams[f]) fam_of[i] = f;
    for (std::size_t a = 0; a < gs.size(); ++a)
      for (std::size_t b = 0; b < gs.size(); ++b) {
        auto w = is_isoclinic_group(gs[a], gs[b]);
        REQUIRE(w.has_value() == (fam_of[a] == fam_of[b]));
        if (w) REQUIRE(validate_group_isoclinism(group_pairing(gs[a]), group_pairing(gs[b]), *w));
      }
    for (const auto& f : fams) {
      const auto lead = gs[f.front()];
      for (std::size_t i : f) {
        REQUIRE(group_rank_order(gs[i]) == group_rank_order(lead));
        REQUIRE(group_middle_length_order(gs[i]) == group_middle_length_order(lead));
        REQUIRE(group_nilpotency_class(gs[i]) == group_nilpotency_class(lead));
      }
    }
  }
}

TEST_CASE("group family partition is invariant under input permutation") {
  auto gs = bundled_catalog().groups_of_order(16);
  auto canon = [&](const std::vector<GroupPtr>& list) {
    std::set<std::set<std::string>> out;
    for (const auto& f : group_family_partition(list)) {
      std::set<std::string> s;
      for (std::size_t i : f) s.insert(list[i]->catalog_id()->str());
      out.insert(s);
    }
    return out;
  };
  auto base = canon(gs);
  std::mt19937 rng(7);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(gs.begin(), gs.end(), rng);
    CHECK(canon(gs) == base);
  }
}
