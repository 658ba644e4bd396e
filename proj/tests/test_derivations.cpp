#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "xmod/derivations.hpp"
#include "xmod/enumeration.hpp"

using namespace xmod;

namespace {

XModPtr id_xmod(unsigned o, unsigned i) { return identity_xmod(catalog_group(o, i)); }

XModPtr id_c32() { return identity_xmod(make_group(cyclic_group(32))); }

}  // namespace

TEST_CASE("trivial crossed module has one derivation and a trivial actor") {
  auto m = all_derivations(trivial_xmod());
  CHECK(m.size() == 1);
  CHECK(whitehead_group(m).group->order() == 1);
  auto a = actor(trivial_xmod());
  CHECK(a.xmod->order() == std::array<std::size_t, 2>{1, 1});
  CHECK(class_preserving_actor(trivial_xmod()).xmod->order() == std::array<std::size_t, 2>{1, 1});
}

TEST_CASE("with trivial action and boundary, derivations are homomorphisms") {
  for (auto [a, b] : {std::pair{4u, 2u}, std::pair{2u, 4u}, std::pair{6u, 2u}, std::pair{8u, 2u}})
    for (const auto& g0 : bundled_catalog().groups_of_order(a))
      for (const auto& g1 : bundled_catalog().groups_of_order(b)) {
        auto x = module_xmod(g1, g0, trivial_action(g1->order(), g0->order()));
        REQUIRE(all_derivations(x).size() == all_homs(g0, g1).size());
      }
}

TEST_CASE("derivations of id(S3) match the exhaustive oracle") {
  auto x = id_xmod(6, 1);
  auto m = all_derivations(x);
  auto brute = oracle::derivations(*x);
  REQUIRE(m.size() == brute.size());
  std::set<Derivation> a(m.elements.begin(), m.elements.end()), b(brute.begin(), brute.end());
  CHECK(a == b);
  CHECK(m.elements.front() == Derivation(6, 0));
  // units by a full pair scan
  std::size_t units = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool u = false;
    for (std::size_t j = 0; j < m.size(); ++j) u = u || (m.product(i, j) == 0 && m.product(j, i) == 0);
    units += u;
  }
  CHECK(whitehead_group(m).group->order() == units);
}

TEST_CASE("circle monoid is associative with the zero map as identity") {
  std::vector<XModPtr> xs = all_xmods(4, 4).xmods;
  xs.push_back(id_xmod(6, 1));
  xs.push_back(id_xmod(8, 3));
  xs.push_back(conjugation_xmod(catalog_group(6, 1)));
  for (const auto& x : xs) {
    auto m = all_derivations(x);
    for (const auto& d : m.elements) REQUIRE(is_derivation(*x, d));
    REQUIRE(m.elements.front() == Derivation(x->range()->order(), 0));
    for (std::size_t a = 0; a < m.size(); ++a) {
      REQUIRE(m.product(0, a) == a);
      REQUIRE(m.product(a, 0) == a);
      for (std::size_t b = 0; b < m.size(); ++b)
        for (std::size_t c = 0; c < m.size(); ++c)
          REQUIRE(m.product(m.product(a, b), c) == m.product(a, m.product(b, c)));
    }
  }
}

TEST_CASE("derivation enumeration respects the cap") {
  CHECK_THROWS_AS(all_derivations(id_c32()), Error);
  CHECK(all_derivations(id_c32(), 32).size() == 32);
}

TEST_CASE("actor is a crossed module for every [4,4] representative") {
  auto c = census(4, 4);
  for (const auto& x : c.representatives) {
    auto a = actor(x);
    REQUIRE(oracle::is_xmod(*a.xmod->source(), *a.xmod->range(), a.xmod->boundary_table(), a.xmod->action_table()));
    // action law ^{(α,β)}∂ = α ∂ β^-1, tablewise
    for (std::size_t f = 0; f < a.auts.maps.size(); ++f)
      for (std::size_t i = 0; i < a.whitehead.derivations.size(); ++i) {
        const auto& ab = a.auts.maps[f];
        const auto& d = a.whitehead.derivations[i];
        const auto& img = a.whitehead.derivations[a.xmod->act(Elem(f), Elem(i))];
        for (std::size_t g = 0; g < d.size(); ++g) REQUIRE(img[ab.beta(Elem(g))] == ab.alpha(d[g]));
      }
    auto in = inner_actor(x);
    REQUIRE(in.eta_gamma.is_valid());
    REQUIRE(is_normal_subxmod(in.image));
  }
}

TEST_CASE("inner actor of id(D8)") {
  auto x = id_xmod(8, 3);
  auto in = inner_actor(x);
  CHECK(in.eta_gamma.is_valid());
  CHECK(in.act.xmod->order() == std::array<std::size_t, 2>{8, 8});
  CHECK(in.image.order() == std::array<std::size_t, 2>{4, 4});  // D8/Z(D8)
}

TEST_CASE("class-preserving parts are subgroups") {
  for (const auto& x : {id_xmod(8, 3), id_xmod(8, 4), id_xmod(6, 1), conjugation_xmod(catalog_group(8, 3))}) {
    auto dc = class_preserving_derivations(x);
    const auto& w = whitehead_group(x);
    for (const auto& d : dc.derivations) REQUIRE(w.index.contains(d));
    // η_{g1} ∘ η_{g1'} = η_{g1 g1'}
    for (std::size_t a = 0; a < x->source()->order(); ++a)
      for (std::size_t b = 0; b < x->source()->order(); ++b)
        REQUIRE(circle(*x, inner_derivation(*x, Elem(a)), inner_derivation(*x, Elem(b))) ==
                inner_derivation(*x, x->source()->mul(Elem(a), Elem(b))));
    auto ac = class_preserving_auts(x);
    auto full = xmod_aut_group(x);
    for (const auto& f : ac.maps) REQUIRE(full.find(f).has_value());
    REQUIRE(class_preserving_actor(x).xmod->order()[0] == dc.group->order());
  }
}

TEST_CASE("|Aut_C(id D8)| equals |Inn(D8)|") {
  auto d8 = catalog_group(8, 3);
  std::set<std::vector<Elem>> inner;
  for (std::size_t g = 0; g < 8; ++g) {
    std::vector<Elem> m(8);
    for (std::size_t x = 0; x < 8; ++x) m[x] = d8->conj(Elem(g), Elem(x));
    inner.insert(m);
  }
  CHECK(class_preserving_auts(identity_xmod(d8)).maps.size() == inner.size());
  CHECK(inner.size() == 4);
}

TEST_CASE("actors of id(Kl4) and id(C32)") {
  auto kl = id_xmod(4, 2), c32 = id_c32();
  CHECK(is_isoclinic_xmod(kl, c32).has_value());
  auto ck = class_preserving_actor(kl), cc = class_preserving_actor(c32);
  CHECK(is_isomorphic_xmod(ck.xmod, cc.xmod).has_value());
  auto fk = actor(kl), fc = actor(c32, 32);
  CHECK(fk.xmod->order() == std::array<std::size_t, 2>{6, 6});
  CHECK(fc.xmod->order() == std::array<std::size_t, 2>{16, 16});
  CHECK_FALSE(is_isomorphic_xmod(fk.xmod, fc.xmod).has_value());
}
