#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "xmod/enumeration.hpp"

using namespace xmod;

namespace {

const std::vector<XModPtr>& raw44() {
  static const auto raw = all_xmods(4, 4).xmods;
  return raw;
}

bool oracle_ok(const CrossedModule& x) {
  return oracle::is_xmod(*x.source(), *x.range(), x.boundary_table(), x.action_table());
}

}  // namespace

TEST_CASE("standard constructions are crossed modules") {
  CHECK(oracle_ok(*trivial_xmod()));
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& g : bundled_catalog().groups_of_order(n)) {
      REQUIRE(oracle_ok(*identity_xmod(g)));
      REQUIRE(oracle_ok(*conjugation_xmod(g)));
      REQUIRE(oracle_ok(*inclusion_xmod(g, center(g))));
      REQUIRE(oracle_ok(*inclusion_xmod(g, derived_subgroup(g))));
    }
  auto c2 = catalog_group(2, 1), kl = catalog_group(4, 2);
  auto m = module_xmod(kl, c2, std::vector<Elem>{0, 1, 2, 3, 0, 2, 1, 3});
  CHECK(oracle_ok(*m));
  CHECK_THROWS_AS(module_xmod(catalog_group(6, 1), c2, trivial_action(6, 2)), Error);
  auto s3 = catalog_group(6, 1);
  Elem t = 1;
  while (s3->elem_order(t) != 2) ++t;
  CHECK_THROWS_AS(inclusion_xmod(s3, subgroup_generated(s3, {t})), Error);
}

TEST_CASE("validation rejects each broken axiom with a witness") {
  auto c2 = catalog_group(2, 1), c4 = catalog_group(4, 1), s3 = catalog_group(6, 1);
  auto expect = [](GroupPtr g1, GroupPtr g0, std::vector<Elem> d, std::vector<Elem> act, XModErrc code) {
    auto v = find_violation(g1, g0, d, act);
    REQUIRE(v.has_value());
    CHECK(v->code == code);
    try {
      make_xmod(g1, g0, d, act);
      FAIL("accepted");
    } catch (const XModError& e) {
      CHECK(e.code() == code);
    }
    CHECK_FALSE(oracle::is_xmod(*g1, *g0, d, act));
  };
  expect(c2, c2, {0}, {0, 1, 0, 1}, XModErrc::shape);
  // C4 -> C2 sending the generator to 1 but its square also to 1
  std::vector<Elem> bad(4, 0);
  bad[1] = 1;
  expect(c4, c2, bad, trivial_action(4, 2), XModErrc::boundary_not_homomorphism);
  expect(c2, c2, {0, 0}, {0, 1, 0, 0}, XModErrc::action_not_automorphic);
  // identity boundary with trivial action fails CM1 on a nonabelian group
  std::vector<Elem> id(6);
  for (Elem i = 0; i < 6; ++i) id[i] = i;
  expect(s3, s3, id, trivial_action(6, 6), XModErrc::cm1_violated);
  // zero boundary with conjugation action on nonabelian S3 fails CM2
  auto inner = conjugation_xmod(s3);
  expect(s3, inner->range(), std::vector<Elem>(6, 0), inner->action_table(), XModErrc::cm2_violated);
}

TEST_CASE("library validation agrees with the oracle on perturbed tables") {
  const auto& raw = raw44();
  std::size_t rejected = 0;
  for (const auto& x : raw) {
    REQUIRE(oracle_ok(*x));
    REQUIRE(is_xmod(*x));
    for (std::size_t i = 1; i < x->boundary_table().size(); ++i) {
      auto d = x->boundary_table();
      d[i] = Elem((d[i] + 1) % x->range()->order());
      bool lib = !find_violation(x->source(), x->range(), d, x->action_table()).has_value();
      REQUIRE(lib == oracle::is_xmod(*x->source(), *x->range(), d, x->action_table()));
      rejected += !lib;
    }
    for (std::size_t i = x->source()->order(); i < x->action_table().size(); i += 3) {
      auto a = x->action_table();
      a[i] = Elem((a[i] + 1) % x->source()->order());
      bool lib = !find_violation(x->source(), x->range(), x->boundary_table(), a).has_value();
      REQUIRE(lib == oracle::is_xmod(*x->source(), *x->range(), x->boundary_table(), a));
      rejected += !lib;
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("morphisms compose, invert and detect invalid maps") {
  auto x = identity_xmod(catalog_group(8, 3));
  auto autos = xmod_automorphisms(x);
  REQUIRE(autos.size() == 8);  // Aut(D8)
  CHECK(autos.front().alpha == XModMorphism::identity(x).alpha);
  for (const auto& f : autos) {
    REQUIRE(f.is_isomorphism());
    auto g = compose(f, f.inverse());
    REQUIRE(g.alpha == GroupHom::identity(x->source()));
    REQUIRE(g.beta == GroupHom::identity(x->range()));
  }
  auto broken = autos.back();
  std::swap(broken.alpha.image_of[1], broken.alpha.image_of[2]);
  if (broken.alpha != autos.back().alpha) CHECK_FALSE(broken.is_valid());
}

TEST_CASE("sub crossed modules, quotients, kernels and images") {
  auto x = identity_xmod(catalog_group(8, 3));
  auto z = center_xmod(x);
  CHECK(is_normal_subxmod(z));
  CHECK(z.order() == std::array<std::size_t, 2>{2, 2});
  auto q = quotient_xmod(z);
  CHECK(q.xmod->order() == std::array<std::size_t, 2>{4, 4});
  CHECK(oracle_ok(*q.xmod));
  CHECK(q.projection.is_valid());
  CHECK(kernel(q.projection) == z);
  CHECK(image(q.projection).is_whole());
  auto e = subxmod_as_xmod(z);
  CHECK(oracle_ok(*e.xmod));
  CHECK(e.inclusion().is_valid());
  CHECK(intersection(z, whole_subxmod(x)) == z);
  CHECK(product(trivial_subxmod(x), z) == z);
  // a sub crossed module that is not normal
  auto d8 = x->source();
  Elem refl = 0;
  for (std::size_t i = 1; i < 8; ++i)
    if (d8->elem_order(Elem(i)) == 2 && !center(d8).contains(Elem(i))) refl = Elem(i);
  auto h = sub_xmod(x, subgroup_generated(d8, {refl}), subgroup_generated(d8, {refl}));
  CHECK_FALSE(is_normal_subxmod(h));
  CHECK_THROWS_AS(quotient_xmod(h), Error);
  CHECK_THROWS_AS(sub_xmod(x, Subgroup::whole(d8), Subgroup::trivial(d8)), Error);
}

TEST_CASE("serialization round-trips bit-exactly") {
  for (const auto& x : raw44()) {
    std::string s = serialize_xmod(*x);
    auto y = parse_xmod(s);
    REQUIRE(*y == *x);
    REQUIRE(serialize_xmod(*y) == s);
  }
  // a group outside the catalog is written as a raw table
  auto c32 = make_group(cyclic_group(32));
  auto x = identity_xmod(c32);
  std::string s = serialize_xmod(*x);
  CHECK(s.find("source table 32") != std::string::npos);
  CHECK(serialize_xmod(*parse_xmod(s)) == s);
}

TEST_CASE("malformed records are rejected") {
  std::string good = serialize_xmod(*identity_xmod(catalog_group(4, 1)));
  CHECK_THROWS_AS(parse_xmod(std::string("")), Error);
  CHECK_THROWS_AS(parse_xmod("xmod-record 2\n" + good.substr(good.find('\n') + 1)), Error);
  std::string wrong_action = good;
  auto pos = wrong_action.find("action 0 1 2 3");
  REQUIRE(pos != std::string::npos);
  wrong_action.replace(pos, 14, "action 0 0 2 3");
  CHECK_THROWS_AS(parse_xmod(wrong_action), Error);
  CHECK_THROWS_AS(parse_xmod("xmod-record 1\nsource catalog 99:1\nrange catalog 1:1\nboundary 0\naction 0\nend\n"),
                  Error);
  CHECK_THROWS_AS(parse_xmod("xmod-record 1\nsource table 2 0 1 1 1\nrange catalog 1:1\nboundary 0 0\naction 0 1\nend\n"),
                  Error);
  std::string truncated = good.substr(0, good.find("end"));
  CHECK_THROWS_AS(parse_xmod(truncated), Error);
}

TEST_CASE("isomorphism testing matches the unfiltered search on [2,4] and [4,2]") {
  for (auto [n, m] : {std::pair{2u, 4u}, std::pair{4u, 2u}, std::pair{2u, 2u}}) {
    auto raw = all_xmods(n, m).xmods;
    for (const auto& a : raw)
      for (const auto& b : raw) REQUIRE(is_isomorphic_xmod(a, b).has_value() == brute::is_isomorphic_xmod(a, b));
  }
}
