#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "xmod/enumeration.hpp"

using namespace xmod;

namespace {

const std::vector<XModPtr>& reps88() {
  static const auto c = census(8, 8);
  return c.representatives;
}

std::vector<XModPtr> sample_xmods() {
  std::vector<XModPtr> out = all_xmods(4, 4).xmods;
  const auto& r = reps88();
  out.insert(out.end(), r.begin(), r.end());
  for (std::size_t n : {1u, 2u, 3u, 6u})
    for (std::size_t m : {1u, 2u, 6u}) {
      auto raw = all_xmods(n, m).xmods;
      out.insert(out.end(), raw.begin(), raw.end());
    }
  return out;
}

oracle::Set members(const Subgroup& s) { return s.members(); }

}  // namespace

TEST_CASE("log2 rendering") {
  CHECK(render_log2(18, false) == "4.17");
  CHECK(render_log2(9, false) == "3.17");
  CHECK(render_log2(6, false) == "2.58");
  CHECK(render_log2(3, false) == "1.58");
  CHECK(render_log2(2, false) == "1.00");
  CHECK(render_log2(1, false) == "0.00");
  CHECK(render_log2(8, true) == "3");
  CHECK_THROWS_AS(render_log2(6, true), Error);
  CHECK(render_class(std::nullopt) == "0");
  CHECK(render_class(2u) == "2");
  CHECK(RankValue{9, 18}.render(false) == "[3.17,4.17]");
  CHECK(RankValue{8, 2}.render(true) == "[3,1]");
}

TEST_CASE("center, stabilizer and displacement agree with the oracle") {
  for (const auto& x : sample_xmods()) {
    auto z = center_xmod(x);
    REQUIRE(members(fixed_points(x)) == oracle::fixed_points(*x));
    REQUIRE(members(stabilizer(x)) == oracle::stabilizer(*x));
    REQUIRE(members(z.s1) == oracle::fixed_points(*x));
    REQUIRE(members(z.s0) == oracle::intersect(oracle::stabilizer(*x), oracle::center(*x->range())));
    REQUIRE(is_normal_subxmod(z));
    auto c = derived_subxmod(x);
    REQUIRE(members(c.s1) == oracle::displacement(*x));
    const auto all0 = oracle::whole(*x->range());
    REQUIRE(members(c.s0) == oracle::commutator(*x->range(), all0, all0));
    REQUIRE(is_normal_subxmod(c));
  }
}

TEST_CASE("rank and middle length follow their defining products") {
  for (const auto& x : sample_xmods()) {
    auto z1 = oracle::fixed_points(*x);
    auto z0 = oracle::intersect(oracle::stabilizer(*x), oracle::center(*x->range()));
    auto d1 = oracle::displacement(*x);
    auto all0 = oracle::whole(*x->range());
    auto d0 = oracle::commutator(*x->range(), all0, all0);
    auto r = rank_of_xmod(x);
    auto ml = middle_length_of_xmod(x);
    const std::size_t zd1 = oracle::intersect(z1, d1).size(), zd0 = oracle::intersect(z0, d0).size();
    REQUIRE(r.level1_order == zd1 * (x->source()->order() / z1.size()));
    REQUIRE(r.level0_order == zd0 * (x->range()->order() / z0.size()));
    REQUIRE(ml.level1_order * zd1 == d1.size());
    REQUIRE(ml.level0_order * zd0 == d0.size());
    REQUIRE(central_quotient_size(x) == std::array<std::size_t, 2>{x->source()->order() / z1.size(),
                                                                   x->range()->order() / z0.size()});
  }
}

TEST_CASE("identity crossed modules reproduce the group invariants") {
  for (unsigned n = 1; n <= 18; ++n)
    for (const auto& g : bundled_catalog().groups_of_order(n)) {
      auto x = identity_xmod(g);
      REQUIRE(nilpotency_class(x).value_or(0) == oracle::group_class(*g));
      auto r = rank_of_xmod(x);
      REQUIRE(r.level1_order == group_rank_order(g));
      REQUIRE(r.level0_order == group_rank_order(g));
      REQUIRE(middle_length_of_xmod(x).level0_order == group_middle_length_order(g));
    }
}

TEST_CASE("series terms follow their recurrences") {
  for (const auto& x : sample_xmods()) {
    auto lcs = lower_central_series(x);
    REQUIRE(lcs.terms.front().is_whole());
    for (std::size_t i = 1; i < lcs.terms.size(); ++i) {
      REQUIRE(lcs.terms[i] == relative_commutator(lcs.terms[i - 1]));
      REQUIRE(lcs.terms[i].is_subset_of(lcs.terms[i - 1]));
      REQUIRE(!(lcs.terms[i] == lcs.terms[i - 1]));
    }
    REQUIRE(lcs.reaches_end == lcs.terms.back().is_trivial());
    auto ds = derived_series(x);
    for (std::size_t i = 1; i < ds.terms.size(); ++i) {
      auto e = subxmod_as_xmod(ds.terms[i - 1]);
      REQUIRE(ds.terms[i].order() == derived_subxmod(e.xmod).order());
    }
    auto ucs = upper_central_series(x);
    REQUIRE(ucs.terms.front().is_trivial());
    if (ucs.terms.size() > 1) REQUIRE(ucs.terms[1] == center_xmod(x));
    // lower and upper class coincide for nilpotent crossed modules
    REQUIRE(is_nilpotent(x) == ucs.reaches_end);
    if (is_nilpotent(x)) REQUIRE(nilpotency_class(x) == upper_nilpotency_class(x));
    if (is_nilpotent(x)) REQUIRE(is_solvable(x));
  }
}

TEST_CASE("trivial and abelian edge cases") {
  auto t = trivial_xmod();
  CHECK(nilpotency_class(t) == 1u);
  CHECK(derived_length(t) == 1u);
  CHECK(is_abelian_xmod(t));
  CHECK(is_stem_xmod(t));
  auto s3 = identity_xmod(catalog_group(6, 1));
  CHECK_FALSE(nilpotency_class(s3).has_value());
  CHECK(derived_length(s3) == 2u);
  CHECK(is_simply_connected(s3));
  CHECK(is_aspherical(s3));
}

TEST_CASE("simply connected and aspherical identities") {
  std::size_t sc = 0, asp = 0;
  for (const auto& x : sample_xmods()) {
    auto r = prop10_checks(x);
    REQUIRE(r.passed());
    sc += r.simply_connected;
    asp += r.aspherical;
  }
  CHECK(sc > 0);
  CHECK(asp > 0);
}
