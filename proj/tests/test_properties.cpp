#include <catch_amalgamated.hpp>

#include "property_checks.hpp"

namespace {

const props::Corpus& k44() {
  static const auto k = props::corpus_44();
  return k;
}

const props::Corpus& k88() {
  static const auto k = props::corpus_88_sample();
  return k;
}

void require(const props::Outcome& o) {
  INFO(o.summary);
  REQUIRE(o.passed);
}

}  // namespace

TEST_CASE("isoclinism is an equivalence relation") {
  require(props::equivalence(k44()));
  require(props::equivalence(k88()));
}

TEST_CASE("family invariants are constant") {
  require(props::family_invariants(k44()));
  require(props::family_invariants(k88()));
}

TEST_CASE("commutator pairings are well defined") {
  require(props::pairing_well_defined(k44()));
  require(props::pairing_well_defined(k88()));
}

TEST_CASE("simply connected and aspherical members") {
  require(props::simply_connected_aspherical(k44()));
  require(props::simply_connected_aspherical(k88()));
}

TEST_CASE("sub crossed modules with H Z = X") {
  require(props::hz_witnesses(k44()));
  require(props::hz_witnesses(k88()));
}

TEST_CASE("every family has a stem member") {
  require(props::stem_members(k44()));
  require(props::stem_members(k88()));
}

TEST_CASE("class-preserving actor is an isoclinism invariant") {
  require(props::class_preserving(k44()));
  require(props::class_preserving(k88()));
}

TEST_CASE("all_subgroups finds every subgroup") {
  using namespace xmod;
  CHECK(props::all_subgroups(catalog_group(8, 3)).size() == 10);  // D8
  CHECK(props::all_subgroups(catalog_group(8, 4)).size() == 6);   // Q8
  CHECK(props::all_subgroups(catalog_group(6, 1)).size() == 6);   // S3
  CHECK(props::all_subgroups(catalog_group(1, 1)).size() == 1);
}
