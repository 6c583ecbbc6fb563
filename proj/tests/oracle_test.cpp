#include "doctest.h"
#include "fixtures.hpp"
#include "goursat/oracle.hpp"

using namespace goursat;
using goursat::testing::product;

TEST_CASE("oracle counts") {
  CHECK(oracle::subgroup_count(trivial_group()) == 1);
  CHECK(oracle::subgroup_count(symmetric_group(3)) == 6);
  CHECK(oracle::subgroup_count(product("Z2xZ2").group()) == 5);
  CHECK(oracle::subgroup_count(product("Z3xZ3").group()) == 6);
  CHECK(oracle::subgroup_count(product("Z2xZ4").group()) == 8);
  CHECK(oracle::subgroup_count(cyclic_group(6)) == 4);

  for (const auto& known : goursat::testing::known_counts()) {
    CAPTURE(known.expr);
    CHECK(oracle::subgroup_count(product(known.expr).group()) == known.subgroups);
  }
}

TEST_CASE("oracle S3 lattice") {
  const auto subs = oracle::all_subgroups_bruteforce(symmetric_group(3));
  REQUIRE(subs.size() == 6);
  CHECK(subs[0].order() == 1);
  CHECK(subs[1].order() == 2);
  CHECK(subs[2].order() == 2);
  CHECK(subs[3].order() == 2);
  CHECK(subs[4].order() == 3);
  CHECK(subs[5].order() == 6);
}

TEST_CASE("oracle invariants") {
  for (const char* expr : {"S4", "D4xZ2", "Z2xZ2xZ2xZ2", "A4xZ2"}) {
    const DirectProduct d = product(expr);
    const auto subs = oracle::all_subgroups_bruteforce(d.group());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      CHECK(d.order() % subs[i].order() == 0);
      if (i > 0) CHECK(subgroup_less(subs[i - 1], subs[i]));
      // Re-validating through the checked constructor.
      CHECK_NOTHROW(Subgroup(d.group(), std::vector<Element>(subs[i].members().begin(),
                                                             subs[i].members().end())));
    }
    // Closed under intersection.
    for (const Subgroup& a : subs) {
      for (const Subgroup& b : subs) {
        std::vector<Element> meet;
        std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                              b.members().end(), std::back_inserter(meet));
        const Subgroup m(d.group(), meet);
        CHECK(std::binary_search(subs.begin(), subs.end(), m, subgroup_less));
      }
    }
  }
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(oracle::all_subgroups_bruteforce(symmetric_group(5), 100), CapExceeded);
  CHECK(oracle::subgroup_count(symmetric_group(5)) == 156);
}
