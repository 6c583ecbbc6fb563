#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "goursat/chain.hpp"
#include "goursat/classify.hpp"
#include "goursat/oracle.hpp"

using namespace goursat;
using goursat::testing::generated;
using goursat::testing::product;

namespace {

bool commutes(const Subgroup& g) {
  const FiniteGroup& p = g.parent();
  for (Element a : g.members()) {
    for (Element b : g.members()) {
      if (p.mul(a, b) != p.mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t projection_lcm(const DirectProduct& d, const Subgroup& g) {
  std::size_t l = 1;
  for (std::size_t j = 0; j < d.arity(); ++j) l = std::lcm(l, section(d, g, {j, {}}).order());
  return l;
}

}  // namespace

TEST_CASE("is_cyclic_direct") {
  const GroupPtr z6 = cyclic_group(6);
  CHECK(is_cyclic_direct(Subgroup::whole(z6)));
  const DirectProduct z2z2 = product("Z2xZ2");
  CHECK_FALSE(is_cyclic_direct(Subgroup::whole(z2z2.group())));
  const DirectProduct z2z4 = product("Z2xZ4");
  const Subgroup h = generated(z2z4, "(1,1)");
  CHECK(is_cyclic_direct(h));
  CHECK(h.order() == 4);
  CHECK(is_cyclic_direct(Subgroup::trivial(z6)));

  for (const auto& known : goursat::testing::known_counts()) {
    CAPTURE(known.expr);
    std::size_t cyclic = 0;
    for (const Subgroup& g : oracle::all_subgroups_bruteforce(product(known.expr).group())) {
      if (is_cyclic_direct(g)) ++cyclic;
    }
    CHECK(cyclic == known.cyclic);
  }
}

TEST_CASE("is_prime and is_p_power") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(is_p_power(1, 3));
  CHECK(is_p_power(8, 2));
  CHECK_FALSE(is_p_power(12, 2));
  CHECK_FALSE(is_p_power(0, 2));
}

TEST_CASE("is_abelian_via_projections") {
  const DirectProduct z4z6 = product("Z4xZ6");
  for (const Subgroup& g : oracle::all_subgroups_bruteforce(z4z6.group())) {
    CHECK(is_abelian_via_projections(z4z6, g));
  }
  const DirectProduct s3z2 = product("S3xZ2");
  CHECK_FALSE(is_abelian_via_projections(s3z2, Subgroup::whole(s3z2.group())));
  const DirectProduct s3s3 = product("S3xS3");
  const Subgroup diag = generated(s3s3, "(132,132),(231,231)");
  REQUIRE(diag.order() == 6);
  CHECK_FALSE(is_abelian_via_projections(s3s3, diag));
}

TEST_CASE("is_p_group_via_projections") {
  const DirectProduct z4z4 = product("Z4xZ4");
  CHECK(is_p_group_via_projections(z4z4, Subgroup::trivial(z4z4.group()), 2));
  CHECK(is_p_group_via_projections(z4z4, Subgroup::trivial(z4z4.group()), 7));
  CHECK(is_p_group_via_projections(z4z4, generated(z4z4, "(1,1)"), 2));
  const DirectProduct z2z3 = product("Z2xZ3");
  CHECK_FALSE(is_p_group_via_projections(z2z3, Subgroup::whole(z2z3.group()), 2));
  CHECK_THROWS_AS(is_p_group_via_projections(z2z3, Subgroup::whole(z2z3.group()), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_p_group_via_projections(z2z3, Subgroup::whole(z2z3.group()), 1),
                  std::invalid_argument);
}

TEST_CASE("is_product_of_projections") {
  const DirectProduct s3z4 = product("S3xZ4");
  CHECK(is_product_of_projections(s3z4, Subgroup::whole(s3z4.group())));
  const DirectProduct z2z2 = product("Z2xZ2");
  CHECK_FALSE(is_product_of_projections(z2z2, generated(z2z2, "(1,1)")));
  const DirectProduct z4z2 = product("Z4xZ2");
  CHECK(is_product_of_projections(z4z2, generated(z4z2, "(2,0),(0,1)")));
}

TEST_CASE("projection predicates agree with direct checks") {
  for (const char* expr : {"S3xZ4", "S3xS3", "Q8xZ2", "Z2xZ2xZ3", "D4xZ2", "Z2xZ2xZ2xZ2"}) {
    CAPTURE(expr);
    const DirectProduct d = product(expr);
    for (const Subgroup& g : oracle::all_subgroups_bruteforce(d.group())) {
      CHECK(is_abelian_via_projections(d, g) == commutes(g));
      for (std::size_t p : {2, 3, 5}) {
        CHECK(is_p_group_via_projections(d, g, p) == is_p_power(g.order(), p));
      }
      std::size_t full = 1;
      for (std::size_t j = 0; j < d.arity(); ++j) full *= section(d, g, {j, {}}).order();
      CHECK(is_product_of_projections(d, g) == (full == g.order()));
    }
  }
}

TEST_CASE("cyclic_criterion_pair") {
  const DirectProduct z2z3 = product("Z2xZ3");
  CHECK(cyclic_criterion_pair(z2z3, generated(z2z3, "(1,1)")) == CyclicVerdict{true, 6});
  const DirectProduct z2z2 = product("Z2xZ2");
  CHECK(cyclic_criterion_pair(z2z2, Subgroup::whole(z2z2.group())) ==
        CyclicVerdict{false, std::nullopt});
  CHECK(cyclic_criterion_pair(z2z2, Subgroup::trivial(z2z2.group())) == CyclicVerdict{true, 1});
  CHECK_THROWS_AS(cyclic_criterion_pair(product("Z2xZ2xZ2"), Subgroup::trivial(product("Z2xZ2xZ2").group())),
                  std::invalid_argument);
}

TEST_CASE("cyclic_criterion_triple") {
  const DirectProduct z2z3z5 = product("Z2xZ3xZ5");
  CHECK(cyclic_criterion_triple(z2z3z5, generated(z2z3z5, "(1,1,1)")) == CyclicVerdict{true, 30});
  const DirectProduct z2z2z3 = product("Z2xZ2xZ3");
  const Subgroup g = generated(z2z2z3, "(1,0,0),(0,1,0)");
  CHECK(cyclic_criterion_triple(z2z2z3, g) == CyclicVerdict{false, std::nullopt});
  CHECK(section(z2z2z3, g, {0, {1}}).order() == 2);
  CHECK(section(z2z2z3, g, {1, {0}}).order() == 2);
  CHECK(cyclic_criterion_triple(z2z2z3, Subgroup::trivial(z2z2z3.group())) == CyclicVerdict{true, 1});
  CHECK_THROWS_AS(cyclic_criterion_triple(z2z3z5.prefix(2), Subgroup::trivial(z2z3z5.prefix(2).group())),
                  std::invalid_argument);
}

TEST_CASE("cyclic criteria agree with the direct check") {
  for (const char* expr : {"Z2xZ2", "Z2xZ4", "Z3xZ3", "Z4xZ6", "S3xZ4", "S3xS3", "D4xZ2", "Q8xZ2",
                           "Z2xZ2xZ2", "Z2xZ3xZ5", "Z2xZ2xZ3", "S3xZ2xZ2", "Z2xZ2xZ2xZ2"}) {
    CAPTURE(expr);
    const DirectProduct d = product(expr);
    for (const Subgroup& g : oracle::all_subgroups_bruteforce(d.group())) {
      const CyclicVerdict general = cyclic_criterion(d, g);
      CHECK(general.is_cyclic == is_cyclic_direct(g));
      CHECK(general.predicted_order.has_value() == general.is_cyclic);
      if (general.is_cyclic) {
        CHECK(*general.predicted_order == g.order());
        CHECK(projection_lcm(d, g) == g.order());
      }
      if (d.arity() == 2) {
        CHECK(cyclic_criterion_pair(d, g) == general);
        CHECK(order_formula_check(d, q2_prime(d, g)));
      }
      if (d.arity() == 3) CHECK(cyclic_criterion_triple(d, g) == general);
    }
  }
}

TEST_CASE("order_formula_check") {
  const DirectProduct z2z2 = product("Z2xZ2");
  CHECK(order_formula_check(z2z2, q2_prime(z2z2, generated(z2z2, "(1,1)"))));
  const DirectProduct z2z3 = product("Z2xZ3");
  CHECK(order_formula_check(z2z3, q2_prime(z2z3, Subgroup::whole(z2z3.group()))));
  const DirectProduct z4z6 = product("Z4xZ6");
  for (const Subgroup& g : oracle::all_subgroups_bruteforce(z4z6.group())) {
    CHECK(order_formula_check(z4z6, q2_prime(z4z6, g)));
  }
}
