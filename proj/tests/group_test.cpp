#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "goursat/catalog.hpp"
#include "goursat/homomorphism.hpp"
#include "goursat/oracle.hpp"
#include "goursat/quotient.hpp"

using namespace goursat;
using goursat::testing::product;

namespace {

std::vector<std::size_t> order_histogram(const FiniteGroup& g) {
  std::vector<std::size_t> h(g.order() + 1, 0);
  for (std::size_t x = 0; x < g.order(); ++x) ++h[element_order(g, static_cast<Element>(x))];
  return h;
}

// Counts homomorphisms by trying every map d -> c.
std::size_t brute_force_homs(const FiniteGroup& d, const FiniteGroup& c, MapKind kind) {
  const std::size_t n = d.order();
  std::vector<Element> f(n, 0);
  std::size_t count = 0;
  while (true) {
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a) {
      for (std::size_t b = 0; b < n && hom; ++b) {
        hom = f[static_cast<std::size_t>(d.mul(static_cast<Element>(a), static_cast<Element>(b)))] ==
              c.mul(f[a], f[b]);
      }
    }
    if (hom) {
      std::vector<Element> im = f;
      std::sort(im.begin(), im.end());
      const auto distinct = static_cast<std::size_t>(std::unique(im.begin(), im.end()) - im.begin());
      if (kind == MapKind::kAny || (kind == MapKind::kSurjective && distinct == c.order()) ||
          (kind == MapKind::kBijective && distinct == c.order() && n == c.order())) {
        ++count;
      }
    }
    std::size_t i = 0;
    while (i < n && ++f[i] == static_cast<Element>(c.order())) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("catalog groups") {
  SUBCASE("Z1 is the trivial table") {
    GroupPtr z1 = cyclic_group(1);
    CHECK(z1->order() == 1);
    CHECK(std::vector<Element>(z1->table().begin(), z1->table().end()) == std::vector<Element>{0});
  }
  SUBCASE("Z4 is addition mod 4") {
    GroupPtr z4 = cyclic_group(4);
    for (Element i = 0; i < 4; ++i) {
      for (Element j = 0; j < 4; ++j) CHECK(z4->mul(i, j) == (i + j) % 4);
    }
  }
  SUBCASE("S3 has three involutions and two 3-cycles") {
    const auto h = order_histogram(*symmetric_group(3));
    CHECK(h[1] == 1);
    CHECK(h[2] == 3);
    CHECK(h[3] == 2);
    CHECK(symmetric_group(3)->name(0) == "123");
  }
  SUBCASE("orders") {
    CHECK(symmetric_group(5)->order() == 120);
    CHECK(alternating_group(5)->order() == 60);
    CHECK(alternating_group(1)->order() == 1);
    CHECK(dihedral_group(4)->order() == 8);
    CHECK(quaternion_group()->order() == 8);
    CHECK(trivial_group()->order() == 1);
  }
  SUBCASE("Q8 has one involution and six elements of order 4") {
    const auto h = order_histogram(*quaternion_group());
    CHECK(h[2] == 1);
    CHECK(h[4] == 6);
  }
  SUBCASE("D4 is nonabelian with five involutions") {
    const auto h = order_histogram(*dihedral_group(4));
    CHECK(h[2] == 5);
    CHECK_FALSE(is_abelian(Subgroup::whole(dihedral_group(4))));
  }
  SUBCASE("every catalog group satisfies the axioms") {
    for (const GroupPtr& g : {cyclic_group(7), symmetric_group(4), alternating_group(4),
                              dihedral_group(5), quaternion_group(), trivial_group()}) {
      CHECK(satisfies_group_axioms(*g));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(make_group({GroupKind::kCyclic, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({GroupKind::kSymmetric, 6}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({GroupKind::kQuaternion, 16}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({GroupKind::kCyclic, 5000}), CapExceeded);
    CHECK_THROWS_AS(make_group({GroupKind::kCyclic, 50}, 40), CapExceeded);
  }
}

TEST_CASE("FiniteGroup rejects invalid tables") {
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1}), std::invalid_argument);
  // Latin square without associativity: the loop of order 5 below.
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                     3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup("loop", 5, loop), std::invalid_argument);
}

TEST_CASE("direct products") {
  SUBCASE("Z2 x Z3 is isomorphic to Z6") {
    const DirectProduct d = product("Z2xZ3");
    CHECK(d.order() == 6);
    CHECK(are_isomorphic(Subgroup::whole(d.group()), Subgroup::whole(cyclic_group(6))));
  }
  SUBCASE("single factor keeps the identity encoding") {
    GroupPtr z2 = cyclic_group(2);
    const DirectProduct d({z2});
    CHECK(d.group() == z2);
    CHECK(d.encode(std::vector<Element>{1}) == 1);
  }
  SUBCASE("Z2 x Z2 is elementary abelian") {
    const DirectProduct d = product("Z2xZ2");
    CHECK(d.order() == 4);
    for (Element x = 1; x < 4; ++x) CHECK(element_order(*d.group(), x) == 2);
    CHECK_FALSE(are_isomorphic(Subgroup::whole(d.group()), Subgroup::whole(cyclic_group(4))));
  }
  SUBCASE("encoding is a bijection and multiplication is componentwise") {
    const DirectProduct d = product("S3xZ4xZ2");
    std::vector<char> hit(d.order(), 0);
    for (Element x = 0; x < static_cast<Element>(d.order()); ++x) {
      const auto c = d.decode(x);
      CHECK(d.encode(c) == x);
      hit[static_cast<std::size_t>(x)] = 1;
      for (Element y = 0; y < static_cast<Element>(d.order()); y += 5) {
        const auto cy = d.decode(y);
        const auto cxy = d.decode(d.group()->mul(x, y));
        for (std::size_t i = 0; i < 3; ++i) CHECK(cxy[i] == d.factor(i)->mul(c[i], cy[i]));
      }
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](char h) { return h == 1; }));
  }
  SUBCASE("prefixes and names") {
    const DirectProduct d = product("Z2xZ3xZ2");
    CHECK(d.prefix(2).order() == 6);
    CHECK(d.prefix(1).group() == d.factor(0));
    CHECK(d.group()->name(d.encode(std::vector<Element>{1, 2, 0})) == "(1,2,0)");
    CHECK(*d.prefix(3).group() == *d.group());
  }
  SUBCASE("order cap") {
    CHECK_THROWS_AS(DirectProduct({symmetric_group(5), symmetric_group(5)}), CapExceeded);
  }
}

TEST_CASE("generated_subgroup") {
  GroupPtr z4 = cyclic_group(4);
  auto members = [](const Subgroup& h) { return std::vector<Element>(h.members().begin(), h.members().end()); };
  CHECK(members(generated_subgroup(z4, std::vector<Element>{})) == std::vector<Element>{0});
  CHECK(members(generated_subgroup(z4, std::vector<Element>{2})) == std::vector<Element>{0, 2});
  const DirectProduct d = product("Z2xZ3");
  CHECK(goursat::testing::generated(d, "(1,1)").order() == 6);
  CHECK_THROWS_AS(generated_subgroup(z4, std::vector<Element>{4}), std::invalid_argument);

  SUBCASE("idempotent on every subgroup") {
    for (const char* expr : {"S4", "D4xZ2", "Q8"}) {
      const DirectProduct p = product(expr);
      for (const Subgroup& h : oracle::all_subgroups_bruteforce(p.group())) {
        const std::vector<Element> all(h.members().begin(), h.members().end());
        CHECK(generated_subgroup(p.group(), all) == h);
        CHECK(generated_subgroup(p.group(), generating_set(h)) == h);
      }
    }
  }
}

TEST_CASE("Subgroup validation") {
  GroupPtr z4 = cyclic_group(4);
  CHECK_THROWS_AS(Subgroup(z4, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Subgroup(z4, {2}), std::invalid_argument);
  CHECK_THROWS_AS(Subgroup(z4, {0, 7}), std::invalid_argument);
  const Subgroup h(z4, {2, 0, 2});
  CHECK(h.order() == 2);
  CHECK(h == Subgroup(cyclic_group(4), {0, 2}));
  CHECK_FALSE(h == Subgroup(cyclic_group(2), {0}));
}

TEST_CASE("element_order") {
  GroupPtr z6 = cyclic_group(6);
  CHECK(element_order(*z6, 1) == 6);
  CHECK(element_order(*z6, 0) == 1);
  const DirectProduct d = product("Z2xZ3");
  CHECK(element_order(*d.group(), goursat::testing::tuple(d, {1, 1})) == 6);
}

TEST_CASE("is_normal") {
  GroupPtr s3 = symmetric_group(3);
  const Subgroup whole = Subgroup::whole(s3);
  CHECK(is_normal(Subgroup::trivial(s3), whole));
  const Subgroup a3 = generated_subgroup(s3, std::vector<Element>{3});  // "231"
  REQUIRE(a3.order() == 3);
  CHECK(is_normal(a3, whole));
  const Subgroup transposition = generated_subgroup(s3, std::vector<Element>{1});  // "132"
  REQUIRE(transposition.order() == 2);
  CHECK_FALSE(is_normal(transposition, whole));
  CHECK_THROWS_AS(is_normal(whole, a3), std::invalid_argument);
}

TEST_CASE("quotient") {
  GroupPtr z4 = cyclic_group(4);
  const QuotientGroup q = quotient(Subgroup::whole(z4), Subgroup(z4, {0, 2}));
  CHECK(q.order() == 2);
  CHECK(q.representative(0) == 0);
  CHECK(q.representative(1) == 1);
  CHECK(q.coset_of(3) == 1);
  CHECK(q.group()->name(1) == "[1]");

  const QuotientGroup full = quotient(Subgroup::whole(z4), Subgroup::whole(z4));
  CHECK(full.order() == 1);
  CHECK(full.cosets().size() == 1);

  GroupPtr s3 = symmetric_group(3);
  const Subgroup a3 = generated_subgroup(s3, std::vector<Element>{3});
  const QuotientGroup sign = quotient(Subgroup::whole(s3), a3);
  CHECK(sign.order() == 2);
  CHECK(sign.cosets()[0] == std::vector<Element>(a3.members().begin(), a3.members().end()));

  const Subgroup transposition = generated_subgroup(s3, std::vector<Element>{1});
  CHECK_THROWS_AS(quotient(Subgroup::whole(s3), transposition), std::invalid_argument);

  SUBCASE("order and projection kernel on every normal pair") {
    for (const char* expr : {"S4", "D4xZ2", "Q8xZ2", "S3xZ2"}) {
      const DirectProduct d = product(expr);
      const auto subs = oracle::all_subgroups_bruteforce(d.group());
      for (const Subgroup& whole : subs) {
        for (const Subgroup& kernel : subs) {
          if (!kernel.is_subset_of(whole) || !is_normal(kernel, whole)) continue;
          const QuotientGroup qg = quotient(whole, kernel);
          CHECK(qg.order() * kernel.order() == whole.order());
          CHECK(qg.projection().is_surjective());
          CHECK(qg.projection().kernel() == kernel);
          for (const auto& block : qg.cosets()) CHECK(block.size() == kernel.order());
        }
      }
    }
  }
}

TEST_CASE("enumerate_homomorphisms") {
  GroupPtr z2 = cyclic_group(2);
  GroupPtr z3 = cyclic_group(3);
  GroupPtr z4 = cyclic_group(4);
  CHECK(enumerate_homomorphisms(z2, z2, MapKind::kBijective).size() == 1);
  CHECK(enumerate_homomorphisms(z3, z3, MapKind::kBijective).size() == 2);
  const auto surj = enumerate_homomorphisms(z4, z2, MapKind::kSurjective);
  REQUIRE(surj.size() == 1);
  CHECK(std::vector<Element>(surj[0].images().begin(), surj[0].images().end()) ==
        std::vector<Element>{0, 1, 0, 1});
  CHECK(enumerate_homomorphisms(z4, z2, MapKind::kAny).size() == 2);
  CHECK(enumerate_homomorphisms(z2, z4, MapKind::kSurjective).empty());

  SUBCASE("Aut(Z_n) has Euler phi(n) elements") {
    for (int n = 1; n <= 12; ++n) {
      std::size_t phi = 0;
      for (int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
      GroupPtr zn = cyclic_group(n);
      CHECK(enumerate_homomorphisms(zn, zn, MapKind::kBijective).size() == phi);
    }
  }
  SUBCASE("agrees with brute force over all maps") {
    const std::vector<GroupPtr> groups = {trivial_group(), z2, z3, z4, product("Z2xZ2").group(),
                                          symmetric_group(3)};
    for (const GroupPtr& d : groups) {
      for (const GroupPtr& c : groups) {
        for (MapKind kind : {MapKind::kAny, MapKind::kSurjective, MapKind::kBijective}) {
          CAPTURE(d->label());
          CAPTURE(c->label());
          CHECK(enumerate_homomorphisms(d, c, kind).size() == brute_force_homs(*d, *c, kind));
        }
      }
    }
  }
  SUBCASE("sorted, distinct and multiplicative") {
    GroupPtr s4 = symmetric_group(4);
    const auto autos = enumerate_homomorphisms(s4, s4, MapKind::kBijective);
    CHECK(autos.size() == 24);
    for (std::size_t i = 0; i + 1 < autos.size(); ++i) {
      auto a = autos[i].images();
      auto b = autos[i + 1].images();
      CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
    for (const Homomorphism& h : autos) {
      CHECK_NOTHROW(Homomorphism(h.domain(), h.codomain(),
                                 std::vector<Element>(h.images().begin(), h.images().end())));
    }
  }
}

TEST_CASE("Homomorphism") {
  GroupPtr z4 = cyclic_group(4);
  GroupPtr z2 = cyclic_group(2);
  const Homomorphism mod2(Subgroup::whole(z4), Subgroup::whole(z2), {0, 1, 0, 1});
  CHECK(mod2.is_surjective());
  CHECK_FALSE(mod2.is_injective());
  CHECK(mod2.kernel() == Subgroup(z4, {0, 2}));
  CHECK(mod2(3) == 1);
  CHECK_THROWS_AS(Homomorphism(Subgroup::whole(z4), Subgroup::whole(z2), {0, 1, 1, 0}),
                  std::invalid_argument);
  CHECK(Homomorphism::constant(Subgroup::whole(z4), Subgroup::whole(z2)).is_trivial());
}
