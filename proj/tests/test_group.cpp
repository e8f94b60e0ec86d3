#include <doctest.h>

#include "repgeo/errors.hpp"
#include "repgeo/group.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace repgeo;

namespace {

std::vector<std::vector<std::size_t>> loop5() {
  return {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
}

}  // namespace

TEST_CASE("cyclic and product groups") {
  auto z4 = cyclic_group(4);
  CHECK(z4.names() == std::vector<std::string>{"1", "g", "g^2", "g^3"});
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.pow(1, -1) == 3);

  auto v4 = product_group(cyclic_group(2, "a"), cyclic_group(2, "b"));
  CHECK(v4.names() == std::vector<std::string>{"1", "a", "b", "ab"});
  for (Element g = 0; g < 4; ++g) CHECK(v4.mul(g, g) == kIdentity);
  CHECK(v4.is_abelian());

  // Z2 x Z3 is cyclic: walk powers of each element through the table.
  auto z6 = product_group(cyclic_group(2), cyclic_group(3, "h"));
  bool generator = false;
  for (Element g = 0; g < 6; ++g) {
    Element x = g;
    std::size_t k = 1;
    while (x != kIdentity) {
      x = z6.mul(x, g);
      ++k;
    }
    generator = generator || k == 6;
  }
  CHECK(generator);

  auto copy = product_group(cyclic_group(1), cyclic_group(3));
  CHECK(copy.order() == 3);
  CHECK(enumerate_group_homs(copy, cyclic_group(3)).size() == 3);
}

TEST_CASE("product names fall back to dotted pairs on collision") {
  auto g = product_group(cyclic_group(2, "a"), cyclic_group(2, "a"));
  CHECK(g.names() == std::vector<std::string>{"1", "a.1", "1.a", "a.a"});
}

TEST_CASE("Cayley table validation") {
  SUBCASE("identity") {
    try {
      FiniteGroup::from_table({"1", "a"}, {{1, 0}, {0, 1}});
      FAIL("accepted");
    } catch (const NotAGroup& e) {
      CHECK(e.reason() == NotAGroup::Reason::identity);
    }
  }
  SUBCASE("latin square") {
    try {
      FiniteGroup::from_table({"1", "a", "b"}, {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}});
      FAIL("accepted");
    } catch (const NotAGroup& e) {
      CHECK(e.reason() == NotAGroup::Reason::latin_square);
      CHECK(e.witness()[0] == 1);
    }
  }
  SUBCASE("associativity") {
    try {
      FiniteGroup::from_table({"1", "a", "b", "c", "d"}, loop5());
      FAIL("accepted");
    } catch (const NotAGroup& e) {
      CHECK(e.reason() == NotAGroup::Reason::associativity);
    }
  }
  SUBCASE("shape") {
    CHECK_THROWS_AS(FiniteGroup::from_table({"1", "a"}, {{0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(FiniteGroup::from_table({"1", "1"}, {{0, 1}, {1, 0}}), InvalidArgument);
  }
}

TEST_CASE("subgroups, normality and quotients") {
  auto s3 = testsupport::symmetric3();
  Subgroup transposition(s3, {0, 1});
  CHECK_FALSE(transposition.is_normal());
  CHECK_THROWS_AS(quotient_group(s3, transposition), NotNormal);

  Subgroup rotations(s3, {0, *s3.find("r"), *s3.find("rr")});
  CHECK(rotations.is_normal());
  auto q = quotient_group(s3, rotations);
  CHECK(q.group.order() == 2);
  CHECK(q.group.names() == std::vector<std::string>{"1", "s"});
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) CHECK(q.sigma[s3.mul(a, b)] == q.group.mul(q.sigma[a], q.sigma[b]));
  }

  CHECK_THROWS_AS(Subgroup(s3, {0, 1, 2}), InvalidArgument);
}

TEST_CASE("group homomorphism counts match the all-functions filter") {
  std::vector<FiniteGroup> groups{cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                  product_group(cyclic_group(2, "a"), cyclic_group(2, "b"))};
  for (const auto& g : groups) {
    for (const auto& h : groups) {
      auto homs = enumerate_group_homs(g, h);
      CHECK(homs.size() == testsupport::naive_group_hom_count(g, h));
      for (const auto& f : homs) CHECK(is_group_hom(g, h, f.image));
      for (std::size_t i = 1; i < homs.size(); ++i) CHECK(homs[i - 1].image < homs[i].image);
    }
  }
  CHECK(enumerate_group_homs(groups[4], groups[1]).size() == 4);
}

TEST_CASE("homomorphism kernels and composition") {
  auto v4 = product_group(cyclic_group(2, "a"), cyclic_group(2, "b"));
  auto z2 = cyclic_group(2, "a");
  for (const auto& f : enumerate_group_homs(v4, z2)) {
    CHECK(f.kernel().is_normal());
    for (const auto& h : enumerate_group_homs(z2, v4)) {
      auto c = compose(h, f);
      CHECK(is_group_hom(z2, z2, c.image));
    }
  }
  auto gens = greedy_generators(v4);
  CHECK(gens.generators.size() == 2);
}
