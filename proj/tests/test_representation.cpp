#include <doctest.h>

#include <random>

#include "repgeo/audit.hpp"
#include "repgeo/representation.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace repgeo;

TEST_CASE("representation validation") {
  PrimeField f2(2);
  PrimeField f3(3);
  auto z2 = cyclic_group(2, "a");
  auto unipotent = [](const PrimeField& f) { return Matrix::from_rows(f, {{1, 1}, {0, 1}}); };

  // [[1,1],[0,1]]^2 = [[1,2],[0,1]]: the identity mod 2 but not mod 3.
  CHECK_NOTHROW(Representation::make(f2, 2, z2, {{1, unipotent(f2)}}));
  CHECK_THROWS_AS(Representation::make(f3, 2, z2, {{1, unipotent(f3)}}), NotAnAction);

  CHECK_THROWS_AS(Representation::make(f2, 2, z2, {{1, Matrix::identity(f2, 3)}}), DimensionMismatch);
  CHECK_THROWS_AS(Representation::make(f2, 2, z2, {}), InvalidArgument);
  CHECK_THROWS_AS(Representation::make(f2, 2, z2, {{1, Matrix::from_rows(f2, {{1, 1}, {1, 1}})}}),
                  NotAnAction);
}

TEST_CASE("kernel, stabilizer and faithful image of the swap examples") {
  PrimeField f(2);
  auto r1 = swap_representation(f);
  auto r2 = swap_with_kernel_representation(f);

  CHECK(rep_kernel(r1).is_trivial());
  CHECK(rep_kernel(r2).members() == std::vector<Element>{0, *r2.group().find("b")});
  CHECK(stabilizer(r1, Vector(f, {1, 1})).size() == 2);
  CHECK(stabilizer(r1, Vector(f, {1, 0})).is_trivial());
  CHECK(act(r1, Vector(f, {1, 0}), 1) == Vector(f, {0, 1}));

  auto image = faithful_image(r2);
  CHECK(image.quotient.group().order() == 2);
  CHECK(rep_kernel(image.quotient).is_trivial());
  CHECK(rep_isomorphic(image.quotient, r1).has_value());
  CHECK_FALSE(rep_isomorphic(r1, r2).has_value());

  auto faithful = faithful_image(r1);
  CHECK(faithful.quotient == r1);
}

TEST_CASE("rep homomorphism counts match brute force") {
  PrimeField f(2);
  auto r1 = swap_representation(f);
  auto r2 = swap_with_kernel_representation(f);
  CHECK(enumerate_rep_homs(r1, r1).size() == 8);
  CHECK(testsupport::naive_rep_hom_count(r1, r1) == 8);
  CHECK(enumerate_rep_homs(r2, r1).size() == testsupport::naive_rep_hom_count(r2, r1));
  CHECK(enumerate_rep_homs(r1, r2).size() == testsupport::naive_rep_hom_count(r1, r2));

  // (all-ones, a -> 1, b -> a) is in Hom(R2, R1).
  auto ones = Matrix::from_rows(f, {{1, 1}, {1, 1}});
  std::vector<Element> beta{0, 0, 1, 1};
  CHECK(is_rep_hom(r2, r1, ones, beta));
  bool listed = false;
  for (const auto& h : enumerate_rep_homs(r2, r1)) listed = listed || (h.matrix == ones && h.grouphom.image == beta);
  CHECK(listed);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 12; ++i) {
    auto r = testsupport::random_small_rep(rng);
    auto s = testsupport::random_rep(rng, r.field().p(), 1 + rng() % 2);
    if (r.group().order() > 4 || s.group().order() > 4) continue;
    auto homs = enumerate_rep_homs(r, s);
    CHECK(homs.size() == testsupport::naive_rep_hom_count(r, s));
    for (const auto& h : homs) CHECK(is_rep_hom(r, s, h.matrix, h.grouphom.image));
  }
}

TEST_CASE("rep homomorphisms compose") {
  PrimeField f(3);
  auto r1 = swap_representation(f);
  auto r2 = swap_with_kernel_representation(f);
  for (const auto& a : enumerate_rep_homs(r2, r1)) {
    for (const auto& b : enumerate_rep_homs(r1, r1)) {
      auto c = compose(a, b);
      CHECK(is_rep_hom(r2, r1, c.matrix, c.grouphom.image));
    }
  }
}

TEST_CASE("mismatched fields are rejected") {
  auto r = swap_representation(PrimeField(2));
  auto s = swap_representation(PrimeField(3));
  CHECK_THROWS_AS(enumerate_rep_homs(r, s), InvalidArgument);
}
