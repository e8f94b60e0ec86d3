#include <doctest.h>

#include <random>

#include "repgeo/audit.hpp"
#include "repgeo/terms.hpp"
#include "repgeo/textio.hpp"
#include "support/generators.hpp"

using namespace repgeo;

namespace {

FreeContext ctx2(std::uint32_t p) { return FreeContext(PrimeField(p), {"x", "x2"}, {"y", "z"}); }

GroupWord random_word(std::mt19937_64& rng, const FreeContext& ctx) {
  std::vector<Letter> raw;
  int len = rng() % 4;
  for (int i = 0; i < len; ++i) raw.push_back({rng() % 2, static_cast<long long>(rng() % 5) - 2});
  return reduce_word(ctx, raw);
}

RingElement random_ring(std::mt19937_64& rng, const FreeContext& ctx) {
  RingElement r(ctx);
  int n = rng() % 3;
  for (int i = 0; i < n; ++i) r.add_term(random_word(rng, ctx), rng() % ctx.field().p());
  return r;
}

ModuleElement random_module(std::mt19937_64& rng, const FreeContext& ctx) {
  return ModuleElement::from_part(0, random_ring(rng, ctx)) +
         ModuleElement::from_part(1, random_ring(rng, ctx));
}

}  // namespace

TEST_CASE("free reduction") {
  auto ctx = ctx2(2);
  CHECK(reduce_word(ctx, std::vector<Letter>{{0, 1}, {0, -1}}).is_identity());
  auto w = reduce_word(ctx, std::vector<Letter>{{0, 2}, {1, 1}, {1, -1}, {0, 1}, {0, 0}});
  CHECK(w.letters() == std::vector<Letter>{{0, 3}});
  CHECK(w.length() == 3);
  auto u = GroupWord::generator(ctx, 0);
  auto v = GroupWord::generator(ctx, 1);
  CHECK(multiply_words(multiply_words(u, v), invert_word(v)) == u);
  CHECK(multiply_words(u, invert_word(u)).is_identity());
}

TEST_CASE("shortlex order") {
  auto ctx = ctx2(2);
  auto y = GroupWord::generator(ctx, 0);
  auto yi = GroupWord::generator(ctx, 0, -1);
  auto z = GroupWord::generator(ctx, 1);
  auto yy = GroupWord::generator(ctx, 0, 2);
  GroupWord one(ctx);
  CHECK(shortlex_compare(one, y) < 0);
  CHECK(shortlex_compare(y, yi) < 0);
  CHECK(shortlex_compare(yi, z) < 0);
  CHECK(shortlex_compare(z, yy) < 0);
}

TEST_CASE("ring and module laws") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ctx = ctx2(p);
    for (int i = 0; i < 60; ++i) {
      auto a = random_ring(rng, ctx);
      auto b = random_ring(rng, ctx);
      auto c = random_ring(rng, ctx);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      CHECK(a * RingElement::one(ctx) == a);
      auto u = random_module(rng, ctx);
      auto v = random_module(rng, ctx);
      CHECK((u * a) * b == u * (a * b));
      CHECK((u + v) * a == u * a + v * a);
      CHECK(u - u == ModuleElement(ctx));
    }
  }
}

TEST_CASE("coefficients are collected mod p") {
  FreeContext ctx(PrimeField(3), {"x"}, {"y"});
  auto u = parse_module("x*(2*y + 1)", ctx);
  REQUIRE(u.parts().size() == 1);
  const auto& r = u.parts().at(0);
  CHECK(r.coefficient(GroupWord::generator(ctx, 0)) == 2);
  CHECK(r.coefficient(GroupWord(ctx)) == 1);
  CHECK(parse_module("x*y + 2*x*y", ctx).is_zero());
}

TEST_CASE("evaluation is a homomorphism of both sorts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto rep = testsupport::random_small_rep(rng);
    FreeContext ctx(rep.field(), {"x", "x2"}, {"y", "z"});
    Assignment asg;
    for (int i = 0; i < 2; ++i) {
      asg.xmap.push_back(vector_from_index(rep.field(), rep.dim(), rng() % rep.space_size()));
      asg.ymap.push_back(rng() % rep.group().order());
    }
    auto w1 = random_word(rng, ctx);
    auto w2 = random_word(rng, ctx);
    CHECK(eval_word(rep, asg, multiply_words(w1, w2)) ==
          rep.group().mul(eval_word(rep, asg, w1), eval_word(rep, asg, w2)));
    CHECK(eval_word(rep, asg, invert_word(w1)) == rep.group().inv(eval_word(rep, asg, w1)));
    auto u = random_module(rng, ctx);
    auto v = random_module(rng, ctx);
    CHECK(eval_module(rep, asg, u + v) == eval_module(rep, asg, u) + eval_module(rep, asg, v));
    CHECK(eval_module(rep, asg, u * RingElement::from_word(w1)) ==
          act(rep, eval_module(rep, asg, u), eval_word(rep, asg, w1)));
  }
}

TEST_CASE("contexts must agree") {
  auto a = ctx2(2);
  FreeContext b(PrimeField(2), {"x"}, {"y"});
  CHECK_THROWS_AS(ModuleElement::generator(a, 0) + ModuleElement::generator(b, 0), ContextMismatch);
  CHECK_THROWS_AS(FreeContext(PrimeField(2), {"x", "x"}, {}), InvalidArgument);

  auto rep = swap_representation(PrimeField(2));
  Assignment wrong{{}, {}};
  CHECK_THROWS(eval_atom(rep, wrong, Atom::group_one(GroupWord::generator(b, 0))));
}
