#include <doctest.h>

#include <random>

#include "repgeo/audit.hpp"
#include "repgeo/textio.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace repgeo;

namespace {

const char* kR2 =
    "field p=2\n"
    "group table\n"
    "  elements 1 a b ab\n"
    "  row 1 a b ab\n"
    "  row a 1 ab b\n"
    "  row b ab 1 a\n"
    "  row ab b a 1\n"
    "dim 2\n"
    "act a  = [[0,1],[1,0]]\n"
    "act b  = [[1,0],[0,1]]\n"
    "act ab = [[0,1],[1,0]]   # swap again\n";

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError({}, "");
}

}  // namespace

TEST_CASE("representation files") {
  auto r2 = parse_rep_file(kR2);
  CHECK(r2 == swap_with_kernel_representation(PrimeField(2)));
  CHECK(serialize(swap_representation(PrimeField(2))) ==
        "field p=2\n"
        "group table\n"
        "  elements 1 a\n"
        "  row 1 a\n"
        "  row a 1\n"
        "dim 2\n"
        "act a = [[0,1],[1,0]]\n");
  CHECK(parse_rep_file("field p=2\ngroup product(cyclic(2) as a, cyclic(2) as b)\ndim 2\n"
                       "act a=[[0,1],[1,0]]\nact b=[[1,0],[0,1]]\nact ab=[[0,1],[1,0]]\n") == r2);
  CHECK(parse_rep_file("field p = 3\ngroup trivial\ndim 1\n").group().order() == 1);
}

TEST_CASE("representation file errors carry spans") {
  auto e = parse_error([] { parse_rep_file(""); });
  CHECK(e.span() == SourceSpan{1, 1, 0});
  CHECK(e.expected() == "field");

  try {
    parse_rep_file("field p=3\ngroup cyclic(2) as a\ndim 2\nact a = [[1,1],[0,1]]\n");
    FAIL("accepted");
  } catch (const NotAnAction& err) {
    REQUIRE(err.span());
    CHECK(err.span()->line == 4);
  }
  CHECK_NOTHROW(parse_rep_file("field p=2\ngroup cyclic(2) as a\ndim 2\nact a = [[1,1],[0,1]]\n"));

  try {
    parse_rep_file("field p=2\ngroup table\n  elements 1 a\n  row 1 a\n  row a a\ndim 1\nact a = [[1]]\n");
    FAIL("accepted");
  } catch (const NotAGroup& err) {
    REQUIRE(err.span());
    CHECK(err.span()->line == 5);
  }

  CHECK(parse_error([] { parse_rep_file("field p=2\ngroup cyclic(2) as a\ndim 1\n"); }).span()->line == 4);
  CHECK(parse_error([] { parse_rep_file("field p=2\ngroup cyclic(2)\ndim 1\nact h = [[1]]\n"); })
            .span() == SourceSpan{4, 5, 1});
  CHECK(parse_error([] { parse_rep_file("field p=2\ngroup cyclic(2)\ndim 1\nact g = [[1,]]\n"); })
            .span()
            ->column == 13);
  CHECK_THROWS_AS(parse_rep_file("field p=4\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_rep_file("field p=2\ngroup cyclic(2)\ndim 1\nact g = [[1,0]]\n"), DimensionMismatch);
}

TEST_CASE("terms") {
  FreeContext ctx(PrimeField(2), {"x"}, {"y"});
  auto q = parse_qid("x*y - x = 0 => y = 1", ctx);
  CHECK(q == fixed_point_qid(PrimeField(2)));
  auto a = parse_atom("y*y^-1 = 1", ctx);
  CHECK_FALSE(a.is_module());
  CHECK(a.word().is_identity());
  CHECK(std::holds_alternative<GroupWord>(parse_term("y^2*(y^-1)^3", ctx)));
  CHECK(serialize(parse_word("y^2*(y^-1)^3", ctx)) == "y^-1");
  CHECK(std::holds_alternative<ModuleElement>(parse_term("x*y", ctx)));

  FreeContext c3(PrimeField(3), {"x"}, {"y"});
  CHECK(serialize(parse_module("x*(y - 1)", c3)) == "x*(y - 1)");
  CHECK(serialize(parse_module("x*y - x", FreeContext(PrimeField(2), {"x"}, {"y"}))) == "x*(y + 1)");
  CHECK(serialize(parse_module("2*x*y", c3)) == "-x*y");
  CHECK(serialize(parse_module("0", c3)) == "0");
  CHECK(serialize(parse_qid("x = 0", c3)) == "=> x = 0");
}

TEST_CASE("term errors") {
  FreeContext ctx(PrimeField(2), {"x"}, {"y"});
  try {
    parse_qid("x*q = 0", ctx);
    FAIL("accepted");
  } catch (const UnknownVariable& u) {
    CHECK(u.name() == "q");
    CHECK(u.span() == SourceSpan{1, 3, 1});
  }
  CHECK(parse_error([&] { parse_atom("x*y", ctx); }).span()->column == 4);
  CHECK(parse_error([&] { parse_atom("x = 2", ctx); }).span()->column == 5);
  CHECK(parse_error([&] { parse_word("y^", ctx); }).span()->column == 3);
  CHECK(parse_error([&] { parse_word("y $", ctx); }).span()->column == 3);
  CHECK(parse_error([&] { parse_atom("y = 0", ctx); }).span()->column == 1);
}

TEST_CASE("system files") {
  PrimeField f(2);
  auto sf = parse_system_file("xvars x\nyvars y\nmodule: x*y - x = 0\ngroup: y^2 = 1\n", f);
  CHECK(sf.context.xvars() == std::vector<std::string>{"x"});
  CHECK(sf.system.module_part().size() == 1);
  CHECK(sf.system.group_part().size() == 1);
  CHECK(parse_system_file(serialize(sf.system), f).system == sf.system);

  auto inferred = parse_system_file("module: x1*z - x2 = 0\n", f);
  CHECK(inferred.context.xvars() == std::vector<std::string>{"x1", "x2"});
  CHECK(inferred.context.yvars() == std::vector<std::string>{"z"});
  CHECK(parse_error([&] { parse_system_file("module: y = 1\n", f); }).span()->line == 1);
  CHECK(parse_error([&] { parse_system_file("xvars x\nmodule: x = 0\nyvars y\n", f); }).span()->line == 3);
}

TEST_CASE("round trip on random values") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    auto rep = testsupport::random_small_rep(rng);
    CHECK(parse_rep_file(serialize(rep)) == rep);
    CHECK(parse_group_file(serialize(rep.group())) == rep.group());
    CHECK(serialize(parse_rep_file(serialize(rep))) == serialize(rep));

    const std::uint32_t p = rep.field().p();
    FreeContext ctx(rep.field(), {"x1", "x2"}, {"y1", "y2"});
    auto raw = testsupport::random_raw_qid(rng, 2, 2);
    auto q = parse_qid(testsupport::to_text(raw), ctx);
    CHECK(parse_qid(serialize(q), ctx) == q);
    for (const auto& a : q.premises()) CHECK(parse_atom(serialize(a), ctx) == a);
    EquationSystem sys(ctx);
    for (const auto& a : q.premises()) sys = sys.with(a);
    CHECK(parse_system_file(serialize(sys), PrimeField(p)).system == sys);
  }
}

TEST_CASE("random bytes never escape as anything but library errors") {
  std::mt19937_64 rng(31);
  const std::string alphabet = "xy12 0*^()+-=&>#[],\nfieldpgroupactdimtablerowelements=";
  FreeContext ctx(PrimeField(3), {"x"}, {"y"});
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int len = rng() % 40;
    for (int k = 0; k < len; ++k) {
      s += (rng() % 3) ? alphabet[rng() % alphabet.size()] : static_cast<char>(rng() % 256);
    }
    try {
      parse_qid(s, ctx);
    } catch (const Error&) {
    }
    try {
      parse_rep_file(s);
    } catch (const Error&) {
    }
    try {
      parse_system_file(s, PrimeField(2));
    } catch (const Error&) {
    }
  }
}
