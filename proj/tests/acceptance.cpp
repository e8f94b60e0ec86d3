// Acceptance checks. One [PASS]/[FAIL] line per criterion; exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "repgeo/audit.hpp"
#include "repgeo/cli.hpp"
#include "repgeo/textio.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace repgeo;
using testsupport::Rng;

namespace {

constexpr double kDemoBudgetMs = 5000.0;
constexpr double kOracleBudgetMs = 60000.0;

struct AcResult {
  bool pass;
  std::string detail;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

Json demo_json(const std::string& p, int& code) {
  std::vector<std::string> args{"paper-demo", "--p", p, "--json"};
  std::ostringstream out;
  std::ostringstream err;
  code = run(args, out, err);
  return Json::parse(out.str());
}

AcResult ac1() {
  const std::vector<std::string> expected{"C1 CONFIRMED", "C2 CONFIRMED", "C3 CONFIRMED",
                                          "C4 CONTRADICTED", "C5 CONFIRMED", "C6 CONTRADICTED"};
  std::string detail;
  bool pass = true;
  for (const std::string p : {"2", "3"}) {
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    auto j = demo_json(p, code);
    const double ms = ms_since(start);
    const auto& claims = j["certificate"]["claims"];
    bool ok = code == 0 && j["summary"] == Json(expected) && ms < kDemoBudgetMs;
    for (const auto& c : claims) ok = ok && c["evidence_verified"] == true;
    const auto& c4 = claims[3]["evidence"];
    ok = ok && c4["witness"]["x"] == "(1,1)" && c4["witness"]["y"] == "a";
    if (p == "2") ok = ok && c4["assignments_checked"] == 8;
    ok = ok && claims[4]["evidence"]["witness"]["y"] == "b";
    const auto& c6 = claims[5]["evidence"];
    ok = ok && c6["forward"]["verified"] == true && c6["backward"]["verified"] == true &&
         c6["forward"]["homs"].size() == 1 && c6["backward"]["homs"].size() == 2;
    pass = pass && ok;
    detail += "p=" + p + " " + fmt_ms(ms) + (ok ? " ok" : " MISMATCH") + "; ";
  }
  return {pass, detail + "budget " + fmt_ms(kDemoBudgetMs) + " per run"};
}

AcResult ac2() {
  Rng rng(2024);
  const auto start = std::chrono::steady_clock::now();
  int disagreements = 0;
  int held = 0;
  for (int i = 0; i < 50; ++i) {
    auto rep = testsupport::random_small_rep(rng);
    std::size_t nx = 1 + rng() % 2;
    std::size_t ny = 1 + rng() % 2;
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    for (std::size_t k = 1; k <= nx; ++k) xs.push_back("x" + std::to_string(k));
    for (std::size_t k = 1; k <= ny; ++k) ys.push_back("y" + std::to_string(k));
    FreeContext ctx(rep.field(), xs, ys);
    auto raw = testsupport::random_raw_qid(rng, nx, ny);
    auto q = parse_qid(testsupport::to_text(raw), ctx);
    bool fast = fulfills_qid(rep, q).holds;
    bool slow = testsupport::naive_fulfills(testsupport::naive_copy(rep), raw, nx, ny);
    disagreements += fast != slow;
    held += slow;
  }
  const double ms = ms_since(start);
  return {disagreements == 0 && ms < kOracleBudgetMs,
          "50 instances, " + std::to_string(disagreements) + " disagreements, " + std::to_string(held) +
              " hold; " + fmt_ms(ms) + " < " + fmt_ms(kOracleBudgetMs)};
}

AcResult ac3() {
  Rng rng(33);
  int failures = 0;
  int nontrivial_kernels = 0;
  for (int i = 0; i < 20; ++i) {
    auto rep = testsupport::random_small_rep(rng);
    auto image = faithful_image(rep);
    nontrivial_kernels += image.quotient.group().order() < rep.group().order();
    bool ok = at_equivalent(rep, image.quotient).outcome == repgeo::Outcome::equivalent &&
              !find_at_witness(rep, image.quotient).has_value();
    failures += !ok;
  }
  return {failures == 0, "20 representations (" + std::to_string(nontrivial_kernels) +
                             " with nontrivial kernel), " + std::to_string(failures) + " failures"};
}

AcResult ac4() {
  Rng rng(44);
  std::vector<Representation> reps;
  for (int i = 0; i < 10; ++i) reps.push_back(testsupport::random_rep(rng, 2, 1 + rng() % 2));
  int equivalent = 0;
  int violations = 0;
  std::uint64_t qids = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (geo_equivalent(reps[i], reps[j]).outcome != repgeo::Outcome::equivalent) continue;
      ++equivalent;
      violations += find_at_witness(reps[i], reps[j]).has_value();
      FreeContext ctx(PrimeField(2), {"x1", "x2"}, {"y1", "y2"});
      for (int k = 0; k < 100; ++k) {
        auto q = parse_qid(testsupport::to_text(testsupport::random_raw_qid(rng, 2, 2)), ctx);
        violations += fulfills_qid(reps[i], q).holds != fulfills_qid(reps[j], q).holds;
        ++qids;
      }
    }
  }
  return {violations == 0 && equivalent > 0,
          "45 pairs, " + std::to_string(equivalent) + " geo-equivalent, " + std::to_string(qids) +
              " quasi-identities compared, " + std::to_string(violations) + " violations"};
}

AcResult ac5() {
  Rng rng(55);
  int failures = 0;
  int members_checked = 0;
  for (int i = 0; i < 100; ++i) {
    auto rep = testsupport::random_small_rep(rng);
    auto ctx = search_context(rep.field(), 1, 1);
    auto candidates = enumerate_module_candidates(ctx, SearchBounds{});
    auto words = enumerate_words(ctx, 2);
    std::vector<Atom> atoms;
    for (const auto& u : candidates) atoms.push_back(Atom::module_zero(u));
    for (std::size_t k = 1; k < words.size(); ++k) atoms.push_back(Atom::group_one(words[k]));

    EquationSystem t(ctx);
    std::size_t size = 1 + rng() % 2;
    for (std::size_t k = 0; k < size; ++k) t = t.with(atoms[rng() % atoms.size()]);
    for (const auto& a : t.atoms()) failures += !in_closure(rep, t, a);

    const auto base = solution_set(rep, t).solutions;
    std::vector<Atom> members;
    for (const auto& a : atoms) {
      if (in_closure(rep, t, a)) members.push_back(a);
    }
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t k = 0; k < std::min<std::size_t>(5, members.size()); ++k) {
      failures += solution_set(rep, t.with(members[k])).solutions != base;
      ++members_checked;
    }
  }
  return {failures == 0, "100 instances, " + std::to_string(members_checked) +
                             " sampled members, " + std::to_string(failures) + " failures"};
}

AcResult ac6() {
  std::vector<FiniteGroup> groups{cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                  product_group(cyclic_group(2, "a"), cyclic_group(2, "b"))};
  int mismatches = 0;
  int pairs = 0;
  for (const auto& g : groups) {
    for (const auto& h : groups) {
      mismatches += enumerate_group_homs(g, h).size() != testsupport::naive_group_hom_count(g, h);
      ++pairs;
    }
  }
  PrimeField f2(2);
  auto r1 = swap_representation(f2);
  auto r2 = swap_with_kernel_representation(f2);
  const std::size_t v4_to_z2 = enumerate_group_homs(groups[4], groups[1]).size();
  const std::size_t r1_to_r1 = enumerate_rep_homs(r1, r1).size();
  mismatches += v4_to_z2 != 4;
  mismatches += r1_to_r1 != 8;
  mismatches += r1_to_r1 != testsupport::naive_rep_hom_count(r1, r1);

  std::vector<Representation> reps{r1, r2, trivial_representation(f2, 2, cyclic_group(2, "a"))};
  Rng rng(66);
  while (reps.size() < 8) {
    auto r = testsupport::random_rep(rng, 2, 1 + rng() % 2);
    if (r.group().order() <= 4) reps.push_back(r);
  }
  int rep_pairs = 0;
  for (const auto& r : reps) {
    for (const auto& s : reps) {
      mismatches += enumerate_rep_homs(r, s).size() != testsupport::naive_rep_hom_count(r, s);
      ++rep_pairs;
    }
  }
  return {mismatches == 0, std::to_string(pairs) + " group pairs, " + std::to_string(rep_pairs) +
                               " rep pairs; |Hom(Z2xZ2,Z2)| = " + std::to_string(v4_to_z2) +
                               ", |Hom_rep(R1,R1)| = " + std::to_string(r1_to_r1) + "; " +
                               std::to_string(mismatches) + " mismatches"};
}

AcResult ac7() {
  Rng rng(77);
  int round_trips = 0;
  int failures = 0;
  while (round_trips < 200) {
    auto rep = testsupport::random_small_rep(rng);
    FreeContext ctx(rep.field(), {"x1", "x2"}, {"y1", "y2"});
    auto raw = testsupport::random_raw_qid(rng, 2, 2);
    auto q = parse_qid(testsupport::to_text(raw), ctx);
    EquationSystem sys(ctx);
    for (const auto& a : q.premises()) sys = sys.with(a);
    switch (round_trips % 5) {
      case 0:
        failures += !(parse_rep_file(serialize(rep)) == rep);
        break;
      case 1:
        failures += !(parse_group_file(serialize(rep.group())) == rep.group());
        break;
      case 2:
        failures += !(parse_qid(serialize(q), ctx) == q);
        break;
      case 3:
        failures += !(parse_system_file(serialize(sys), rep.field()).system == sys);
        break;
      default:
        failures += !(parse_atom(serialize(q.conclusion()), ctx) == q.conclusion());
        break;
    }
    ++round_trips;
  }

  // Half uniform bytes, half mutations of a valid file.
  const std::string seed =
      "field p=3\ngroup product(cyclic(2) as a, cyclic(3) as c)\ndim 1\n"
      "act a = [[2]]\nact c = [[1]]\nact ac = [[2]]\n";
  FreeContext ctx(PrimeField(3), {"x"}, {"y"});
  int crashes = 0;
  const int fuzz = 100000;
  for (int i = 0; i < fuzz; ++i) {
    std::string s;
    if (i % 2) {
      s = seed;
      int edits = 1 + rng() % 4;
      for (int k = 0; k < edits; ++k) s[rng() % s.size()] = static_cast<char>(rng() % 256);
    } else {
      int len = rng() % 64;
      for (int k = 0; k < len; ++k) s += static_cast<char>(rng() % 256);
    }
    for (int target = 0; target < 3; ++target) {
      try {
        if (target == 0) parse_rep_file(s);
        if (target == 1) parse_qid(s, ctx);
        if (target == 2) parse_system_file(s, PrimeField(2));
      } catch (const Error&) {
      } catch (...) {
        ++crashes;
      }
    }
  }
  return {failures == 0 && crashes == 0,
          std::to_string(round_trips) + " round trips, " + std::to_string(failures) + " failures; " +
              std::to_string(fuzz) + " fuzz inputs x 3 parsers, " + std::to_string(crashes) +
              " non-library exceptions"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<AcResult()>>> criteria{
      {"AC1 counterexample audit statuses at p=2 and p=3", ac1},
      {"AC2 fulfills_qid agrees with the naive oracle", ac2},
      {"AC3 faithful images are action type equivalent", ac3},
      {"AC4 geometric equivalence implies action type and shared quasi-identities", ac4},
      {"AC5 closure laws", ac5},
      {"AC6 homomorphism counts match brute force", ac6},
      {"AC7 textio round trip and fuzz", ac7},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    AcResult o{false, ""};
    const auto start = std::chrono::steady_clock::now();
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << " ("
              << fmt_ms(ms_since(start)) << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
