#include "repgeo/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "repgeo/audit.hpp"
#include "repgeo/report.hpp"
#include "repgeo/textio.hpp"

namespace repgeo {

int exit_code(std::string_view outcome) {
  if (outcome == "holds" || outcome == "equivalent" || outcome == "member" || outcome == "ok") return 0;
  if (outcome == "fails" || outcome == "not-equivalent" || outcome == "non-member") return 1;
  if (outcome == "unknown") return 2;
  return 3;
}

namespace {

struct Options {
  std::string first;
  std::string second;
  std::string formula;
  std::string system;
  std::string member;
  std::string output;
  bool action_type = false;
  bool reps = false;
  std::uint32_t p = 2;
  SearchBounds bounds;
  std::size_t max_vars = 1;
};

class Session {
 public:
  std::string read_file(const std::string& path) {
    current_file_ = path;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Representation load_rep(const std::string& path) {
    auto text = read_file(path);
    auto rep = parse_rep_file(text);
    current_file_.clear();
    return rep;
  }

  FiniteGroup load_group(const std::string& path) {
    auto text = read_file(path);
    auto g = parse_group_file(text);
    current_file_.clear();
    return g;
  }

  /// Labels errors raised while parsing an inline argument.
  void parsing(std::string label) { current_file_ = std::move(label); }
  void done_parsing() { current_file_.clear(); }
  const std::string& current_file() const { return current_file_; }

 private:
  std::string current_file_;
};

Json at_witness_json(const Representation& r, const Representation& s, const AtWitness& w) {
  Json system = Json::array();
  for (const auto& u : w.system) system.push_back(serialize(u) + " = 0");
  return Json{{"system", system},
              {"candidate", serialize(w.candidate) + " = 0"},
              {"in_first_closure", w.in_first},
              {"in_second_closure", w.in_second},
              {"verified", verify_at_witness(r, s, w)}};
}

void add_verdict(Json& result, const Verdict& v, const Representation* r, const Representation* s) {
  result["outcome"] = to_string(v.outcome);
  Json cert = Json::object();
  if (v.first_image) cert["first_image"] = to_json(*v.first_image);
  if (v.second_image) cert["second_image"] = to_json(*v.second_image);
  if (v.group_forward) cert["forward"] = to_json(*v.group_forward);
  if (v.group_backward) cert["backward"] = to_json(*v.group_backward);
  if (v.forward) cert["forward"] = to_json(*v.forward);
  if (v.backward) cert["backward"] = to_json(*v.backward);
  if (!cert.empty()) result["certificate"] = cert;

  Json witness = Json::object();
  if (v.inseparable) witness["inseparable"] = to_json(*v.inseparable, v.inseparable_side);
  if (v.separating_qid) witness["separating_qid"] = serialize(*v.separating_qid);
  if (v.at_witness && r && s) witness["at_witness"] = at_witness_json(*r, *s, *v.at_witness);
  if (!witness.empty()) result["witness"] = witness;
  result["bounds"] = to_json(v.bounds);
}

// Re-evaluates a closure counterexample atom by atom.
bool counterexample_valid(const Representation& rep, const std::vector<Atom>& system, const Atom& atom,
                          const Assignment& asg) {
  for (const auto& a : system) {
    if (!eval_atom(rep, asg, a)) return false;
  }
  return !eval_atom(rep, asg, atom);
}

void run_closure(Session& session, const Options& opt, Json& result) {
  auto rep = session.load_rep(opt.first);
  auto text = session.read_file(opt.system);
  auto sys = parse_system_file(text, rep.field());
  session.parsing("--member");
  auto atom = parse_atom(opt.member, sys.context);
  session.done_parsing();

  std::optional<Assignment> cex;
  std::vector<Atom> atoms;
  if (opt.action_type) {
    if (!sys.system.is_action_type()) {
      throw InvalidArgument("--action-type needs a system without group equations");
    }
    if (!atom.is_module()) throw InvalidArgument("--action-type needs a module atom '<expr> = 0'");
    for (const auto& u : sys.system.module_part()) atoms.push_back(Atom::module_zero(u));
    cex = at_closure_counterexample(rep, sys.system.module_part(), atom.module());
  } else {
    atoms = sys.system.atoms();
    cex = closure_counterexample(rep, sys.system, atom);
  }
  result["outcome"] = cex ? "non-member" : "member";
  if (cex) {
    result["witness"] = Json{{"assignment", to_json(rep, sys.context, *cex)},
                             {"verified", counterexample_valid(rep, atoms, atom, *cex)}};
  } else {
    result["certificate"] =
        Json{{"solutions", solution_set(rep, sys.system).solutions.size()}};
  }
}

void run_command(const std::string& name, Session& session, const Options& opt, Json& result) {
  if (name == "check-geo-groups") {
    auto g = session.load_group(opt.first);
    auto h = session.load_group(opt.second);
    add_verdict(result, geo_equivalent(g, h, opt.bounds), nullptr, nullptr);
  } else if (name == "check-geo") {
    auto r = session.load_rep(opt.first);
    auto s = session.load_rep(opt.second);
    add_verdict(result, geo_equivalent(r, s, opt.bounds), &r, &s);
  } else if (name == "check-at") {
    auto r = session.load_rep(opt.first);
    auto s = session.load_rep(opt.second);
    add_verdict(result, at_equivalent(r, s, opt.bounds), &r, &s);
  } else if (name == "qid") {
    auto rep = session.load_rep(opt.first);
    session.parsing("formula");
    auto ctx = infer_context(opt.formula, rep.field());
    auto q = parse_qid(opt.formula, ctx);
    session.done_parsing();
    auto check = fulfills_qid(rep, q);
    result["outcome"] = check.holds ? "holds" : "fails";
    result["certificate"] =
        Json{{"qid", serialize(q)}, {"assignments_checked", check.assignments_checked}};
    if (check.witness) {
      result["witness"] = Json{{"assignment", to_json(rep, ctx, *check.witness)}};
    }
  } else if (name == "closure") {
    run_closure(session, opt, result);
  } else if (name == "faithful") {
    auto rep = session.load_rep(opt.first);
    auto image = faithful_image(rep);
    result["outcome"] = "ok";
    result["certificate"] = to_json(image);
    if (!opt.output.empty()) {
      std::ofstream out(opt.output, std::ios::binary);
      out << serialize(image.quotient);
      if (!out) throw InvalidArgument("cannot write file '" + opt.output + "'");
      result["certificate"]["written"] = opt.output;
    }
  } else if (name == "homs") {
    Json homs = Json::array();
    if (opt.reps) {
      auto r = session.load_rep(opt.first);
      auto s = session.load_rep(opt.second);
      for (const auto& h : enumerate_rep_homs(r, s)) homs.push_back(to_json(h));
    } else {
      auto g = session.load_group(opt.first);
      auto h = session.load_group(opt.second);
      for (const auto& f : enumerate_group_homs(g, h)) homs.push_back(to_json(f));
    }
    result["outcome"] = "ok";
    result["certificate"] = Json{{"count", homs.size()}, {"homs", homs}};
  } else if (name == "paper-demo") {
    auto report = audit_counterexample(opt.p, opt.bounds);
    bool verified = std::all_of(report.claims.begin(), report.claims.end(),
                                [](const Claim& c) { return c.evidence_verified; });
    result["outcome"] = verified ? "ok" : "fails";
    Json summary = Json::array();
    for (const auto& c : report.claims) summary.push_back(c.id + " " + to_string(c.status));
    result["summary"] = summary;
    result["certificate"] = to_json(report);
    result["bounds"] = to_json(report.bounds);
  }
}

Json inputs_for(const std::string& name, const Options& opt) {
  if (name == "paper-demo") return Json{{"p", opt.p}};
  Json in = Json::object();
  in["first"] = opt.first;
  if (name == "check-geo-groups" || name == "check-geo" || name == "check-at" || name == "homs") {
    in["second"] = opt.second;
  }
  if (name == "qid") in["formula"] = opt.formula;
  if (name == "closure") {
    in["system"] = opt.system;
    in["member"] = opt.member;
    in["action_type"] = opt.action_type;
  }
  if (name == "homs") in["reps"] = opt.reps;
  return in;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic geometry of finite group representations over GF(p)", "repgeo"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool timing = false;
  app.add_flag("--json", json, "Print the result as JSON");
  app.add_flag("--timing", timing, "Include timing_ms in the output");

  Options opt;
  auto two_inputs = [&](CLI::App* sub, const char* a, const char* b) {
    sub->add_option(a, opt.first, "First input file")->required();
    sub->add_option(b, opt.second, "Second input file")->required();
  };
  two_inputs(app.add_subcommand("check-geo-groups", "Decide geometric equivalence of two groups"),
             "G1", "G2");
  two_inputs(app.add_subcommand("check-geo", "Decide geometric equivalence of two representations"),
             "R1", "R2");
  auto* at = app.add_subcommand("check-at", "Semi-decide action type geometric equivalence");
  two_inputs(at, "R1", "R2");
  at->add_option("--max-word-len", opt.bounds.max_word_length, "Longest word in candidates")
      ->capture_default_str();
  at->add_option("--max-terms", opt.bounds.max_terms, "Most terms per candidate")
      ->capture_default_str();
  at->add_option("--max-vars", opt.max_vars, "Number of x and of y variables")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();

  auto* qid = app.add_subcommand("qid", "Check a quasi-identity on a representation");
  qid->add_option("R", opt.first, "Representation file")->required();
  qid->add_option("formula", opt.formula, "Quasi-identity, e.g. \"x*y - x = 0 => y = 1\"")->required();

  auto* closure = app.add_subcommand("closure", "Closure membership of an atom");
  closure->add_option("R", opt.first, "Representation file")->required();
  closure->add_option("--system", opt.system, "System file")->required();
  closure->add_option("--member", opt.member, "Atom to test")->required();
  closure->add_flag("--action-type", opt.action_type, "Use the action type closure");

  auto* faithful = app.add_subcommand("faithful", "Faithful image of a representation");
  faithful->add_option("R", opt.first, "Representation file")->required();
  faithful->add_option("-o,--output", opt.output, "Write the image as a representation file");

  auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms");
  two_inputs(homs, "A", "B");
  homs->add_flag("--reps", opt.reps, "Inputs are representation files");

  auto* demo = app.add_subcommand("paper-demo", "Audit the counterexample claims");
  demo->add_option("--p", opt.p, "Field characteristic")->check(CLI::IsMember({2u, 3u, 5u}))
      ->capture_default_str();

  std::vector<const char*> argv{"repgeo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }
  opt.bounds.max_xvars = opt.bounds.max_yvars = opt.max_vars;

  const std::string name = app.get_subcommands().front()->get_name();
  Json result{{"command", name}, {"inputs", inputs_for(name, opt)}};
  Session session;
  const auto start = std::chrono::steady_clock::now();
  try {
    run_command(name, session, opt, result);
  } catch (const Error& e) {
    result["outcome"] = "error";
    Json error = to_json(e);
    if (!session.current_file().empty()) error["source"] = session.current_file();
    result["error"] = error;
  } catch (const std::exception& e) {
    result["outcome"] = "error";
    result["error"] = Json{{"type", "internal"}, {"message", e.what()}};
  }
  if (timing) {
    result["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  const std::string outcome = result["outcome"].get<std::string>();
  if (json) {
    out << result.dump(2) << "\n";
  } else {
    out << render_text(result);
  }
  if (outcome == "error") {
    const auto& e = result["error"];
    err << "error: ";
    if (e.contains("source")) err << e["source"].get<std::string>() << ":";
    if (e.contains("span")) {
      err << e["span"]["line"].get<std::size_t>() << ":" << e["span"]["column"].get<std::size_t>()
          << ": ";
    } else if (e.contains("source")) {
      err << " ";
    }
    err << e["message"].get<std::string>() << "\n";
  }
  return exit_code(outcome);
}

}  // namespace repgeo
