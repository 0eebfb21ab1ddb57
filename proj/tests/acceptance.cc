// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Fixture directory and CLI path come from the build.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "natded/atrans.h"
#include "natded/classes.h"
#include "natded/derived.h"
#include "natded/error.h"
#include "natded/generate.h"
#include "natded/search.h"
#include "natded/sexpr.h"
#include "test_support.h"

namespace natded {
namespace {

using F = Formula;
namespace fs = std::filesystem;

constexpr TheoryId kNA = TheoryId::kNA;
constexpr TheoryId kMA = TheoryId::kMA;
constexpr TheoryId kHA = TheoryId::kHA;
constexpr TheoryId kTheories[] = {kNA, kMA, TheoryId::kHA, TheoryId::kPA};

const fs::path kFixtures = NATDED_FIXTURE_DIR;

// Raised by require(); the message becomes the FAIL detail.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

bool checks(const Proof& m, const F& target, TheoryId th) {
  return m.closed() && alpha_eq(m.conclusion(), target) &&
         theory_leq(m.min_theory(), th) && testing::cache_sound(m);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct FixtureLine {
  std::string file;
  TheoryId theory;
  std::string expect;  // "ok" or a reason code
};

std::vector<FixtureLine> manifest() {
  std::vector<FixtureLine> out;
  std::ifstream in(kFixtures / "kernel" / "manifest.txt");
  std::string file, th, expect;
  while (in >> file >> th >> expect) {
    out.push_back({file, *parse_theory(th), expect});
  }
  return out;
}

// The reason code the library reports for a fixture, or "ok".
std::string run_fixture(const FixtureLine& f) {
  try {
    Proof m = parse_proof(slurp(kFixtures / "kernel" / f.file), f.theory);
    return testing::cache_sound(m) && theory_leq(m.min_theory(), f.theory)
               ? "ok"
               : "unsound";
  } catch (const KernelError& e) {
    return std::string(e.reason());
  } catch (const ParseError&) {
    return "parse-error";
  }
}

struct CliResult {
  int status;
  std::string output;  // stdout and stderr interleaved
};

CliResult cli(const std::string& args) {
  std::string cmd = std::string(NATDED_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Failure("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// Premise lam d. lam k. k t truth for D = T.
Proof truth_premise(const F& g, const ObjVar& x, const Term& t) {
  AssumptionVar ud{"d", 1, F::truth()};
  AssumptionVar uk{"k", 1, F::all(x, F::imp(g, F::bot()))};
  NameSupply supply(10);
  Proof kt = Proof::all_elim(Proof::assume(uk), t, supply);
  Proof body = Proof::imp_elim(kt, Proof::axiom(AxiomId::truth(), kNA));
  return Proof::imp_intro(ud, Proof::imp_intro(uk, body));
}

bool translation_ok(const Proof& out, const F& d, const F& g, const ObjVar& x) {
  return checks(out, F::imp(subst_bot_false(d), F::ex(x, subst_bot_false(g))),
                kHA);
}

// 1. Kernel fixtures.
std::string kernel_fixtures() {
  int kernel = 0;
  for (const FixtureLine& f : manifest()) {
    if (f.expect == "parse-error") continue;
    ++kernel;
    std::string got = run_fixture(f);
    require(got == f.expect, f.file + ": expected " + f.expect + ", got " + got);
  }
  require(kernel == 30, "expected 30 kernel fixtures, found " +
                            std::to_string(kernel));
  return "30/30 fixtures as annotated";
}

// 2. Ex falso per theory.
std::string ex_falso() {
  for (TheoryId th : kTheories) {
    Generator gen({.seed = 1000 + static_cast<std::uint64_t>(th),
                   .max_size = 12, .language = th});
    for (int i = 0; i < 500; ++i) {
      F a = gen.formula();
      require(checks(prove_efq(a, th), efq_target(a), th),
              "efq failed in " + std::string(theory_name(th)) + ": " + print(a));
    }
  }
  return "2000/2000 proofs check";
}

// 3. Bot substitution commutes with conclusions and assumptions.
std::string bot_substitution() {
  Generator gen({.seed = 2001, .max_size = 8, .language = kMA});
  Generator sgen({.seed = 2002, .max_size = 5, .language = kMA});
  Generator hgen({.seed = 2003, .max_size = 4, .language = kHA});
  for (int i = 0; i < 500; ++i) {
    Proof m = gen.ma_proof_with_bot(12);
    F s = i % 3 == 2 ? hgen.formula() : sgen.formula();
    NameSupply supply = supply_after(m);
    Proof out = subst_bot_proof(m, s, supply);
    require(alpha_eq(out.conclusion(), subst_bot(m.conclusion(), s, supply)),
            "conclusion mismatch for " + print(m));
    require(testing::cache_sound(out), "unsound result for " + print(m));
    const AssumptionMap& before = m.free_assumptions();
    const AssumptionMap& after = out.free_assumptions();
    require(before.size() == after.size(), "assumption count changed");
    for (const auto& [key, u] : after) {
      require(!before.contains(key), "assumption not renamed");
      bool matched = false;
      for (const auto& [k0, u0] : before) {
        matched = matched || (u0.name == u.name &&
                              alpha_eq(subst_bot(u0.formula, s, supply), u.formula));
      }
      require(matched, "assumption image mismatch for " + print(m));
    }
  }
  return "500/500 proofs commute";
}

// 4. Goedel-Gentzen equivalence.
std::string goedel_gentzen() {
  Generator gen({.seed = 3001, .max_size = 12, .language = kNA});
  for (int i = 0; i < 300; ++i) {
    F a = gen.formula();
    require(in_language(gg_translate(a), kNA), "translation leaves NA: " + print(a));
    require(checks(prove_gg_equiv(a), gg_equiv_target(a), kNA),
            "equivalence fails: " + print(a));
  }
  return "300/300 equivalences check";
}

// 5. Classification agrees with certification.
std::string class_agreement() {
  Generator gen({.seed = 4001, .max_size = 12, .language = kMA});
  const ClassId classes[] = {ClassId::kDefinite, ClassId::kGoal,
                             ClassId::kRelevant, ClassId::kIrrelevant};
  int counts[4] = {};
  for (int i = 0; i < 1000; ++i) {
    F a = gen.formula();
    ClassReport r = classify(a);
    require(!r.in_R || r.in_D, "R not within D: " + print(a));
    require(!r.in_I || r.in_G, "I not within G: " + print(a));
    for (int c = 0; c < 4; ++c) {
      std::optional<Proof> cert = certify(a, classes[c]);
      require(cert.has_value() == r.holds(classes[c]),
              "flag/certificate disagree on " + std::string(class_name(classes[c])) +
                  ": " + print(a));
      if (cert) {
        require(checks(*cert, certificate_target(a, classes[c]), kMA),
                "certificate fails: " + print(a));
        ++counts[c];
      }
    }
  }
  std::ostringstream detail;
  detail << "1000 formulas, D=" << counts[0] << " G=" << counts[1]
         << " R=" << counts[2] << " I=" << counts[3];
  require(counts[0] && counts[1] && counts[2] && counts[3], "empty class");
  return detail.str();
}

// 6. Case distinction for Q-formulas.
std::string case_distinction() {
  Generator gen({.seed = 5001, .max_size = 10, .language = kNA});
  ObjVar z{"z", 0, Type::boolean()};
  const std::pair<F, TheoryId> goals[] = {
      {F::falsity(), kNA},
      {F::bot(), kMA},
      {F::ex(z, F::disj(F::atom(Term::var(z)), F::truth())), kHA},
  };
  for (int i = 0; i < 200; ++i) {
    F a = gen.q_formula(10);
    require(in_Q(a), "generator left Q");
    for (const auto& [s, th] : goals) {
      require(checks(prove_case_distinction(a, s, th),
                     case_distinction_target(a, s), th),
              "case distinction fails: " + print(a));
    }
  }
  return "600/600 proofs check";
}

// 7. A provable D-property outside D.
std::string definite_boundary() {
  DefiniteGap gap = definite_gap_witness();
  require(!classify(gap.formula).in_D, "boundary formula classified as D");
  require(checks(gap.proof, certificate_target(gap.formula, ClassId::kDefinite), kMA),
          "boundary proof does not check");
  return "outside D, property proved in MA";
}

// 8. End-to-end refined A-translation.
std::string a_translation() {
  ObjVar n{"n", 0, Type::nat()};
  ObjVar b{"b", 0, Type::boolean()};
  F gb = F::atom(Term::var(b));
  struct Fixed {
    F g;
    ObjVar x;
    Term t;
  };
  const Fixed fixed[] = {{F::truth(), n, Term::zero()}, {gb, b, Term::tt()}};
  for (const Fixed& f : fixed) {
    Proof premise = truth_premise(f.g, f.x, f.t);
    Proof cert_d = *certify(F::truth(), ClassId::kDefinite);
    Proof cert_g = Proof::all_intro(f.x, *certify(f.g, ClassId::kGoal));
    NameSupply s1, s2;
    Proof certified = refined_a_translate(
        TranslationInput::from_premise(premise, cert_d, cert_g), s1);
    Proof classified = a_translate_classified(F::truth(), f.g, f.x, premise, s2);
    require(translation_ok(certified, F::truth(), f.g, f.x), "fixed instance fails");
    require(translation_ok(classified, F::truth(), f.g, f.x), "fixed instance fails");
  }
  Generator gen({.seed = 6001, .max_size = 8, .language = kMA});
  for (int i = 0; i < 20; ++i) {
    TranslationInstance inst = random_translation_instance(gen);
    require(classify(inst.d).in_D && classify(inst.g).in_G, "instance unclassified");
    NameSupply supply;
    Proof out = a_translate_classified(inst.d, inst.g, inst.x, inst.premise, supply);
    require(translation_ok(out, inst.d, inst.g, inst.x),
            "generated instance fails: " + print(inst.premise));
  }
  return "2 fixed + 20 generated instances give closed HA proofs";
}

// 9. Search never proves F; every witness checks.
std::string oracle_consistency() {
  for (TheoryId th : kTheories) {
    SearchVerdict v = bounded_derivable(F::falsity(), th, 8);
    require(!v.derivable() && v.depth == 8,
            "F not unknown in " + std::string(theory_name(th)));
  }
  int witnesses = 0;
  auto verify = [&](const F& a, TheoryId th, const SearchVerdict& v) {
    if (!v.derivable()) return;
    ++witnesses;
    require(v.witness && checks(*v.witness, a, th), "bad witness for " + print(a));
  };
  for (TheoryId th : kTheories) {
    Generator gen({.seed = 7001 + static_cast<std::uint64_t>(th), .max_size = 7,
                   .language = th});
    for (int i = 0; i < 200; ++i) {
      F a = gen.formula();
      verify(a, th, bounded_derivable(a, th, 5, {.max_nodes = 5000}));
    }
  }
  Generator qgen({.seed = 7101, .max_size = 8, .language = kNA});
  for (int i = 0; i < 50; ++i) {
    F target = case_distinction_target(qgen.q_formula(8), F::falsity());
    verify(target, kNA, bounded_derivable(target, kNA, 8));
  }
  require(witnesses > 0, "no witnesses produced");
  return "F unknown at depth 8 in all theories; " + std::to_string(witnesses) +
         " witnesses check";
}

// 10. Serialization round-trip and CLI exit codes.
std::string cli_round_trip() {
  int serialized = 0;
  for (const FixtureLine& f : manifest()) {
    std::string text = slurp(kFixtures / "kernel" / f.file);
    if (f.expect == "ok") {
      Proof m = parse_proof(text, f.theory);
      Proof back = parse_proof(print(m), f.theory);
      require(alpha_eq(m.conclusion(), back.conclusion()) &&
                  print(back) == print(m) &&
                  testing::same_assumptions(m.free_assumptions(),
                                            back.free_assumptions()),
              "round-trip differs: " + f.file);
      ++serialized;
    }
    CliResult r = cli("check " + (kFixtures / "kernel" / f.file).string() +
                      " --theory " + std::string(theory_name(f.theory)));
    int want = f.expect == "ok" ? 0 : f.expect == "parse-error" ? 2 : 1;
    require(r.status == want, f.file + ": exit " + std::to_string(r.status));
    if (want == 1) {
      require(first_line(r.output) == f.expect, f.file + ": reason " + first_line(r.output));
    }
  }

  CliResult truth = cli("check " + (kFixtures / "kernel" / "truth.prf").string() +
                        " --theory NA");
  require(first_line(truth.output) == "NA ⊢ (atom (tt))", "truth judgement");
  CliResult bot = cli("classify " + (kFixtures / "cli" / "bot.fml").string());
  require(bot.status == 0 &&
              first_line(bot.output).starts_with("D=yes G=yes R=yes I=no Q=no"),
          "classify bot: " + bot.output);
  require(cli("search " + (kFixtures / "cli" / "bot.fml").string() +
              " --theory XX").status == 2,
          "unknown theory not a usage error");

  // Translate through the CLI and re-check its printed output.
  ObjVar b{"b", 0, Type::boolean()};
  F g = F::atom(Term::var(b));
  fs::path premise_path = fs::temp_directory_path() / "natded_premise.prf";
  fs::path out_path = fs::temp_directory_path() / "natded_translated.prf";
  std::ofstream(premise_path) << print(truth_premise(g, b, Term::tt())) << "\n";
  CliResult tr = cli("--out " + out_path.string() + " translate " +
                     premise_path.string() + " --mode classified");
  require(tr.status == 0, "translate: " + tr.output);
  Proof translated = parse_proof(slurp(out_path), kHA);
  require(translation_ok(translated, F::truth(), g, b), "translated output fails");
  ++serialized;
  return std::to_string(serialized) + " round-trips, CLI exit codes match";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<std::string()> run;
};

}  // namespace
}  // namespace natded

int main() {
  using namespace natded;
  const Criterion criteria[] = {
      {1, "kernel fixtures", 1, kernel_fixtures},
      {2, "ex falso", 30, ex_falso},
      {3, "bot substitution", 60, bot_substitution},
      {4, "Goedel-Gentzen", 30, goedel_gentzen},
      {5, "class/certificate agreement", 120, class_agreement},
      {6, "case distinction", 60, case_distinction},
      {7, "definite boundary", 1, definite_boundary},
      {8, "refined A-translation", 60, a_translation},
      {9, "oracle consistency", 120, oracle_consistency},
      {10, "CLI round-trip", 10, cli_round_trip},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start).count();
    if (ok && secs >= c.limit_seconds) {
      ok = false;
      detail += " (over time limit)";
    }
    failed += !ok;
    std::printf("%s %d %s: %s [%.2fs < %.0fs]\n", ok ? "PASS" : "FAIL", c.id,
                c.name, detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
