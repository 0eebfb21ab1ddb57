// Command-line front end: reads one S-expression per input file.
//   exit 0  success
//   exit 1  domain failure, reason code on stderr
//   exit 2  parse or usage error

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "natded/atrans.h"
#include "natded/classes.h"
#include "natded/derived.h"
#include "natded/error.h"
#include "natded/search.h"
#include "natded/sexpr.h"

namespace {

using namespace natded;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TheoryId theory_arg(const std::string& name) {
  auto th = parse_theory(name);
  if (!th) throw UsageError("unknown theory " + name);
  return *th;
}

std::string judgement(const Proof& m, TheoryId th) {
  std::string out(theory_name(th));
  for (const auto& [key, u] : m.free_assumptions()) {
    out += " " + print_sexpr(Sexpr::list(
                     {Sexpr::symbol("assume"), Sexpr::symbol(u.name),
                      Sexpr::symbol(std::to_string(u.index)),
                      to_sexpr(u.formula)}));
  }
  return out + " ⊢ " + print(m.conclusion());
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"natded: proof checking, formula classes and translations"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file");

  std::string file, theory, mode = "classified";
  std::size_t depth = 6;
  std::vector<std::string> certs;
  bool with_certs = false;

  auto* check = app.add_subcommand("check", "Check a proof and print its judgement");
  check->add_option("file", file)->required();
  check->add_option("--theory", theory)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Print class membership");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_flag("--certificates", with_certs, "Also print certificates");

  auto* translate = app.add_subcommand("translate", "Refined A-translation");
  translate->add_option("premise", file)->required();
  translate->add_option("certs", certs, "D and G certificates (certified mode)");
  translate->add_option("--mode", mode)->check(
      CLI::IsMember({"classified", "certified"}));

  auto* gg = app.add_subcommand("gg", "Goedel-Gentzen translation");
  gg->add_option("file", file)->required();

  auto* efq = app.add_subcommand("efq", "Ex-falso proof of F -> A");
  efq->add_option("file", file)->required();
  efq->add_option("--theory", theory)->required();

  auto* search = app.add_subcommand("search", "Bounded proof search");
  search->add_option("file", file)->required();
  search->add_option("--theory", theory)->required();
  search->add_option("--depth", depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostringstream out;
  try {
    if (check->parsed()) {
      TheoryId th = theory_arg(theory);
      Proof m = parse_proof(slurp(file), th);
      out << judgement(m, th) << "\n";
    } else if (classify_cmd->parsed()) {
      Formula a = parse_formula(slurp(file));
      ClassReport r = classify(a, with_certs);
      out << "D=" << yes_no(r.in_D) << " G=" << yes_no(r.in_G)
          << " R=" << yes_no(r.in_R) << " I=" << yes_no(r.in_I)
          << " Q=" << yes_no(r.in_Q) << " QF=" << yes_no(r.in_QF) << "\n";
      const std::pair<const char*, const std::optional<Proof>*> named[] = {
          {"D", &r.cert_D}, {"G", &r.cert_G}, {"R", &r.cert_R}, {"I", &r.cert_I}};
      for (const auto& [name, cert] : named) {
        if (*cert) out << name << "-certificate " << print(**cert) << "\n";
      }
    } else if (translate->parsed()) {
      Proof premise = parse_proof(slurp(file), TheoryId::kMA);
      NameSupply supply;
      Proof result = [&] {
        if (mode == "classified") {
          if (!certs.empty()) throw UsageError("classified mode takes no certificates");
          PremiseShape s = read_premise(premise.conclusion());
          return a_translate_classified(s.d, s.g, s.x, premise, supply);
        }
        if (certs.size() != 2) throw UsageError("certified mode needs two certificates");
        TranslationInput in = TranslationInput::from_premise(
            premise, parse_proof(slurp(certs[0]), TheoryId::kMA),
            parse_proof(slurp(certs[1]), TheoryId::kMA));
        return refined_a_translate(in, supply);
      }();
      out << print(result) << "\n";
    } else if (gg->parsed()) {
      Formula a = parse_formula(slurp(file));
      out << print(gg_translate(a)) << "\n";
      if (in_language(a, TheoryId::kNA)) out << print(prove_gg_equiv(a)) << "\n";
    } else if (efq->parsed()) {
      Formula a = parse_formula(slurp(file));
      out << print(prove_efq(a, theory_arg(theory))) << "\n";
    } else if (search->parsed()) {
      Formula a = parse_formula(slurp(file));
      SearchVerdict v = bounded_derivable(a, theory_arg(theory), depth);
      if (v.derivable()) {
        out << "derivable\n" << print(*v.witness) << "\n";
      } else {
        out << "unknown " << v.depth << "\n";
      }
    }
  } catch (const KernelError& e) {
    std::cerr << e.reason() << "\n" << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse-error\n" << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage-error\n" << e.what() << "\n";
    return 2;
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "usage-error\ncannot write " << out_path << "\n";
      return 2;
    }
    f << out.str();
  }
  return 0;
}
