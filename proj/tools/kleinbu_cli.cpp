// Command-line front end: classify, witness, certify, braid-eval,
// kernel-project, selftest.
//
// Exit codes: 0 success, 1 property false or verification failure,
// 2 usage, parse or precondition error, 3 unsupported family.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kleinbu/certificate.hpp"
#include "kleinbu/classifier.hpp"
#include "kleinbu/errors.hpp"
#include "kleinbu/expr.hpp"
#include "kleinbu/kernel.hpp"
#include "kleinbu/serialize.hpp"
#include "kleinbu/suites.hpp"
#include "kleinbu/witness.hpp"

using namespace kleinbu;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

// Either two images or an explicit representative.
struct ClassArgs {
  std::optional<std::string> img10;
  std::optional<std::string> img01;
  std::optional<int> type;
  std::int64_t i = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--img10", img10, "image of (1,0) as \"(m,n)\"");
    cmd->add_option("--img01", img01, "image of (0,1) as \"(m,n)\"");
    cmd->add_option("--type", type, "representative type 1-4")->check(CLI::Range(1, 4));
    cmd->add_option("--i", i, "parity parameter for types 1-3");
    cmd->add_option("--r1", r1, "type 4 parameter");
    cmd->add_option("--r2", r2, "type 4 parameter");
    cmd->add_option("--s1", s1);
    cmd->add_option("--s2", s2);
  }

  HomClass resolve() const {
    bool const by_images = img10 || img01;
    if (by_images == type.has_value()) throw PreconditionError("give either --img10/--img01 or --type");
    if (by_images) {
      if (!img10 || !img01) throw PreconditionError("both --img10 and --img01 are required");
      return normalize({parse_klein(*img10), parse_klein(*img01)});
    }
    HomClass const c = *type == 4 ? HomClass::type4(r1, r2, s1, s2) : HomClass{*type, i, 0, 0, s1, s2};
    check_shape(c);
    return c;
  }
};

void emit(bool json, Json const& doc, std::string const& text) {
  if (json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

Json kernel_json(KernelVector const& v) {
  Json terms = Json::array();
  for (auto const& [b, c] : v) terms.push_back({{"k", b.k}, {"l", b.l}, {"c", c}});
  return terms;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borsuk-Ulam decisions for maps between Klein bottles"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  ClassArgs classify_args;
  auto* classify = app.add_subcommand("classify", "normalise a homomorphism and decide the Borsuk-Ulam property");
  classify_args.attach(classify);

  ClassArgs witness_args;
  bool search = false;
  int bounds = 4;
  std::int64_t coord = 2;
  std::int64_t radius = 0;
  auto* witness = app.add_subcommand("witness", "explicit braid pair for a class without the property");
  witness_args.attach(witness);
  witness->add_flag("--search", search, "bounded exhaustive search instead of the construction");
  witness->add_option("--bounds", bounds, "search: maximal number of word symbols")->check(CLI::Range(0, 8));
  witness->add_option("--coord", coord, "search: bound on |m|, |n| of twists")->check(CLI::Range(0, 6));
  witness->add_option("--radius", radius, "search: allow B_{k,l} with max(|k|,|l|) <= radius")->check(CLI::Range(0, 3));

  ClassArgs certify_args;
  CertificateBounds cert_bounds;
  auto* certify = app.add_subcommand("certify", "bounded obstruction check for a class with the property");
  certify_args.attach(certify);
  certify->add_option("--window", cert_bounds.window, "basis window |k|,|l|")->check(CLI::Range(0, 30));
  certify->add_option("--mn", cert_bounds.mn, "parameter window |m|,|n|")->check(CLI::Range(0, 30));

  std::string expression;
  auto* braid_eval = app.add_subcommand("braid-eval", "evaluate a braid expression");
  braid_eval->add_option("expression", expression, "e.g. \"lsigma (B;0,0)\" or \"(u;1,0) inv (v;0,1)\"")->required();

  std::string word_text;
  auto* kernel_project = app.add_subcommand("kernel-project", "coordinates of a kernel word in the B_{k,l} basis");
  kernel_project->add_option("word", word_text)->required();

  std::string suite;
  std::uint64_t seed = 20240601;
  auto* selftest = app.add_subcommand("selftest", "run an invariant suite");
  selftest->add_option("--suite", suite, "suite name")->required();
  selftest->add_option("--seed", seed);

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) {
      HomClass const c = classify_args.resolve();
      Verdict const v = decide(c);
      Json doc;
      doc["class"] = to_json(c);
      doc["verdict"] = to_json(v);
      emit(json, doc, "class: " + format(c) + "\n" + format(v));
      return kOk;
    }
    if (*witness) {
      HomClass const c = witness_args.resolve();
      if (search) {
        SearchResult const r = search_witness(c, {bounds, coord, radius});
        std::string text = r.report ? format(*r.report) : "no witness within bounds for " + format(c);
        text += "\nsearched volume: " + std::to_string(r.volume);
        emit(json, to_json(r), text);
        return r.report ? kOk : kFalse;
      }
      WitnessReport const w = build_witness(c);
      emit(json, to_json(w), format(w));
      return w.checks.all() ? kOk : kFalse;
    }
    if (*certify) {
      CertificateReport const r = check_certificate(certify_args.resolve(), cert_bounds);
      emit(json, to_json(r), format(r));
      return r.success() ? kOk : kFalse;
    }
    if (*braid_eval) {
      BraidElt const b = eval_braid_expression(expression);
      Json doc{{"braid", format(b)}, {"word", format(b.w)}, {"m", b.t.m}, {"n", b.t.n}};
      emit(json, doc, format(b));
      return kOk;
    }
    if (*kernel_project) {
      Word const w = parse_word(word_text);
      KernelVector const v = project(w);
      Json doc{{"word", format(w)}, {"vector", format(v)}, {"terms", kernel_json(v)}};
      emit(json, doc, format(v));
      return kOk;
    }
    if (*selftest) {
      SuiteResult const r = run_suite(suite, seed);
      Json doc{{"suite", r.name},         {"passed", r.passed},     {"checks", r.checks},
               {"seconds", r.seconds},    {"failures", r.failures}, {"notes", r.notes}};
      std::string text = std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checks) +
                         " checks, seed " + std::to_string(seed) + ")";
      for (auto const& f : r.failures) text += "\n  failure: " + f;
      for (auto const& n : r.notes) text += "\n  note: " + n;
      emit(json, doc, text);
      return r.passed ? kOk : kFalse;
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (PreconditionError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (UnsupportedFamily const& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (ConsistencyError const& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kFalse;
  }
  return kUsage;
}
