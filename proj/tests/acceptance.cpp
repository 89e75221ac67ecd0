// Runs the nine acceptance suites and prints one PASS/FAIL line per criterion.
// A criterion passes when its suite is clean and finishes within its budget.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kleinbu/suites.hpp"

namespace {

struct Criterion {
  std::string suite;
  std::string title;
  double budget_seconds;
};

std::vector<Criterion> const& criteria() {
  static std::vector<Criterion> const list = {
      {"structural", "structural braid-group laws", 5},
      {"tilde", "kernel projection and closed forms", 10},
      {"q-identity", "exact word identities", 30},
      {"formula", "closed formulas vs engine", 10},
      {"witness-grid", "witness grid", 30},
      {"certificate-grid", "certificate grid", 60},
      {"specialization", "master equation specialisations", 10},
      {"classifier-cross", "classifier cross-validation", 120},
      {"mod4", "mod-4 invariance", 5},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kleinbu acceptance runner"};
  std::uint64_t seed = 20240601;
  bool verbose = false;
  app.add_option("--seed", seed, "seed for randomised suites");
  app.add_flag("-v,--verbose", verbose, "print suite notes");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  int index = 0;
  for (auto const& c : criteria()) {
    ++index;
    kleinbu::SuiteResult const r = kleinbu::run_suite(c.suite, seed);
    bool const in_budget = r.seconds <= c.budget_seconds;
    bool const pass = r.passed && in_budget;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s [%s] (%llu checks, %.2fs, budget %.0fs)%s\n", pass ? "PASS" : "FAIL", index,
                c.title.c_str(), c.suite.c_str(), static_cast<unsigned long long>(r.checks), r.seconds,
                c.budget_seconds, in_budget ? "" : " over budget");
    for (auto const& f : r.failures) std::printf("    failure: %s\n", f.c_str());
    if (verbose) {
      for (auto const& n : r.notes) std::printf("    note: %s\n", n.c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria().size()) - failed, criteria().size());
  return failed == 0 ? 0 : 1;
}
