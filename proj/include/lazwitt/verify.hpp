#pragma once

#include <string>
#include <vector>

namespace lazwitt {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample or summary
};

struct SuiteOptions {
  long p = 2;
  long q = 2;
  long t = 0;
  long n = -1;       // range/order knob; -1 = suite default
  long m = 3;        // truncation order for witt/jet suites
  long window = 3;   // coordinate window
  long count = -1;   // random sample count; -1 = suite default
  unsigned long long seed = 42;
};

// Named verification suites (seeded, deterministic, exact):
//   ring-axioms frobenius-shift polynomiality fv-identity exact-sequence
//   teichmuller pi-expansion lemma63 phi-hom retraction jets-triangle
//   normal-form
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteOptions& opt);

}  // namespace lazwitt
