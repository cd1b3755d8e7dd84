// Acceptance suite: runs every exit criterion exactly as stated, one
// pass/fail line per criterion, nonzero exit on any failure. All checks
// are exact symbolic equalities (tolerance zero); wall-clock budgets are
// printed for inspection.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "lazwitt/jets.hpp"
#include "lazwitt/lazjet.hpp"
#include "lazwitt/qpolys.hpp"
#include "lazwitt/verify.hpp"
#include "lazwitt/witt.hpp"

using namespace lazwitt;

namespace {

struct Criterion {
  int id;
  std::string label;
  bool pass;
  double seconds;
  std::string detail;
};

std::vector<Criterion> results;

template <typename Fn>
void run(int id, const std::string& label, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = fn();
    pass = detail.empty();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  results.push_back({id, label, pass, secs, detail});
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": "
            << label << " (" << std::fixed << std::setprecision(2) << secs
            << " s)";
  if (!pass) std::cout << " -- " << detail;
  std::cout << "\n" << std::flush;
}

// collapse suite results into the first failure, empty string when green
std::string collapse(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return c.name + ": " + c.detail;
  return {};
}

Polynomial fpoly(const std::string& text, long p) {
  return parse_polynomial(text, fp_domain(p));
}

std::string criterion1() {
  struct Case {
    long p, q;
  };
  for (Case c : {Case{2, 2}, Case{3, 3}, Case{2, 4}}) {
    for (long t : {0L, 1L}) {
      if (!(compute_q(WittOp::Add, 0, c.p, c.q, t) == fpoly("X0 + Y0", c.p)))
        return "Q0+ mismatch";
      if (!(compute_q(WittOp::Mul, 0, c.p, c.q, t) == fpoly("X0*Y0", c.p)))
        return "Q0x mismatch";
      Domain fd = fp_domain(c.p);
      PExponent wexp = PExponent::integer(1).times_p_power(
          static_cast<int>(power_exponent(c.q, c.p) * (t + 1)), c.p);
      Polynomial q1_add =
          Polynomial::variable(fd, Variable::x(1)) +
          Polynomial::variable(fd, Variable::y(1)) +
          Polynomial::monomial(fd, Monomial::of(Variable::omega(1), wexp), 1) *
              reduce_mod_p(cq_polynomial(c.p, c.q), c.p);
      if (!(compute_q(WittOp::Add, 1, c.p, c.q, t) == q1_add))
        return "Q1+ mismatch at p=" + std::to_string(c.p) +
               " q=" + std::to_string(c.q) + " t=" + std::to_string(t);
      std::ostringstream os;
      os << "X0^" << c.q << "*Y1 + X1*Y0^" << c.q;
      if (!(compute_q(WittOp::Mul, 1, c.p, c.q, t) == fpoly(os.str(), c.p)))
        return "Q1x mismatch at p=" + std::to_string(c.p) +
               " q=" + std::to_string(c.q) + " t=" + std::to_string(t);
    }
  }
  return {};
}

std::string range_suite(const std::string& name, long p, long q, long nmax) {
  SuiteOptions opt;
  opt.p = p;
  opt.q = q;
  opt.n = nmax;
  return collapse(run_suite(name, opt));
}

}  // namespace

int main() {
  run(1, "golden degree-0/1 equalities, (p,q) in {(2,2),(3,3),(2,4)}, t in {0,1}",
      criterion1);

  run(2, "polynomiality membership, n<=4 at p=q=2 and n<=2 at p=q=3", []() {
    std::string r = range_suite("polynomiality", 2, 2, 4);
    if (!r.empty()) return "p=q=2: " + r;
    r = range_suite("polynomiality", 3, 3, 2);
    if (!r.empty()) return "p=q=3: " + r;
    return std::string{};
  });

  run(3, "coefficient-Frobenius shift over the same range", []() {
    std::string r = range_suite("frobenius-shift", 2, 2, 4);
    if (!r.empty()) return "p=q=2: " + r;
    r = range_suite("frobenius-shift", 3, 3, 2);
    if (!r.empty()) return "p=q=3: " + r;
    return std::string{};
  });

  run(4, "witt ring axioms, >=100 seeded tuples per ring class, window<=4",
      []() {
        SuiteOptions opt;
        opt.p = 2;
        opt.q = 2;
        opt.window = 4;
        opt.count = 100;
        opt.seed = 42;
        return collapse(run_suite("ring-axioms", opt));
      });

  run(5, "pi*iota = FV, V additivity and the exact sequence, m<=3, >=50 inputs",
      []() {
        SuiteOptions opt;
        opt.p = 2;
        opt.q = 2;
        opt.m = 3;
        opt.count = 50;
        std::string r = collapse(run_suite("fv-identity", opt));
        if (!r.empty()) return "fv-identity: " + r;
        r = collapse(run_suite("exact-sequence", opt));
        if (!r.empty()) return "exact-sequence: " + r;
        return std::string{};
      });

  run(6, "teichmuller laws and the pi-expansion identity, window<=3", []() {
    SuiteOptions opt;
    opt.p = 2;
    opt.q = 2;
    opt.window = 3;
    return collapse(run_suite("teichmuller", opt));
  });

  run(7, "triangle identities: counit expansion and unit round trip, window<=3",
      []() {
        SuiteOptions opt;
        opt.p = 2;
        opt.q = 2;
        opt.window = 3;
        return collapse(run_suite("pi-expansion", opt));
      });

  run(8, "triple-sum identity for 0 <= n <= 6", []() {
    SuiteOptions opt;
    opt.n = 6;
    return collapse(run_suite("lemma63", opt));
  });

  run(9, "phi is a unital ring homomorphism, >=100 seeded pairs, m<=4", []() {
    SuiteOptions opt;
    opt.p = 2;
    opt.m = 4;
    opt.count = 100;
    return collapse(run_suite("phi-hom", opt));
  });

  run(10, "retraction identities and mutually inverse quotient maps", []() {
    SuiteOptions opt;
    opt.p = 2;
    opt.m = 3;
    opt.count = 50;
    return collapse(run_suite("retraction", opt));
  });

  run(11, "jet compatibility with witt coordinates and the m=1 identities",
      []() {
        SuiteOptions opt;
        opt.p = 2;
        opt.q = 2;
        opt.window = 3;
        opt.count = 40;
        return collapse(run_suite("jets-triangle", opt));
      });

  run(12, "normal-form soundness on >=200 seeded raw series, N<=4", []() {
    SuiteOptions opt;
    opt.p = 2;
    opt.q = 2;
    opt.count = 200;
    return collapse(run_suite("normal-form", opt));
  });

  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << (failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << results.size() - failed << "/" << results.size()
            << " criteria)\n";
  return failed == 0 ? 0 : 1;
}
