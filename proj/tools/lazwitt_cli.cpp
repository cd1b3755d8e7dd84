// lazwitt: exact arithmetic for Lazardian Witt vectors and jet algebras.
//
// Subcommands:
//   qpoly   print an arithmetic polynomial Q^{op,(t)}_{n,q}
//   verify  run a named verification suite
//   urp     print the universal-residual-perfection structure map table
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>

#include "lazwitt/jets.hpp"
#include "lazwitt/qpolys.hpp"
#include "lazwitt/serialize.hpp"
#include "lazwitt/verify.hpp"

using nlohmann::json;
using namespace lazwitt;

namespace {

constexpr const char* kCacheEnvVar = "LAZWITT_CACHE_DIR";
constexpr const char* kDefaultCacheDir = ".lazwitt-cache";

std::string resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv(kCacheEnvVar); env && *env)
    return std::string(env);
  return kDefaultCacheDir;
}

int run_qpoly(long p, long q, long t, long n, const std::string& op_name,
              const std::string& format, const std::string& cache_flag) {
  Params::make(p, q, t, std::nullopt, n + 1);  // validates p, q
  if (n < 0) throw CLI::ValidationError("--n must be >= 0");
  WittOp op;
  if (op_name == "add")
    op = WittOp::Add;
  else if (op_name == "mul")
    op = WittOp::Mul;
  else
    throw CLI::ValidationError("--op must be add or mul");

  if (t < 0)
    std::cerr << "note: t < 0 is experimental (fractional omega exponents)\n";
  if (n > 4)
    std::cerr << "warning: n = " << n
              << " may be slow; term counts grow quickly\n";

  if (auto dir = resolve_cache_dir(cache_flag)) q_table().set_cache_dir(dir);

  const Polynomial& qn = compute_q(op, n, p, q, t);
  if (format == "text")
    std::cout << qn.to_text() << "\n";
  else if (format == "json")
    std::cout << canonical_json(polynomial_to_json(qn));
  else if (format == "latex")
    std::cout << qn.to_latex() << "\n";
  else
    throw CLI::ValidationError("--format must be text, json or latex");
  return 0;
}

int run_verify(const std::string& suite, const SuiteOptions& opt,
               const std::string& format, const std::string& cache_flag) {
  if (auto dir = resolve_cache_dir(cache_flag)) q_table().set_cache_dir(dir);
  std::vector<CheckResult> results = run_suite(suite, opt);
  long failed = 0;
  json checks = json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (format != "json")
      std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name << " ("
                << r.detail << ")\n";
    checks.push_back(
        {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  json summary{{"suite", suite},
               {"seed", opt.seed},
               {"passed", static_cast<long>(results.size()) - failed},
               {"failed", failed},
               {"checks", checks}};
  std::cout << canonical_json(summary);
  return failed == 0 ? 0 : 1;
}

int run_urp(long p, long r, long m, const std::vector<std::string>& elements,
            const std::string& format) {
  if (r < 1) throw CLI::ValidationError("--generators must be >= 1");
  if (m < 0) throw CLI::ValidationError("--m must be >= 0");
  if (!is_prime(p)) throw CLI::ValidationError("--p must be prime");

  Domain base = fp_domain(p);
  std::vector<std::string> gens;
  for (long i = 1; i <= r; ++i) gens.push_back("t" + std::to_string(i));
  JetRing jr{base, gens, m};

  json table = json::array();
  auto emit = [&](const std::string& label, const TruncatedSeries& a) {
    TruncatedSeries image = urp_structure_map(jr, a);
    if (format != "json")
      std::cout << label << " -> " << image.to_text() << "\n";
    json coeffs = json::array();
    for (long i = 0; i <= m; ++i)
      coeffs.push_back(polynomial_to_json(image.at(i)));
    table.push_back({{"input", label}, {"phi", coeffs}});
  };

  for (const auto& g : gens) {
    TruncatedSeries a = TruncatedSeries::zero(base, m);
    a.coeffs[0] = Polynomial::variable(base, Variable::gen(g));
    emit(g, a);
  }
  for (const auto& text : elements) {
    Polynomial f = parse_polynomial(text, base);
    emit(text, TruncatedSeries::from_pi_polynomial(f, m));
  }
  if (format == "json")
    std::cout << canonical_json(json{{"m", m}, {"p", p}, {"table", table}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lazardian Witt vector and jet algebra computations"};
  app.require_subcommand(1);

  long p = 2, q = 2, t = 0, n = 0, m = 2, window = 3, count = -1;
  long generators = 1;
  unsigned long long seed = 42;
  std::string op_name = "add", format = "text", cache_dir, suite;
  std::vector<std::string> elements;

  CLI::App* qpoly = app.add_subcommand("qpoly", "print Q^{op,(t)}_{n,q}");
  qpoly->add_option("--p", p, "prime p");
  qpoly->add_option("--q", q, "q = p^e");
  qpoly->add_option("--t", t, "Frobenius twist");
  qpoly->add_option("--n", n, "coordinate index");
  qpoly->add_option("--op", op_name, "add or mul");
  qpoly->add_option("--format", format, "text, json or latex");
  qpoly->add_option("--cache-dir", cache_dir,
                    "Q-table cache directory (env LAZWITT_CACHE_DIR)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--p", p, "prime p");
  verify->add_option("--q", q, "q = p^e");
  verify->add_option("--t", t, "Frobenius twist");
  verify->add_option("--n", n, "range/order knob (suite-specific)");
  verify->add_option("--m", m, "truncation order");
  verify->add_option("--window", window, "coordinate window");
  verify->add_option("--count", count, "random sample count");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--format", format, "text or json");
  verify->add_option("--cache-dir", cache_dir,
                     "Q-table cache directory (env LAZWITT_CACHE_DIR)");

  CLI::App* urp = app.add_subcommand(
      "urp", "structure map of the universal residual perfection");
  urp->add_option("--p", p, "prime p");
  urp->add_option("--generators", generators, "number of generators r");
  urp->add_option("--m", m, "truncation order");
  urp->add_option("--element", elements,
                  "element of k[t..][pi]/(pi^{m+1}) to expand");
  urp->add_option("--format", format, "text or json");

  bool n_given = false;
  try {
    app.parse(argc, argv);
    n_given = qpoly->count("--n") > 0 || verify->count("--n") > 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*qpoly) return run_qpoly(p, q, t, n, op_name, format, cache_dir);
    if (*verify) {
      SuiteOptions opt;
      opt.p = p;
      opt.q = q;
      opt.t = t;
      opt.n = n_given ? n : -1;
      opt.m = m;
      opt.window = window;
      opt.count = count;
      opt.seed = seed;
      return run_verify(suite, opt, format, cache_dir);
    }
    if (*urp) return run_urp(p, generators, m, elements, format);
  } catch (const CacheIOError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
