#include "lazwitt/qpolys.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "lazwitt/serialize.hpp"

namespace lazwitt {

std::string to_string(WittOp op) { return op == WittOp::Add ? "add" : "mul"; }

QTable& q_table() {
  static QTable table;
  return table;
}

const Polynomial& compute_q(WittOp op, long n, long p, long q, long t) {
  return q_table().get(QKey{op, n, p, q, t}).q_poly;
}

const QEntry& compute_q_entry(WittOp op, long n, long p, long q, long t) {
  return q_table().get(QKey{op, n, p, q, t});
}

void QTable::set_cache_dir(std::optional<std::string> dir) {
  std::unique_lock lock(mu_);
  cache_dir_ = std::move(dir);
}

std::optional<std::string> QTable::cache_dir() const {
  std::shared_lock lock(mu_);
  return cache_dir_;
}

void QTable::clear() {
  std::unique_lock lock(mu_);
  entries_.clear();
}

std::string q_cache_filename(const QKey& key) {
  std::ostringstream os;
  os << "p" << key.p << "_q" << key.q << "_t" << key.t << "_"
     << to_string(key.op) << "_" << key.n << ".json";
  return os.str();
}

const QEntry& QTable::get(const QKey& key) {
  {
    std::shared_lock lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  std::optional<QEntry> entry = load_from_disk(key);
  if (!entry) {
    entry = compute(key);
    store_to_disk(key, *entry);
  }
  std::unique_lock lock(mu_);
  auto [it, inserted] = entries_.emplace(key, std::move(*entry));
  return it->second;
}

std::optional<QEntry> QTable::load_from_disk(const QKey& key) const {
  std::optional<std::string> dir = cache_dir();
  if (!dir) return std::nullopt;
  std::filesystem::path path =
      std::filesystem::path(*dir) / q_cache_filename(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw CacheIOError("cannot read cache file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    return QEntry{polynomial_from_json(j.at("q")),
                  polynomial_from_json(j.at("lift"))};
  } catch (const std::exception& e) {
    throw CacheIOError("corrupt cache file " + path.string() + ": " +
                       e.what());
  }
}

void QTable::store_to_disk(const QKey& key, const QEntry& e) const {
  std::optional<std::string> dir = cache_dir();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) throw CacheIOError("cannot create cache directory " + *dir);
  std::filesystem::path path =
      std::filesystem::path(*dir) / q_cache_filename(key);
  std::ofstream out(path);
  if (!out) throw CacheIOError("cannot write cache file " + path.string());
  nlohmann::json j{{"q", polynomial_to_json(e.q_poly)},
                   {"lift", polynomial_to_json(e.lift)}};
  out << canonical_json(j);
  if (!out) throw CacheIOError("short write to " + path.string());
}

QEntry QTable::compute(const QKey& key) {
  if (key.n < 0) throw std::invalid_argument("Q index must be >= 0");
  Params prm = Params::make(key.p, key.q, key.t, std::nullopt, key.n + 1);
  Domain zd = z_domain(key.p);
  long n = key.n;
  int e = prm.e();

  // A = sum_i X_i^{q^{-i}} pi^i and likewise B in Y, at precision n+1
  RawSeries araw = RawSeries::zero(prm);
  RawSeries braw = RawSeries::zero(prm);
  for (long i = 0; i <= n; ++i) {
    PExponent exp = PExponent::one().times_p_power(static_cast<int>(-e * i),
                                                   key.p);
    araw.coeffs[i] =
        Polynomial::monomial(zd, Monomial::of(Variable::x(i), exp), 1);
    braw.coeffs[i] =
        Polynomial::monomial(zd, Monomial::of(Variable::y(i), exp), 1);
  }
  LazardElement a = normalize(araw);
  LazardElement b = normalize(braw);
  LazardElement s = key.op == WittOp::Add ? lz_add(a, b) : lz_mul(a, b);

  // subtract [Q_i^{q^{-i}}] pi^i for i < n, realized through the stored
  // integer lifts raised to the q^n power; the factor is only needed mod
  // pi^{n+1-i}, which keeps the powering small
  for (long i = 0; i < n; ++i) {
    const QEntry& lower = get(QKey{key.op, i, key.p, key.q, key.t});
    Polynomial scaled =
        lower.lift.scale_exponents(static_cast<int>(-e * (i + n)));
    Params low = prm;
    low.precision = prm.precision - i;
    LazardElement lifted = normalize(RawSeries::from_poly(low, scaled));
    unsigned long power = 1;
    for (long k = 0; k < n; ++k) power *= static_cast<unsigned long>(key.q);
    s = lz_sub(s, embed_shift(lz_pow(lifted, power), prm, i));
  }

  for (long j = 0; j < n; ++j) {
    if (!s.pi_coefficient(j).is_zero())
      throw std::logic_error(
          "Q remainder not concentrated in pi-degree " + std::to_string(n) +
          " (residue at degree " + std::to_string(j) + ")");
  }

  Polynomial qn = frobenius(s.pi_coefficient(n), key.q, n);
  if (!verify_polynomiality(qn, n, key.p, key.q, key.t))
    throw std::logic_error("computed Q fails the polynomiality membership");
  return QEntry{qn, lift_to_z(qn)};
}

bool verify_polynomiality(const Polynomial& qn, long n, long p, long q,
                          long t) {
  if (!qn.domain().is_fp() || qn.p() != p) return false;
  int e = power_exponent(q, p);
  for (const auto& [m, c] : qn.terms()) {
    for (const auto& [v, exp] : m.factors()) {
      switch (v.tag) {
        case VarTag::X:
        case VarTag::Y:
          if (v.index > n) return false;
          if (!exp.is_integer()) return false;
          break;
        case VarTag::Omega:
          if (v.index > n || v.index < 1) return false;
          // membership in F_p[w_i^{q^t}]: exponent in q^t * Z>=0
          if (!exp.times_p_power(static_cast<int>(-e * t), p).is_integer())
            return false;
          break;
        default:
          return false;  // no pi, generators or jets may appear
      }
    }
  }
  return true;
}

bool frobenius_shift_check(WittOp op, long n, long p, long q, long t) {
  const Polynomial& qt = compute_q(op, n, p, q, t);
  const Polynomial& qt1 = compute_q(op, n, p, q, t + 1);
  return coefficient_frobenius(qt, q, 1) == qt1;
}

bool leading_linearity_check(long n, long p, long q, long t) {
  Polynomial r = compute_q(WittOp::Add, n, p, q, t);
  Domain fd = fp_domain(p);
  r -= Polynomial::variable(fd, Variable::x(n));
  r -= Polynomial::variable(fd, Variable::y(n));
  for (const auto& [m, c] : r.terms())
    for (const auto& [v, e] : m.factors())
      if ((v.tag == VarTag::X || v.tag == VarTag::Y) && v.index == n)
        return false;
  return true;
}

}  // namespace lazwitt
