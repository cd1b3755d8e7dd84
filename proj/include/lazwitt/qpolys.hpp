#pragma once

#include <compare>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "lazwitt/lazard.hpp"
#include "lazwitt/params.hpp"
#include "lazwitt/polynomial.hpp"

namespace lazwitt {

enum class WittOp { Add, Mul };
std::string to_string(WittOp op);

struct QKey {
  WittOp op;
  long n;
  long p;
  long q;
  long t;
  auto operator<=>(const QKey&) const = default;
};

// Q polynomial together with its canonical integer lift.
struct QEntry {
  Polynomial q_poly;
  Polynomial lift;
};

struct CacheIOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Memoized table of arithmetic polynomials; concurrent reads, serialized
// insertion. An optional on-disk cache stores one JSON file per key.
class QTable {
 public:
  const QEntry& get(const QKey& key);
  void set_cache_dir(std::optional<std::string> dir);
  std::optional<std::string> cache_dir() const;
  void clear();

 private:
  mutable std::shared_mutex mu_;
  std::map<QKey, QEntry> entries_;
  std::optional<std::string> cache_dir_;

  QEntry compute(const QKey& key);
  std::optional<QEntry> load_from_disk(const QKey& key) const;
  void store_to_disk(const QKey& key, const QEntry& e) const;
};

QTable& q_table();  // process-wide instance

// F_p polynomial Q_{n,q}^{*(t)} through the shared table.
const Polynomial& compute_q(WittOp op, long n, long p, long q, long t);
const QEntry& compute_q_entry(WittOp op, long n, long p, long q, long t);

// Prop-style structural checks on computed polynomials.
bool verify_polynomiality(const Polynomial& qn, long n, long p, long q,
                          long t);
bool frobenius_shift_check(WittOp op, long n, long p, long q, long t);
bool leading_linearity_check(long n, long p, long q, long t);

std::string q_cache_filename(const QKey& key);

}  // namespace lazwitt
