#pragma once

#include <optional>
#include <string>

namespace lazwitt {

// Tagged variable alphabet: universal coefficients w_i (i >= 1), Witt
// coordinates X_i / Y_i (i >= 0), the uniformizer pi, named generators,
// and jet variables d^{[n]}name (n >= 1; order 0 collapses to the
// generator itself).
enum class VarTag { Omega, X, Y, Pi, Gen, Jet };

struct Variable {
  VarTag tag = VarTag::Gen;
  long index = 0;    // omega/X/Y index, or jet order
  std::string name;  // Gen and Jet only

  static Variable omega(long i);
  static Variable x(long i);
  static Variable y(long i);
  static Variable pi();
  static Variable gen(std::string name);
  static Variable jet(std::string name, long order);

  bool is_main() const { return tag != VarTag::Omega; }

  std::string to_string() const;  // "w1", "X0", "Y2", "pi", "t1", "d2:t1"
  static std::optional<Variable> parse(const std::string& s);

  bool operator==(const Variable&) const = default;
};

// Total order: w1 < w2 < ... < X0 < X1 < ... < Y0 < ... < pi < Gen < Jet.
int compare(const Variable& a, const Variable& b);
inline bool operator<(const Variable& a, const Variable& b) {
  return compare(a, b) < 0;
}

}  // namespace lazwitt
