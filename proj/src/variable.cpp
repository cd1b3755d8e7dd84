#include "lazwitt/variable.hpp"

#include <cctype>
#include <stdexcept>

namespace lazwitt {

namespace {
int tag_rank(VarTag t) {
  switch (t) {
    case VarTag::Omega: return 0;
    case VarTag::X: return 1;
    case VarTag::Y: return 2;
    case VarTag::Pi: return 3;
    case VarTag::Gen: return 4;
    case VarTag::Jet: return 5;
  }
  return 6;
}
}  // namespace

Variable Variable::omega(long i) {
  if (i < 1) throw std::invalid_argument("omega index must be >= 1");
  return Variable{VarTag::Omega, i, {}};
}

Variable Variable::x(long i) {
  if (i < 0) throw std::invalid_argument("X index must be >= 0");
  return Variable{VarTag::X, i, {}};
}

Variable Variable::y(long i) {
  if (i < 0) throw std::invalid_argument("Y index must be >= 0");
  return Variable{VarTag::Y, i, {}};
}

Variable Variable::pi() { return Variable{VarTag::Pi, 0, {}}; }

Variable Variable::gen(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty generator name");
  return Variable{VarTag::Gen, 0, std::move(name)};
}

Variable Variable::jet(std::string name, long order) {
  if (order < 0) throw std::invalid_argument("jet order must be >= 0");
  if (order == 0) return gen(std::move(name));  // d^{[0]}x is x
  return Variable{VarTag::Jet, order, std::move(name)};
}

std::string Variable::to_string() const {
  switch (tag) {
    case VarTag::Omega: return "w" + std::to_string(index);
    case VarTag::X: return "X" + std::to_string(index);
    case VarTag::Y: return "Y" + std::to_string(index);
    case VarTag::Pi: return "pi";
    case VarTag::Gen: return name;
    case VarTag::Jet:
      return "d" + std::to_string(index) + ":" + name;
  }
  return "?";
}

std::optional<Variable> Variable::parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (s == "pi") return pi();
  if ((s[0] == 'w' || s[0] == 'X' || s[0] == 'Y') &&
      all_digits(s.substr(1))) {
    long idx = std::stol(s.substr(1));
    if (s[0] == 'w') return idx >= 1 ? std::optional(omega(idx)) : std::nullopt;
    if (s[0] == 'X') return x(idx);
    return y(idx);
  }
  if (s[0] == 'd') {
    auto colon = s.find(':');
    if (colon != std::string::npos && colon > 1 &&
        all_digits(s.substr(1, colon - 1)) && colon + 1 < s.size()) {
      return jet(s.substr(colon + 1), std::stol(s.substr(1, colon - 1)));
    }
  }
  // anything identifier-like is a named generator
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return std::nullopt;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return std::nullopt;
  return gen(s);
}

int compare(const Variable& a, const Variable& b) {
  int ra = tag_rank(a.tag), rb = tag_rank(b.tag);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (a.tag == VarTag::Gen || a.tag == VarTag::Jet) {
    if (a.name != b.name) return a.name < b.name ? -1 : 1;
  }
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  return 0;
}

}  // namespace lazwitt
