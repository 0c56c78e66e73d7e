#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clusterkit/fpoly.hpp"

namespace clusterkit::detail {

/// "x1*y2^3", or "1" for the empty product. Exponents must be nonnegative.
inline std::string format_monomial(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

/// Terms are printed in the given order: "x1*y1 - 2*y1 + 1".
inline std::string format_polynomial(const std::vector<std::pair<Exponent, BigInt>>& terms,
                                     const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string mono = format_monomial(e, names);
    if (mono == "1")
      os << mag;
    else if (mag == 1)
      os << mono;
    else
      os << mag << '*' << mono;
  }
  return os.str();
}

/// Decreasing total degree, then decreasing lexicographic order.
inline bool display_order(const Exponent& a, const Exponent& b) {
  Int da = 0, db = 0;
  for (Int x : a) da += x;
  for (Int x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

inline std::vector<std::string> variable_names(char letter, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(letter + std::to_string(i));
  return names;
}

}  // namespace clusterkit::detail
