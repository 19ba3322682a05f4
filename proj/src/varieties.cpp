#include "terracini/varieties.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace terracini {

std::size_t monomial_count(unsigned n, unsigned d) {
  // C(n+d, d) built as a running product of exact binomials.
  unsigned __int128 c = 1;
  for (unsigned i = 1; i <= d; ++i) {
    c = c * (n + i) / i;
    if (c > SIZE_MAX) return SIZE_MAX;
  }
  return static_cast<std::size_t>(c);
}

std::vector<Exponent> graded_lex_exponents(unsigned n, unsigned d) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  // Fill positions left to right, giving the leftmost variable the largest
  // share first, so each degree comes out lexicographically descending.
  std::function<void(unsigned, unsigned)> fill = [&](unsigned pos, unsigned remaining) {
    if (pos + 1 == n) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
      e[pos] = a;
      fill(pos + 1, remaining - a);
    }
    e[pos] = 0;
  };
  for (unsigned deg = 0; deg <= d; ++deg) {
    if (n == 0) {
      if (deg == 0) out.push_back(e);
      continue;
    }
    fill(0, deg);
  }
  return out;
}

VeroneseChart::VeroneseChart(unsigned n, unsigned d, std::size_t max_monomials) : n_(n), d_(d) {
  if (n == 0) throw std::invalid_argument("VeroneseChart: n must be >= 1");
  if (d == 0) throw std::invalid_argument("VeroneseChart: d must be >= 1");
  const std::size_t count = monomial_count(n, d);
  if (count > max_monomials)
    throw GuardViolation("V_{" + std::to_string(n) + "," + std::to_string(d) + "} has " +
                         (count == SIZE_MAX ? std::string("too many") : std::to_string(count)) +
                         " monomials, above the guard of " + std::to_string(max_monomials));
  exponents_ = graded_lex_exponents(n, d);
  for (std::size_t i = 0; i < exponents_.size(); ++i) index_.emplace(exponents_[i], i);
}

std::optional<std::size_t> VeroneseChart::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace terracini
