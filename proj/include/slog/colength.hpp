#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slog/mora.hpp"

namespace slog {

// dim_C of a quotient O_n^q / M: a natural number or infinite.
struct Colength {
  bool is_finite = false;
  uint64_t v = 0;

  static Colength finite(uint64_t x) { return Colength{true, x}; }
  static Colength infinite() { return Colength{false, 0}; }

  uint64_t value() const {
    if (!is_finite) throw InfiniteError("colength is infinite");
    return v;
  }

  friend bool operator==(const Colength& a, const Colength& b) {
    return a.is_finite == b.is_finite && (!a.is_finite || a.v == b.v);
  }
  friend bool operator==(const Colength& a, uint64_t b) {
    return a.is_finite && a.v == b;
  }
  friend Colength operator+(const Colength& a, const Colength& b) {
    if (!a.is_finite || !b.is_finite) return infinite();
    return finite(a.v + b.v);
  }

  std::string str() const { return is_finite ? std::to_string(v) : "infinite"; }
};

namespace detail {

// number of monomials outside the ideal generated by gens (minimal monomial
// generators); infinite unless a pure power of every variable is present
inline Colength staircase_count(const std::vector<Mono>& gens, int nvars) {
  if (gens.empty()) return Colength::infinite();
  for (const auto& g : gens)
    if (g.is_one()) return Colength::finite(0);

  std::vector<uint32_t> bound(nvars, 0);
  for (const auto& g : gens) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < nvars && pure; ++i) {
      if (g.e[i] == 0) continue;
      if (support >= 0) pure = false;
      support = i;
    }
    if (pure && support >= 0) {
      uint32_t& b = bound[support];
      b = b == 0 ? g.e[support] : std::min(b, uint32_t(g.e[support]));
    }
  }
  for (int i = 0; i < nvars; ++i)
    if (bound[i] == 0) return Colength::infinite();

  uint64_t count = 0;
  Mono m;
  int i = 0;
  while (true) {
    bool divisible = false;
    for (const auto& g : gens)
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
    // odometer over the box prod [0, bound_i)
    for (i = 0; i < nvars; ++i) {
      if (m.e[i] + 1u < bound[i]) {
        m.e[i]++;
        m.deg++;
        break;
      }
      m.deg -= m.e[i];
      m.e[i] = 0;
    }
    if (i == nvars) break;
  }
  return Colength::finite(count);
}

}  // namespace detail

// Standard-monomial count of the leading module; equals dim_C O^q / M for a
// standard basis of M, and is finite exactly when every position has a
// zero-dimensional leading ideal.
template <class K>
Colength colength(const StdBasis<K>& sb) {
  auto leads = sb.leading_module();
  uint64_t total = 0;
  for (const auto& gens : leads) {
    Colength c = detail::staircase_count(gens, sb.ring()->n);
    if (!c.is_finite) return Colength::infinite();
    total += c.v;
  }
  return Colength::finite(total);
}

}  // namespace slog
