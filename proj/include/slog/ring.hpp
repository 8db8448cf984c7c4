#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slog/errors.hpp"
#include "slog/field.hpp"

namespace slog {

inline constexpr int kMaxVars = 16;

// Ambient polynomial ring with a local order. All dimensions are taken over
// the localization at the origin, so 1 is the largest monomial.
struct Ring {
  int n = 0;
  std::vector<std::string> vars;
  uint32_t characteristic = 0;  // 0 = exact rationals, else a prime
  uint32_t degree_cap = 40;     // hard bound on intermediate total degrees

  int var_index(const std::string& name) const {
    for (int i = 0; i < n; ++i)
      if (vars[i] == name) return i;
    return -1;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, uint32_t characteristic = 0,
                         uint32_t degree_cap = 40) {
  if (names.empty() || int(names.size()) > kMaxVars)
    throw Error("ring must have between 1 and " + std::to_string(kMaxVars) +
                " variables");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error("duplicate variable " + names[i]);
  if (characteristic != 0 && !is_prime(characteristic))
    throw Error("characteristic must be 0 or a prime");
  auto r = std::make_shared<Ring>();
  r->n = int(names.size());
  r->vars = std::move(names);
  r->characteristic = characteristic;
  r->degree_cap = degree_cap;
  return r;
}

// Exponent vector with cached total degree. Unused slots stay zero, which
// keeps comparisons independent of the ambient variable count.
struct Mono {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  static Mono one() { return Mono{}; }
  static Mono var(int i, uint16_t k = 1) {
    Mono m;
    m.e[i] = k;
    m.deg = k;
    return m;
  }

  bool is_one() const { return deg == 0; }

  Mono times(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] + o.e[i]);
    r.deg = deg + o.deg;
    return r;
  }
  bool divides(const Mono& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // requires o.divides(*this)
  Mono div(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] - o.e[i]);
    r.deg = deg - o.deg;
    return r;
  }
  static Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(a.e[i], b.e[i]);
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

// Negative degree reverse lexicographic order, the local analogue of
// degrevlex: smaller total degree is larger; ties break reverse
// lexicographically. Returns +1 if a > b, -1 if a < b, 0 if equal.
inline int cmp_local(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

// Module order: monomial first (local order above), then lowest position
// wins. An optional block split makes positions < split dominate the rest,
// which is what the syzygy-style eliminations need.
struct ModOrder {
  int split = 0;  // positions < split form the dominant block

  int cmp(int pa, const Mono& ma, int pb, const Mono& mb) const {
    const int ba = pa < split ? 0 : 1;
    const int bb = pb < split ? 0 : 1;
    if (ba != bb) return ba < bb ? 1 : -1;
    if (int c = cmp_local(ma, mb)) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
};

}  // namespace slog
