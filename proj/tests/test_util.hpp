#pragma once

#include <random>
#include <vector>

#include "slog/invariants.hpp"

namespace testutil {

using slog::MapGerm;
using slog::Mono;
using slog::Poly;
using slog::Rat;
using slog::RingPtr;
using slog::Term;

inline Poly<Rat> random_poly(const RingPtr& ring, std::mt19937_64& rng, int max_deg,
                             int max_terms, bool zero_constant = true) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(zero_constant ? 1 : 0, max_deg);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<Term<Rat>> ts;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    int d = deg(rng);
    Mono m;
    for (int j = 0; j < d; ++j) {
      int v = std::uniform_int_distribution<int>(0, ring->n - 1)(rng);
      m.e[v]++;
      m.deg++;
    }
    long c = coeff(rng);
    if (c == 0) c = 1;
    ts.push_back({m, Rat(c)});
  }
  return Poly<Rat>::build(ring, std::move(ts));
}

inline Poly<Rat> random_nonzero_poly(const RingPtr& ring, std::mt19937_64& rng,
                                     int max_deg, int max_terms,
                                     bool zero_constant = true) {
  for (int i = 0; i < 100; ++i) {
    Poly<Rat> p = random_poly(ring, rng, max_deg, max_terms, zero_constant);
    if (!p.is_zero()) return p;
  }
  return Poly<Rat>::variable(ring, 0);
}

}  // namespace testutil
