#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "slog/derlog.hpp"

namespace slog {

// ---------------------------------------------------------------------------
// generic linear data, drawn reproducibly from a seed

namespace detail {

inline int integer_matrix_rank(const std::vector<std::vector<long>>& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<mpq_class>> a(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (long x : m[i]) a[i].emplace_back(x);
  const size_t rows = a.size(), cols = a[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[rank][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return int(rank);
}

inline bool rows_proportional(const std::vector<long>& a, const std::vector<long>& b) {
  return integer_matrix_rank({a, b}) < 2;
}

}  // namespace detail

// p linear forms with integer coefficients drawn uniformly from
// [-bound, bound]; redraws until the coefficient matrix has rank min(p, n)
// and no two forms are proportional.
template <class K>
MapGerm<K> generic_linear_map(const RingPtr& ring, int p, uint64_t seed,
                              long bound = 10000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  const int n = ring->n;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::vector<long>> rows(p, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& x : r) x = dist(rng);
    if (detail::integer_matrix_rank(rows) < std::min(p, n)) continue;
    bool ok = true;
    for (int i = 0; i < p && ok; ++i)
      for (int j = i + 1; j < p && ok; ++j)
        if (detail::rows_proportional(rows[i], rows[j])) ok = false;
    // away from the origin the hyperplanes must meet transversally, so every
    // subset of at most n forms has to be independent
    if (ok && p > n) {
      detail::subsets(p, n, [&](const std::vector<int>& idx) {
        std::vector<std::vector<long>> sub;
        for (int i : idx) sub.push_back(rows[i]);
        if (detail::integer_matrix_rank(sub) < n) ok = false;
      });
    }
    if (!ok) continue;
    std::vector<Poly<K>> comps;
    for (const auto& r : rows) {
      std::vector<Term<K>> ts;
      for (int j = 0; j < n; ++j)
        if (r[j] != 0)
          ts.push_back({Mono::var(j), K::from_mpq(mpq_class(r[j]), ring->characteristic)});
      comps.push_back(Poly<K>::build(ring, std::move(ts)));
    }
    return MapGerm<K>(ring, std::move(comps));
  }
  throw PrecondError("failed to draw a generic linear map");
}

// ---------------------------------------------------------------------------
// basic invariants

template <class K>
Colength milnor(const Poly<K>& f) {
  if (!f.constant_term().is_zero())
    throw PrecondError("milnor number needs f(0) = 0");
  return jacobian_ideal(f).colength();
}

template <class K>
int ord(const Poly<K>& f) {
  if (f.is_zero()) throw PrecondError("order of the zero germ is undefined");
  return f.order();
}

// tau(h) = dim O^p / T(h)
template <class K>
Colength tjurina(const MapGerm<K>& h) {
  return tjurina_module(h).colength();
}

template <class K>
Colength tau0(const MapGerm<K>& h) {
  return t0_module(h).colength();
}

// t_M(h) = dim O^p / (D(h) + M)
template <class K>
Colength t_M(const MapGerm<K>& h, const Submodule<K>& m) {
  if (m.rank() != h.p()) throw Error("t_M rank mismatch");
  return module_sum(jacobian_module(h), m).colength();
}

// t_I(h) = t_{I^{+p}}(h)
template <class K>
Colength t_I(const MapGerm<K>& h, const Submodule<K>& I) {
  return t_M(h, Submodule<K>::ideal_power(I, h.p()));
}

// Finiteness of <h> + J(h); the dimension condition dim h^{-1}(0) = n - p is
// not computed and is taken on trust for zero-dimensional borderline inputs.
template <class K>
bool is_icis(const MapGerm<K>& h) {
  return icis_defining_colength(h).is_finite;
}

// ---------------------------------------------------------------------------
// Milnor number of an icis via the alternating sum of prefix colengths
// (h_0 = 0). The given component order is tried first; if some prefix fails
// the finiteness test the components are replaced by a random invertible
// integer recombination, which generates the same ideal and is generically
// prefix-admissible.

namespace detail {

template <class K>
struct LeGreuelAttempt {
  std::optional<int64_t> value;
  int failed_prefix = 0;
};

template <class K>
LeGreuelAttempt<K> le_greuel(const MapGerm<K>& h) {
  const int p = h.p();
  int64_t total = 0;
  for (int r = 1; r <= p; ++r) {
    std::vector<Poly<K>> gens(h.components().begin(), h.components().begin() + (r - 1));
    for (auto& m : jacobian_minors(h.prefix(r))) gens.push_back(std::move(m));
    Colength c = Submodule<K>::ideal(h.ring(), gens).colength();
    if (!c.is_finite) return {std::nullopt, r};
    int64_t sign = ((p - r) % 2 == 0) ? 1 : -1;
    total += sign * int64_t(c.v);
  }
  return {total, 0};
}

template <class K>
MapGerm<K> recombine(const MapGerm<K>& h, uint64_t seed) {
  const int p = h.p();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::vector<long>> a(p, std::vector<long>(p));
    for (auto& row : a)
      for (auto& x : row) x = dist(rng);
    if (integer_matrix_rank(a) < p) continue;
    std::vector<Poly<K>> comps;
    for (int i = 0; i < p; ++i) {
      Poly<K> c(h.ring());
      for (int j = 0; j < p; ++j)
        if (a[i][j] != 0)
          c += h.component(j).times_const(
              K::from_mpq(mpq_class(a[i][j]), h.ring()->characteristic));
      comps.push_back(std::move(c));
    }
    return MapGerm<K>(h.ring(), std::move(comps));
  }
  throw PrecondError("failed to draw an invertible recombination");
}

}  // namespace detail

template <class K>
Colength milnor_icis(const MapGerm<K>& h) {
  if (h.p() > h.n()) throw PrecondError("more components than variables");
  auto direct = detail::le_greuel(h);
  if (direct.value) return Colength::finite(uint64_t(*direct.value));
  if (!is_icis(h))
    throw PrecondError("not an icis: prefix " + std::to_string(direct.failed_prefix) +
                       " of the given components has infinite defining colength");
  for (uint64_t attempt = 0; attempt < 5; ++attempt) {
    auto r = detail::le_greuel(detail::recombine(h, 0xC0FFEEuLL + attempt));
    if (r.value) return Colength::finite(uint64_t(*r.value));
  }
  throw PrecondError("no admissible component recombination found (prefix " +
                     std::to_string(direct.failed_prefix) + " kept failing)");
}

// ---------------------------------------------------------------------------
// Bruce-Roberts numbers

enum class BRKind { MuX, TauX, MuXMinus, TauXMinus };
enum class BRRoute { Direct, Formula };
enum class VarietyKind { Icis, UnionHypersurfaces };

inline const char* br_name(BRKind k) {
  switch (k) {
    case BRKind::MuX: return "muX";
    case BRKind::TauX: return "tauX";
    case BRKind::MuXMinus: return "muX_minus";
    default: return "tauX_minus";
  }
}

namespace detail {

// N-part of the target module for each flavour; `ix` is the ideal of the
// variety (component ideal for an icis, product ideal for a union).
template <class K>
Submodule<K> br_npart(BRKind kind, const Poly<K>& f, const Submodule<K>& ix) {
  const RingPtr& ring = f.ring();
  switch (kind) {
    case BRKind::MuX: return Submodule<K>::zero(ring, 1);
    case BRKind::TauX: return Submodule<K>::ideal(ring, {f});
    case BRKind::MuXMinus: return ix.detached();
    case BRKind::TauXMinus: return module_sum(Submodule<K>::ideal(ring, {f}), ix);
  }
  throw Error("unreachable");
}

// dim O^{p+1} / (D(f,h) + (N + M)) - t, the exact-sequence route
template <class K>
Colength br_formula(const Poly<K>& f, const MapGerm<K>& h, const Submodule<K>& m,
                    const Submodule<K>& npart, const Colength& t) {
  if (!t.is_finite)
    throw InfiniteError("formula route: the subtracted colength is infinite");
  MapGerm<K> fh = MapGerm<K>::concat(MapGerm<K>(f), h);
  Colength big = t_M(fh, direct_sum(npart, m));
  if (!big.is_finite) return Colength::infinite();
  return Colength::finite(big.v - t.v);
}

template <class K>
Submodule<K> union_component_sum(const MapGerm<K>& h) {
  std::vector<VecPoly<K>> gens;
  for (int i = 0; i < h.p(); ++i) {
    VecPoly<K> v(h.ring(), h.p());
    v.c[i] = h.component(i);
    gens.push_back(std::move(v));
  }
  return Submodule<K>(h.ring(), h.p(), std::move(gens));
}

template <class K>
Submodule<K> union_variety_ideal(const MapGerm<K>& h) {
  Poly<K> prod(h.ring(), ring_const<K>(h.ring(), 1));
  for (const auto& c : h.components()) prod *= c;
  return Submodule<K>::ideal(h.ring(), {prod});
}

}  // namespace detail

template <class K>
Colength bruce_roberts(const Poly<K>& f, const MapGerm<K>& h, BRKind kind,
                       BRRoute route, VarietyKind variety = VarietyKind::Icis) {
  const bool is_union = variety == VarietyKind::UnionHypersurfaces;
  Submodule<K> ix = is_union ? detail::union_variety_ideal(h) : component_ideal(h);

  if (route == BRRoute::Direct) {
    LogDerivations<K> th =
        is_union ? theta(h, detail::union_component_sum(h)) : theta_x(h);
    Submodule<K> j = log_module(f, th).gens;
    Submodule<K> npart = detail::br_npart(kind, f, ix);
    return module_sum(j, npart).colength();
  }

  if (is_union) {
    Colength t0 = tau0(h);
    if (!t0.is_finite) throw InfiniteError("union route needs tau0(h) finite");
    return detail::br_formula(f, h, detail::union_component_sum(h),
                              detail::br_npart(kind, f, ix), t0);
  }

  if (!is_icis(h)) throw PrecondError("formula route needs an icis");
  Submodule<K> m = Submodule<K>::ideal_power(ix, h.p());
  Submodule<K> npart = detail::br_npart(kind, f, ix);
  return detail::br_formula(f, h, m, npart, tjurina(h));
}

// ---------------------------------------------------------------------------
// I-consistency: D(g) cap I^{+s} = I D(g)

template <class K>
struct ConsistencyResult {
  bool consistent = false;
  std::optional<VecPoly<K>> offending;  // element of one side outside the other
};

template <class K>
ConsistencyResult<K> i_consistent(const MapGerm<K>& g, const Submodule<K>& I) {
  Submodule<K> d = jacobian_module(g);
  Submodule<K> cap = intersect(d, Submodule<K>::ideal_power(I, g.p()));
  Submodule<K> prod = ideal_times_module(I, d);
  for (const auto& v : prod.generators())
    if (!cap.contains(v)) return {false, v};
  for (const auto& v : cap.generators())
    if (!prod.contains(v)) return {false, v};
  return {true, std::nullopt};
}

// Companion predicate for callers asserting that O^s/D(g) is Cohen-Macaulay
// of dimension d and that I is generated by a length-d regular sequence: then
// consistency is equivalent to J(g) + I having finite colength.
template <class K>
bool i_consistent_via_cm(const MapGerm<K>& g, const Submodule<K>& I, int asserted_dim) {
  if (int(I.num_generators()) != asserted_dim)
    throw PrecondError("ideal generator count differs from the asserted dimension");
  std::vector<Poly<K>> gens = jacobian_minors(g);
  for (const auto& v : I.generators()) gens.push_back(v.c[0]);
  return Submodule<K>::ideal(g.ring(), gens).colength().is_finite;
}

// ---------------------------------------------------------------------------
// kappa and the expression of muX through the pair invariants

// mu(f) + mu(f,h) + mu(h) - tau(h); every constituent is recomputed from
// scratch so route-agreement checks stay independent.
template <class K>
Colength kappa(const Poly<K>& f, const MapGerm<K>& h) {
  if (!is_icis(h)) throw PrecondError("kappa needs an icis h");
  Colength mu_f = milnor(f);
  if (!mu_f.is_finite) throw InfiniteError("kappa needs mu(f) finite");
  if (!bruce_roberts(f, h, BRKind::MuX, BRRoute::Formula).is_finite)
    throw InfiniteError("kappa needs muX(f) finite");
  Colength mu_h = milnor_icis(h);
  Colength mu_fh = milnor_icis(MapGerm<K>::concat(MapGerm<K>(f), h));
  Colength tau_h = tjurina(h);
  return Colength::finite(mu_f.v + mu_fh.v + mu_h.v - tau_h.v);
}

// dim I/(I J(f) + N) + mu(f,h) + mu(h) - tau(h) for an ideal N inside I
template <class K>
Colength mu_x_formula(const Poly<K>& f, const MapGerm<K>& h, const Submodule<K>& n) {
  if (!is_icis(h)) throw PrecondError("mu_x_formula needs an icis h");
  Submodule<K> I = component_ideal(h);
  for (const auto& g : n.generators())
    if (!I.contains(g)) throw PrecondError("mu_x_formula needs N contained in I");
  Colength finite_check = bruce_roberts(f, h, BRKind::MuX, BRRoute::Formula);
  if (!finite_check.is_finite) throw InfiniteError("mu_x_formula needs muX(f) finite");
  Submodule<K> bottom = module_sum(ideal_times_module(I, jacobian_ideal(f)), n);
  Colength quot = subquotient_dim(I, bottom);
  Colength mu_h = milnor_icis(h);
  Colength mu_fh = milnor_icis(MapGerm<K>::concat(MapGerm<K>(f), h));
  Colength tau_h = tjurina(h);
  return Colength::finite(quot.v + mu_fh.v + mu_h.v - tau_h.v);
}

// ---------------------------------------------------------------------------
// generic-section invariants gamma^{(i)} and mu_{H^{(i)}}

namespace detail {

inline uint64_t unanimous(const std::vector<uint64_t>& values, const char* what) {
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] != values[0])
      throw PrecondError(std::string(what) +
                         ": generic draws disagree (genericity failure), got " +
                         std::to_string(values[0]) + " and " +
                         std::to_string(values[i]));
  return values[0];
}

}  // namespace detail

// gamma^{(i)}(f) = dim <h_1..h_{n-i}> / (<h_1..h_{n-i}> J(f)) for a generic
// linear map; the supplied seeds must agree.
template <class K>
Colength gamma_i(const Poly<K>& f, int i, const std::vector<uint64_t>& seeds) {
  const int n = f.ring()->n;
  if (i < 0 || i >= n) throw PrecondError("gamma index out of range");
  if (seeds.empty()) throw PrecondError("gamma needs at least one seed");
  if (!milnor(f).is_finite) throw PrecondError("gamma needs an isolated singularity");
  std::vector<uint64_t> vals;
  for (uint64_t s : seeds) {
    MapGerm<K> h = generic_linear_map<K>(f.ring(), n - i, s);
    Submodule<K> I = component_ideal(h);
    Colength c = subquotient_dim(I, ideal_times_module(I, jacobian_ideal(f)));
    if (!c.is_finite) throw InfiniteError("gamma draw gave an infinite dimension");
    vals.push_back(c.v);
  }
  return Colength::finite(detail::unanimous(vals, "gamma"));
}

// mu_{H^{(i)}}(f): Bruce-Roberts number of f with respect to a generic linear
// subspace of dimension i, through the exact-sequence formula.
template <class K>
Colength mu_H_i(const Poly<K>& f, int i, const std::vector<uint64_t>& seeds) {
  const int n = f.ring()->n;
  if (i < 0 || i >= n) throw PrecondError("mu_H index out of range");
  if (seeds.empty()) throw PrecondError("mu_H needs at least one seed");
  if (!milnor(f).is_finite) throw PrecondError("mu_H needs an isolated singularity");
  std::vector<uint64_t> vals;
  for (uint64_t s : seeds) {
    MapGerm<K> h = generic_linear_map<K>(f.ring(), n - i, s);
    Submodule<K> I = component_ideal(h);
    Submodule<K> m = Submodule<K>::ideal_power(I, h.p());
    Colength c = detail::br_formula(f, h, m, Submodule<K>::zero(f.ring(), 1), t_M(h, m));
    if (!c.is_finite) throw InfiniteError("mu_H draw gave an infinite value");
    vals.push_back(c.v);
  }
  return Colength::finite(detail::unanimous(vals, "mu_H"));
}

// ---------------------------------------------------------------------------
// tables over unions of generic hyperplanes

struct BRTableRow {
  uint64_t muX = 0, tauX = 0, muXm = 0, tauXm = 0;
  friend bool operator==(const BRTableRow&, const BRTableRow&) = default;
};

// One row of the mu/tau table for the union of r generic hyperplanes; every
// seed must produce the same row.
template <class K>
BRTableRow hyperplane_table_row(const Poly<K>& f, int r,
                                const std::vector<uint64_t>& seeds) {
  std::vector<BRTableRow> rows;
  for (uint64_t s : seeds) {
    MapGerm<K> h = generic_linear_map<K>(f.ring(), r, s);
    BRTableRow row;
    auto get = [&](BRKind k) {
      Colength c = bruce_roberts(f, h, k, BRRoute::Formula,
                                 VarietyKind::UnionHypersurfaces);
      if (!c.is_finite)
        throw InfiniteError("hyperplane table entry is infinite (bad draw?)");
      return c.v;
    };
    row.muX = get(BRKind::MuX);
    row.tauX = get(BRKind::TauX);
    row.muXm = get(BRKind::MuXMinus);
    row.tauXm = get(BRKind::TauXMinus);
    rows.push_back(row);
  }
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i] == rows[0]))
      throw PrecondError("hyperplane table: seeds disagree (genericity failure)");
  return rows[0];
}

}  // namespace slog
