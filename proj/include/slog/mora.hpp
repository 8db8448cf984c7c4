#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "slog/freemod.hpp"

namespace slog {

template <class K>
struct Lead {
  int pos = -1;
  Mono m;
  K c;
};

template <class K>
std::optional<Lead<K>> lead_term(const VecPoly<K>& v, const ModOrder& ord) {
  std::optional<Lead<K>> best;
  for (int i = 0; i < v.rank(); ++i) {
    if (v.c[i].is_zero()) continue;
    const Mono& m = v.c[i].lm();
    if (!best || ord.cmp(i, m, best->pos, best->m) > 0)
      best = Lead<K>{i, m, v.c[i].lc()};
  }
  return best;
}

// Scale to a canonical representative: integer coefficients with content 1
// and positive leading coefficient over Q, monic over a prime field. Scaling
// by units of the field never changes the generated module.
template <class K>
void normalize_content(VecPoly<K>& v, const ModOrder& ord) {
  auto lt = lead_term(v, ord);
  if (!lt) return;
  if constexpr (K::kIsRational) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& p : v.c)
      for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.den().get_mpz_t());
      }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (lt->c.sign() < 0) scale = -scale;
    if (scale != 1) {
      K s{mpq_class(scale)};
      for (auto& p : v.c) p = p.times_const(s);
    }
  } else {
    K s = lt->c.inv();
    if (!s.is_one())
      for (auto& p : v.c) p = p.times_const(s);
  }
}

template <class K>
struct SBEntry {
  VecPoly<K> v;
  Lead<K> lead;
  int degree = 0;
  int ecart = 0;
  size_t nterms = 0;
};

template <class K>
SBEntry<K> make_entry(VecPoly<K> v, const ModOrder& ord) {
  SBEntry<K> e;
  normalize_content(v, ord);
  e.lead = *lead_term(v, ord);
  e.degree = v.degree();
  e.ecart = e.degree - int(e.lead.m.deg);
  for (const auto& p : v.c) e.nterms += p.terms().size();
  e.v = std::move(v);
  return e;
}

namespace detail {

template <class K>
void check_degree_cap(const VecPoly<K>& v, const Ring& ring) {
  if (v.degree() > int(ring.degree_cap))
    throw DegreeCapError(
        "intermediate degree " + std::to_string(v.degree()) +
        " exceeds the cap of " + std::to_string(ring.degree_cap) +
        "; raise --degree-cap if the computation is expected to be this large");
}

// h - (lc h / lc g) x^(lm h - lm g) g, scaled to stay fraction-free.
template <class K>
VecPoly<K> reduce_once(const VecPoly<K>& h, const Lead<K>& lh, const SBEntry<K>& g) {
  Mono quot = lh.m.div(g.lead.m);
  if (g.lead.c.is_one()) return h - g.v.times_term(quot, lh.c);
  return h.times_term(Mono::one(), g.lead.c) - g.v.times_term(quot, lh.c);
}

}  // namespace detail

// Mora weak normal form with ecart-bounded reducer selection. Intermediate
// results join the reducer set, which is what makes the loop terminate for
// local orders. The result r satisfies u f = a1 g1 + ... + as gs + r for a
// unit u of the local ring; r is zero iff f lies in the generated submodule
// whenever the gi form a standard basis.
template <class K>
VecPoly<K> normal_form(VecPoly<K> h, const std::vector<SBEntry<K>>& basis,
                       const ModOrder& ord, const Ring& ring) {
  std::vector<const SBEntry<K>*> pool;
  pool.reserve(basis.size());
  for (const auto& e : basis) pool.push_back(&e);
  std::vector<SBEntry<K>> extra;  // intermediates adopted as reducers
  extra.reserve(8);

  normalize_content(h, ord);
  long steps = 0;
  while (true) {
    ++steps;
#ifdef SLOG_TRACE_NF
    if (steps % 1 == 0) {
      auto l = lead_term(h, ord);
      size_t tt = 0;
      for (const auto& p : h.c) tt += p.terms().size();
      std::fprintf(stderr, "[nf] step %ld deg %d terms %zu extra %zu lead pos %d deg %u\n",
                   steps, h.degree(), tt, extra.size(), l ? l->pos : -1,
                   l ? l->m.deg : 0);
    }
#endif
    auto lh = lead_term(h, ord);
    if (!lh) return h;
    int h_ecart = h.degree() - int(lh->m.deg);

    const SBEntry<K>* best = nullptr;
    // extra entries are stored separately so pool pointers stay valid
    auto consider = [&](const SBEntry<K>* e) {
      if (e->lead.pos != lh->pos || !e->lead.m.divides(lh->m)) return;
      if (!best || e->ecart < best->ecart ||
          (e->ecart == best->ecart && e->nterms < best->nterms))
        best = e;
    };
    for (const auto* e : pool) consider(e);
    for (const auto& e : extra) consider(&e);
    if (!best) return h;

    VecPoly<K> next = detail::reduce_once(h, *lh, *best);
    if (best->ecart > h_ecart) extra.push_back(make_entry(std::move(h), ord));
    h = std::move(next);
    normalize_content(h, ord);
    detail::check_degree_cap(h, ring);
  }
}

template <class K>
VecPoly<K> spoly(const SBEntry<K>& a, const SBEntry<K>& b) {
  Mono l = Mono::lcm(a.lead.m, b.lead.m);
  return a.v.times_term(l.div(a.lead.m), b.lead.c) -
         b.v.times_term(l.div(b.lead.m), a.lead.c);
}

// Standard basis of a submodule of O_n^rank with respect to a local module
// order, via Buchberger's loop with Mora normal forms. Pairs are handled in
// the normal strategy (lowest lcm degree first); the Gebauer-Moeller chain
// rules prune the queue and the product criterion applies in rank one.
template <class K>
class StdBasis {
 public:
  StdBasis(RingPtr ring, int rank, ModOrder ord, const std::vector<VecPoly<K>>& gens)
      : ring_(std::move(ring)), rank_(rank), ord_(ord) {
    compute(gens);
  }

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const ModOrder& order() const { return ord_; }
  const std::vector<SBEntry<K>>& entries() const { return g_; }

  std::vector<VecPoly<K>> generators() const {
    std::vector<VecPoly<K>> r;
    r.reserve(g_.size());
    for (const auto& e : g_) r.push_back(e.v);
    return r;
  }

  VecPoly<K> reduce(const VecPoly<K>& v) const {
    if (v.rank() != rank_) throw Error("normal form rank mismatch");
    return normal_form(v, g_, ord_, *ring_);
  }
  bool contains(const VecPoly<K>& v) const { return reduce(v).is_zero(); }

  // leading terms, grouped per position, minimal generators only
  std::vector<std::vector<Mono>> leading_module() const {
    std::vector<std::vector<Mono>> leads(rank_);
    for (const auto& e : g_) leads[e.lead.pos].push_back(e.lead.m);
    for (auto& ms : leads) {
      std::vector<Mono> min;
      for (size_t i = 0; i < ms.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < ms.size() && !redundant; ++j)
          if (j != i && ms[j].divides(ms[i]) && !(ms[i].divides(ms[j]) && j > i))
            redundant = true;
        if (!redundant) min.push_back(ms[i]);
      }
      ms = std::move(min);
    }
    return leads;
  }

 private:
  struct Pair {
    int i, j;
    Mono lcm;
    int pos;
    bool operator<(const Pair& o) const {
      if (lcm.deg != o.lcm.deg) return lcm.deg < o.lcm.deg;
      if (int c = cmp_local(lcm, o.lcm)) return c > 0;
      if (pos != o.pos) return pos < o.pos;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  void compute(const std::vector<VecPoly<K>>& gens) {
    std::set<Pair> pairs;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.rank() != rank_) throw Error("generator rank mismatch");
      add_element(g, pairs);
    }
    long processed = 0;
    while (!pairs.empty()) {
      Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      ++processed;
#ifdef SLOG_TRACE_NF
      if (processed % 50 == 0)
        std::fprintf(stderr, "[std] pairs done %ld queued %zu basis %zu lcm deg %u\n",
                     processed, pairs.size(), g_.size(), p.lcm.deg);
#endif
      VecPoly<K> s = spoly(g_[p.i], g_[p.j]);
      VecPoly<K> h = normal_form(std::move(s), g_, ord_, *ring_);
      if (!h.is_zero()) add_element(h, pairs);
    }
    minimalize_leads();
  }

  void add_element(VecPoly<K> v, std::set<Pair>& pairs) {
    SBEntry<K> e = make_entry(std::move(v), ord_);
    detail::check_degree_cap(e.v, *ring_);
    const int t = int(g_.size());
    const Lead<K>& lt = e.lead;

    // chain rule on the existing queue: a pair whose lcm is divisible by the
    // new lead splits across the new element unless it shares an lcm with it
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      if (p.pos == lt.pos && lt.m.divides(p.lcm) &&
          Mono::lcm(g_[p.i].lead.m, lt.m) != p.lcm &&
          Mono::lcm(g_[p.j].lead.m, lt.m) != p.lcm)
        it = pairs.erase(it);
      else
        ++it;
    }

    // new pairs, pruned by divisibility among themselves
    std::vector<Pair> fresh;
    for (int i = 0; i < t; ++i) {
      if (g_[i].lead.pos != lt.pos) continue;
      fresh.push_back(Pair{i, t, Mono::lcm(g_[i].lead.m, lt.m), lt.pos});
    }
    std::vector<bool> drop(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a) {
      for (size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
        if (a == b || drop[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) &&
            (fresh[b].lcm != fresh[a].lcm || b < a))
          drop[a] = true;
      }
    }
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      // product criterion; only sound for ideals
      if (rank_ == 1 && fresh[a].lcm == g_[fresh[a].i].lead.m.times(lt.m)) continue;
      pairs.insert(fresh[a]);
    }
    g_.push_back(std::move(e));
  }

  // keep only entries needed to generate the leading module
  void minimalize_leads() {
    std::vector<SBEntry<K>> kept;
    for (size_t i = 0; i < g_.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < g_.size() && !redundant; ++j) {
        if (i == j || g_[j].lead.pos != g_[i].lead.pos) continue;
        if (!g_[j].lead.m.divides(g_[i].lead.m)) continue;
        if (g_[i].lead.m == g_[j].lead.m) {
          if (j < i) redundant = true;
        } else {
          redundant = true;
        }
      }
      if (!redundant) kept.push_back(std::move(g_[i]));
    }
    g_ = std::move(kept);
  }

  RingPtr ring_;
  int rank_;
  ModOrder ord_;
  std::vector<SBEntry<K>> g_;
};

}  // namespace slog
