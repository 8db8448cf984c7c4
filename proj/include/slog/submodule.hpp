#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "slog/colength.hpp"

namespace slog {

// Finitely generated submodule of O_n^q. Values are immutable; the standard
// basis is computed once on first use and shared between copies.
template <class K>
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr ring, int rank, std::vector<VecPoly<K>> gens)
      : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {
    if (rank_ < 1) throw Error("submodule rank must be positive");
    gens_.reserve(gens.size());
    for (auto& g : gens) {
      if (g.rank() != rank_) throw Error("generator rank mismatch");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Submodule zero(const RingPtr& ring, int rank) {
    return Submodule(ring, rank, {});
  }
  static Submodule full(const RingPtr& ring, int rank) {
    std::vector<VecPoly<K>> gens;
    for (int i = 0; i < rank; ++i) gens.push_back(VecPoly<K>::unit(ring, rank, i));
    return Submodule(ring, rank, std::move(gens));
  }
  static Submodule ideal(const RingPtr& ring, const std::vector<Poly<K>>& gens) {
    std::vector<VecPoly<K>> vs;
    for (const auto& g : gens) vs.push_back(VecPoly<K>{{g}});
    return Submodule(ring, 1, std::move(vs));
  }
  // I^{+q}: the ideal repeated along the diagonal, lambda * e_i
  static Submodule ideal_power(const Submodule& I, int q) {
    if (I.rank() != 1) throw Error("ideal_power needs a rank-1 module");
    std::vector<VecPoly<K>> gens;
    for (const auto& g : I.generators())
      for (int i = 0; i < q; ++i) {
        VecPoly<K> v(I.ring(), q);
        v.c[i] = g.c[0];
        gens.push_back(std::move(v));
      }
    return Submodule(I.ring(), q, std::move(gens));
  }

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<VecPoly<K>>& generators() const { return gens_; }
  size_t num_generators() const { return gens_.size(); }

  const StdBasis<K>& basis() const {
    if (!cache_) throw Error("empty submodule value");
    std::call_once(cache_->flag, [this] {
      cache_->sb = std::make_shared<StdBasis<K>>(ring_, rank_, ModOrder{0}, gens_);
    });
    return *cache_->sb;
  }

  bool contains(const VecPoly<K>& v) const { return basis().contains(v); }
  bool contains(const Submodule& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }
  bool equals(const Submodule& other) const {
    return contains(other) && other.contains(*this);
  }

  Colength colength() const { return slog::colength(basis()); }

  // A fresh value with no shared standard-basis cache; evaluation routes that
  // must stay independent start from detached copies.
  Submodule detached() const { return Submodule(ring_, rank_, gens_); }

 private:
  struct Cache {
    std::once_flag flag;
    std::shared_ptr<const StdBasis<K>> sb;
  };

  RingPtr ring_;
  int rank_ = 0;
  std::vector<VecPoly<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
Submodule<K> module_sum(const Submodule<K>& a, const Submodule<K>& b) {
  if (a.rank() != b.rank()) throw Error("module sum rank mismatch");
  std::vector<VecPoly<K>> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule<K>(a.ring(), a.rank(), std::move(gens));
}

template <class K>
Submodule<K> module_sum(const Submodule<K>& a, const Submodule<K>& b,
                        const Submodule<K>& c) {
  return module_sum(module_sum(a, b), c);
}

// direct sum inside O^{ra+rb}: A in the first block of positions, B below
template <class K>
Submodule<K> direct_sum(const Submodule<K>& a, const Submodule<K>& b) {
  const int ra = a.rank(), rb = b.rank();
  std::vector<VecPoly<K>> gens;
  for (const auto& g : a.generators()) {
    VecPoly<K> v(a.ring(), ra + rb);
    for (int i = 0; i < ra; ++i) v.c[i] = g.c[i];
    gens.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    VecPoly<K> v(b.ring(), ra + rb);
    for (int i = 0; i < rb; ++i) v.c[ra + i] = g.c[i];
    gens.push_back(std::move(v));
  }
  return Submodule<K>(a.ring(), ra + rb, std::move(gens));
}

// Products lambda * g over all generator pairs.
template <class K>
Submodule<K> ideal_times_module(const Submodule<K>& I, const Submodule<K>& M) {
  if (I.rank() != 1) throw Error("ideal_times_module needs a rank-1 ideal");
  std::vector<VecPoly<K>> gens;
  for (const auto& lam : I.generators())
    for (const auto& g : M.generators()) gens.push_back(g.times_poly(lam.c[0]));
  return Submodule<K>(M.ring(), M.rank(), std::move(gens));
}

// Drop generators that lie in the span of the others. Quadratic in the
// number of generators, so only applied to moderate generator sets.
template <class K>
std::vector<VecPoly<K>> minimalize_generators(const RingPtr& ring, int rank,
                                              std::vector<VecPoly<K>> gens,
                                              size_t limit = 48) {
  // cheap passes first: zeros and exact duplicates
  std::vector<VecPoly<K>> uniq;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    VecPoly<K> c = g;
    normalize_content(c, ModOrder{0});
    bool dup = false;
    for (const auto& u : uniq)
      if (u == c) {
        dup = true;
        break;
      }
    if (!dup) uniq.push_back(std::move(c));
  }
  if (uniq.size() > limit) return uniq;
  for (size_t i = uniq.size(); i-- > 0;) {
    if (uniq.size() == 1) break;
    std::vector<VecPoly<K>> others;
    others.reserve(uniq.size() - 1);
    for (size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    StdBasis<K> sb(ring, rank, ModOrder{0}, others);
    if (sb.contains(uniq[i])) uniq.erase(uniq.begin() + ptrdiff_t(i));
  }
  return uniq;
}

namespace detail {

// Standard basis of the module generated by `embedded` in O^{front+back};
// returns the (projected) back components of the elements whose front block
// vanishes. Those elements generate all members supported in the back block.
template <class K>
std::vector<VecPoly<K>> back_block_members(const RingPtr& ring, int front, int back,
                                           const std::vector<VecPoly<K>>& embedded) {
  StdBasis<K> sb(ring, front + back, ModOrder{front}, embedded);
  std::vector<VecPoly<K>> out;
  for (const auto& e : sb.entries()) {
    if (e.lead.pos < front) continue;
    VecPoly<K> tail(ring, back);
    for (int i = 0; i < back; ++i) tail.c[i] = e.v.c[front + i];
    out.push_back(std::move(tail));
  }
  return out;
}

}  // namespace detail

// Module of syzygies of u_1, ..., u_s: all (g_1, ..., g_s) with
// sum g_i u_i = 0, computed by eliminating the ambient block.
template <class K>
Submodule<K> syzygy(const RingPtr& ring, int rank, const std::vector<VecPoly<K>>& u,
                    bool minimalize = true) {
  const int s = int(u.size());
  if (s == 0) return Submodule<K>::zero(ring, 1);
  std::vector<VecPoly<K>> embedded;
  embedded.reserve(s);
  for (int i = 0; i < s; ++i) {
    VecPoly<K> v(ring, rank + s);
    for (int j = 0; j < rank; ++j) v.c[j] = u[i].c[j];
    v.c[rank + i] = Poly<K>(ring, ring_const<K>(ring, 1));
    embedded.push_back(std::move(v));
  }
  auto gens = detail::back_block_members(ring, rank, s, embedded);
  if (minimalize) gens = minimalize_generators(ring, s, std::move(gens));
  return Submodule<K>(ring, s, std::move(gens));
}

template <class K>
Submodule<K> syzygy(const Submodule<K>& m) {
  return syzygy(m.ring(), m.rank(), m.generators());
}

// A cap B via the doubled-rank embedding: (a|a) and (b|0); members with zero
// front block have back block in A, equal to an element of B up to sign.
template <class K>
Submodule<K> intersect(const Submodule<K>& a, const Submodule<K>& b) {
  if (a.rank() != b.rank()) throw Error("intersection rank mismatch");
  const int q = a.rank();
  std::vector<VecPoly<K>> embedded;
  for (const auto& g : a.generators()) {
    VecPoly<K> v(a.ring(), 2 * q);
    for (int i = 0; i < q; ++i) {
      v.c[i] = g.c[i];
      v.c[q + i] = g.c[i];
    }
    embedded.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    VecPoly<K> v(b.ring(), 2 * q);
    for (int i = 0; i < q; ++i) v.c[i] = g.c[i];
    embedded.push_back(std::move(v));
  }
  auto gens = detail::back_block_members(a.ring(), q, q, embedded);
  gens = minimalize_generators(a.ring(), q, std::move(gens));
  return Submodule<K>(a.ring(), q, std::move(gens));
}

// Kernel of O^s -> O^q / B, e_i -> [a_i]: all coefficient vectors carrying
// the a_i into B.
template <class K>
Submodule<K> coefficient_kernel(const std::vector<VecPoly<K>>& a,
                                const Submodule<K>& b) {
  const int q = b.rank();
  const int s = int(a.size());
  std::vector<VecPoly<K>> embedded;
  for (int i = 0; i < s; ++i) {
    VecPoly<K> v(b.ring(), q + s);
    for (int j = 0; j < q; ++j) v.c[j] = a[i].c[j];
    v.c[q + i] = Poly<K>(b.ring(), ring_const<K>(b.ring(), 1));
    embedded.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    VecPoly<K> v(b.ring(), q + s);
    for (int j = 0; j < q; ++j) v.c[j] = g.c[j];
    embedded.push_back(std::move(v));
  }
  // syzygies of [a | b] projected onto the a-coefficients
  StdBasis<K> sb(b.ring(), q + s, ModOrder{q}, embedded);
  std::vector<VecPoly<K>> gens;
  for (const auto& e : sb.entries()) {
    if (e.lead.pos < q) continue;
    VecPoly<K> tail(b.ring(), s);
    for (int i = 0; i < s; ++i) tail.c[i] = e.v.c[q + i];
    gens.push_back(std::move(tail));
  }
  return Submodule<K>(b.ring(), s, std::move(gens));
}

// dim_C A/B for B contained in A, via the presentation
// A/B = O^s / ker(e_i -> [a_i]); works when the ambient colengths are
// infinite. When both are finite the difference of colengths must agree and
// is used as a cross-check.
template <class K>
Colength subquotient_dim(const Submodule<K>& a, const Submodule<K>& b) {
  if (a.rank() != b.rank()) throw Error("subquotient rank mismatch");
  for (const auto& g : b.generators())
    if (!a.contains(g))
      throw PrecondError("subquotient: second module is not contained in the first");
  if (a.num_generators() == 0) return Colength::finite(0);
  Submodule<K> ker = coefficient_kernel(a.generators(), b);
  Colength dim = ker.colength();
  Colength ca = a.colength();
  Colength cb = b.colength();
  if (ca.is_finite && cb.is_finite) {
    Colength diff = Colength::finite(cb.v - ca.v);
    if (!(dim == diff))
      throw InternalError("subquotient dimension " + dim.str() +
                          " disagrees with colength difference " + diff.str());
  }
  return dim;
}

// dim_C Tor_1(O^q/M, O/I) = dim_C (M cap I^q) / (I M)
template <class K>
Colength tor1_dim(const Submodule<K>& m, const Submodule<K>& I) {
  if (I.rank() != 1) throw Error("tor1 needs a rank-1 ideal");
  Submodule<K> top = intersect(m, Submodule<K>::ideal_power(I, m.rank()));
  Submodule<K> bot = ideal_times_module(I, m);
  return subquotient_dim(top, bot);
}

// Componentwise composition with h; the image generates a submodule over the
// source ring of h.
template <class K>
Submodule<K> pullback(const Submodule<K>& m, const MapGerm<K>& h) {
  if (m.ring()->n != h.p())
    throw Error("pullback arity mismatch: module over O_" +
                std::to_string(m.ring()->n) + ", map into C^" + std::to_string(h.p()));
  std::vector<VecPoly<K>> gens;
  for (const auto& g : m.generators()) gens.push_back(substitute(g, h));
  return Submodule<K>(h.ring(), m.rank(), std::move(gens));
}

// D(h): jacobian module, the columns of the differential matrix
template <class K>
Submodule<K> jacobian_module(const MapGerm<K>& h) {
  return Submodule<K>(h.ring(), h.p(), jacobian(h).columns());
}

template <class K>
Submodule<K> jacobian_ideal(const Poly<K>& f) {
  std::vector<Poly<K>> gens;
  for (int i = 0; i < f.ring()->n; ++i) gens.push_back(f.derivative(i));
  return Submodule<K>::ideal(f.ring(), gens);
}

}  // namespace slog
