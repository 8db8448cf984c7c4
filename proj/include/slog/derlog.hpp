#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slog/submodule.hpp"

namespace slog {

// delta applied to a map: sum_i delta_i dh/dx_i, a vector of length p.
template <class K>
VecPoly<K> apply_derivation(const VecPoly<K>& delta, const MapGerm<K>& h) {
  VecPoly<K> r(h.ring(), h.p());
  for (int i = 0; i < h.n(); ++i) {
    if (delta.c[i].is_zero()) continue;
    for (int j = 0; j < h.p(); ++j)
      r.c[j] += delta.c[i] * h.component(j).derivative(i);
  }
  return r;
}

template <class K>
Poly<K> apply_derivation(const VecPoly<K>& delta, const Poly<K>& f) {
  Poly<K> r(f.ring());
  for (int i = 0; i < f.ring()->n; ++i)
    if (!delta.c[i].is_zero()) r += delta.c[i] * f.derivative(i);
  return r;
}

// ideal generated by the components of h
template <class K>
Submodule<K> component_ideal(const MapGerm<K>& h) {
  return Submodule<K>::ideal(h.ring(), h.components());
}

// colength of <h_1,...,h_p> + J(h_1,...,h_p); finite iff h defines an icis
// (the dimension condition on h^{-1}(0) is taken on trust, see is_icis)
template <class K>
Colength icis_defining_colength(const MapGerm<K>& h) {
  if (h.p() > h.n()) throw PrecondError("map has more components than variables");
  std::vector<Poly<K>> gens = h.components();
  for (auto& m : jacobian_minors(h)) gens.push_back(std::move(m));
  return Submodule<K>::ideal(h.ring(), gens).colength();
}

enum class ThetaFlavor { General, Variety, Hamiltonian, Trivial };

// Theta_{h,M}: derivations delta of O_n with delta(h) in M.
template <class K>
struct LogDerivations {
  MapGerm<K> h;
  Submodule<K> m;          // the target module M
  Submodule<K> gens;       // submodule of O_n^n
  ThetaFlavor flavor = ThetaFlavor::General;
};

// Lemma-style syzygy construction: project syz[ Dh | M ] onto the first n
// coordinates. Every returned generator is membership-tested against M.
template <class K>
Submodule<K> theta_via_syzygy(const MapGerm<K>& h, const Submodule<K>& m) {
  if (m.rank() != h.p()) throw Error("theta: module rank must match target dimension");
  const int n = h.n();
  std::vector<VecPoly<K>> cols = jacobian(h).columns();
  for (const auto& g : m.generators()) cols.push_back(g);
  Submodule<K> syz = syzygy(h.ring(), h.p(), cols);
  std::vector<VecPoly<K>> gens;
  for (const auto& s : syz.generators()) {
    VecPoly<K> d(h.ring(), n);
    for (int i = 0; i < n; ++i) d.c[i] = s.c[i];
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  gens = minimalize_generators(h.ring(), n, std::move(gens));
  Submodule<K> theta(h.ring(), n, std::move(gens));
  for (const auto& d : theta.generators())
    if (!m.contains(apply_derivation(d, h)))
      throw InternalError("theta generator fails the tangency test");
  return theta;
}

template <class K>
LogDerivations<K> theta(const MapGerm<K>& h, const Submodule<K>& m) {
  return LogDerivations<K>{h, m, theta_via_syzygy(h, m), ThetaFlavor::General};
}

// Theta_X for X = h^{-1}(0), i.e. M = I^{+p} with I generated by the given
// components; no radical computation is attempted.
template <class K>
LogDerivations<K> theta_x(const MapGerm<K>& h) {
  Submodule<K> m = Submodule<K>::ideal_power(component_ideal(h), h.p());
  return LogDerivations<K>{h, m, theta_via_syzygy(h, m), ThetaFlavor::Variety};
}

// T(h) = D(h) + <h_1,...,h_p> O^p, assembled column by column.
template <class K>
Submodule<K> tjurina_module(const MapGerm<K>& h) {
  std::vector<VecPoly<K>> gens = jacobian(h).columns();
  for (int i = 0; i < h.p(); ++i)
    for (int k = 0; k < h.p(); ++k) {
      VecPoly<K> v(h.ring(), h.p());
      v.c[i] = h.component(k);
      gens.push_back(std::move(v));
    }
  return Submodule<K>(h.ring(), h.p(), std::move(gens));
}

// T^0(h) = D(h) + the diagonal part only: h_i in position i.
template <class K>
Submodule<K> t0_module(const MapGerm<K>& h) {
  std::vector<VecPoly<K>> gens = jacobian(h).columns();
  for (int i = 0; i < h.p(); ++i) {
    VecPoly<K> v(h.ring(), h.p());
    v.c[i] = h.component(i);
    gens.push_back(std::move(v));
  }
  return Submodule<K>(h.ring(), h.p(), std::move(gens));
}

enum class HamiltonianMethod { Syzygy, Minors };

// H_h = Theta_{h,0}, the syzygies of the partial derivatives. For an icis of
// positive dimension the module is generated by the (p+1)-minors of the
// jacobian augmented with the operator row; the sign of the x_{c_j} component
// is the Laplace sign (-1)^{1+j} of the expansion along that row.
template <class K>
Submodule<K> hamiltonian_fields(const MapGerm<K>& h,
                                HamiltonianMethod method = HamiltonianMethod::Syzygy,
                                bool assert_icis = false) {
  const int n = h.n(), p = h.p();
  if (method == HamiltonianMethod::Syzygy) {
    Submodule<K> s = syzygy(h.ring(), p, jacobian(h).columns());
    return Submodule<K>(h.ring(), n,
                        minimalize_generators(h.ring(), n, s.generators()));
  }
  if (n - p < 1)
    throw PrecondError("minors method needs positive-dimensional zero set");
  if (!assert_icis && !icis_defining_colength(h).is_finite)
    throw PrecondError("minors method requires an icis");
  PolyMatrix<K> dh = jacobian(h);
  std::vector<VecPoly<K>> gens;
  detail::subsets(n, p + 1, [&](const std::vector<int>& cols) {
    VecPoly<K> v(h.ring(), n);
    for (int j = 0; j <= p; ++j) {
      PolyMatrix<K> sub(h.ring(), p, p);
      int jj = 0;
      for (int c = 0; c <= p; ++c) {
        if (c == j) continue;
        for (int r = 0; r < p; ++r) sub.at(r, jj) = dh.at(r, cols[c]);
        ++jj;
      }
      Poly<K> minor = determinant(sub);
      v.c[cols[j]] = (j % 2 == 0) ? minor : -minor;
    }
    if (!v.is_zero()) gens.push_back(std::move(v));
  });
  return Submodule<K>(h.ring(), n, std::move(gens));
}

template <class K>
LogDerivations<K> hamiltonian(const MapGerm<K>& h,
                              HamiltonianMethod method = HamiltonianMethod::Syzygy,
                              bool assert_icis = false) {
  return LogDerivations<K>{h, Submodule<K>::zero(h.ring(), h.p()),
                           hamiltonian_fields(h, method, assert_icis),
                           ThetaFlavor::Hamiltonian};
}

// Trivial vector fields Theta^T_{h,I} = I^{+n} + H_h; each generator delta
// satisfies delta(h) in I D(h), which is verified on construction.
template <class K>
LogDerivations<K> theta_trivial(const MapGerm<K>& h, const Submodule<K>& I,
                                HamiltonianMethod method = HamiltonianMethod::Syzygy,
                                bool assert_icis = false) {
  const int n = h.n();
  std::vector<VecPoly<K>> gens =
      Submodule<K>::ideal_power(I, n).generators();
  for (auto& g : hamiltonian_fields(h, method, assert_icis).generators())
    gens.push_back(std::move(g));
  Submodule<K> theta(h.ring(), n, std::move(gens));
  Submodule<K> idh = ideal_times_module(I, jacobian_module(h));
  for (const auto& d : theta.generators())
    if (!idh.contains(apply_derivation(d, h)))
      throw InternalError("trivial field fails the I*D(h) test");
  return LogDerivations<K>{h, Submodule<K>::ideal_power(I, h.p()), theta,
                           ThetaFlavor::Trivial};
}

// J_{h,M}(f): the module generated by delta(f) over the generators of a
// derivation module; each generator keeps its witness derivation.
template <class K>
struct LogModule {
  MapGerm<K> f;
  Submodule<K> gens;                 // submodule of O_n^q
  std::vector<VecPoly<K>> witnesses; // witness delta per raw generator
  std::vector<VecPoly<K>> images;    // delta(f), parallel to witnesses
};

template <class K>
LogModule<K> log_module(const MapGerm<K>& f, const LogDerivations<K>& th) {
  if (th.h.ring() != f.ring()) throw Error("log_module: mismatched rings");
  LogModule<K> out;
  out.f = f;
  std::vector<VecPoly<K>> gens;
  for (const auto& d : th.gens.generators()) {
    VecPoly<K> img = apply_derivation(d, f);
    out.witnesses.push_back(d);
    out.images.push_back(img);
    if (!img.is_zero()) gens.push_back(std::move(img));
  }
  out.gens = Submodule<K>(f.ring(), f.p(), std::move(gens));
  return out;
}

template <class K>
LogModule<K> log_module(const Poly<K>& f, const LogDerivations<K>& th) {
  return log_module(MapGerm<K>(f), th);
}

}  // namespace slog
