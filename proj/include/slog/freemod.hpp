#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slog/poly.hpp"

namespace slog {

// Element of the free module O_n^q, stored as q polynomials.
template <class K>
struct VecPoly {
  std::vector<Poly<K>> c;

  VecPoly() = default;
  VecPoly(const RingPtr& ring, int rank) : c(rank, Poly<K>(ring)) {}
  explicit VecPoly(std::vector<Poly<K>> comps) : c(std::move(comps)) {}
  static VecPoly unit(const RingPtr& ring, int rank, int pos) {
    VecPoly v(ring, rank);
    v.c[pos] = Poly<K>(ring, ring_const<K>(ring, 1));
    return v;
  }

  int rank() const { return int(c.size()); }
  bool is_zero() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
  int degree() const {
    int d = -1;
    for (const auto& p : c) d = std::max(d, p.degree());
    return d;
  }

  VecPoly operator-() const {
    VecPoly r = *this;
    for (auto& p : r.c) p = -p;
    return r;
  }
  friend VecPoly operator+(const VecPoly& a, const VecPoly& b) {
    VecPoly r = a;
    for (int i = 0; i < r.rank(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend VecPoly operator-(const VecPoly& a, const VecPoly& b) {
    VecPoly r = a;
    for (int i = 0; i < r.rank(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  VecPoly& operator+=(const VecPoly& o) { return *this = *this + o; }
  VecPoly& operator-=(const VecPoly& o) { return *this = *this - o; }
  VecPoly times_term(const Mono& m, const K& k) const {
    VecPoly r = *this;
    for (auto& p : r.c) p = p.times_term(m, k);
    return r;
  }
  VecPoly times_poly(const Poly<K>& f) const {
    VecPoly r = *this;
    for (auto& p : r.c) p = p * f;
    return r;
  }

  friend bool operator==(const VecPoly& a, const VecPoly& b) { return a.c == b.c; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) s += (i ? ", " : "") + c[i].str();
    return s + ")";
  }
};

// Rectangular matrix of polynomials over a shared ring, row-major.
template <class K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const RingPtr& ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Poly<K>(ring)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  Poly<K>& at(int i, int j) { return a_[i * cols_ + j]; }
  const Poly<K>& at(int i, int j) const { return a_[i * cols_ + j]; }

  VecPoly<K> col(int j) const {
    VecPoly<K> v(ring_, rows_);
    for (int i = 0; i < rows_; ++i) v.c[i] = at(i, j);
    return v;
  }
  std::vector<VecPoly<K>> columns() const {
    std::vector<VecPoly<K>> r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back(col(j));
    return r;
  }

  // Horizontal concatenation.
  static PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_) throw Error("hcat row mismatch");
    PolyMatrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Poly<K>> a_;
};

// Cofactor expansion along the first row; sizes here stay small.
template <class K>
Poly<K> determinant(const PolyMatrix<K>& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const int k = m.rows();
  if (k == 0) return Poly<K>(m.ring(), ring_const<K>(m.ring(), 1));
  if (k == 1) return m.at(0, 0);
  Poly<K> acc(m.ring());
  for (int j = 0; j < k; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix<K> sub(m.ring(), k - 1, k - 1);
    for (int i = 1; i < k; ++i) {
      int jj = 0;
      for (int c = 0; c < k; ++c) {
        if (c == j) continue;
        sub.at(i - 1, jj++) = m.at(i, c);
      }
    }
    Poly<K> term = m.at(0, j) * determinant(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

namespace detail {
inline void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}
}  // namespace detail

// All k x k minors, iterating row subsets then column subsets in
// lexicographic order.
template <class K>
std::vector<Poly<K>> maximal_minors(const PolyMatrix<K>& m, int k) {
  if (k < 0 || k > std::min(m.rows(), m.cols()))
    throw Error("minor order out of range");
  std::vector<Poly<K>> out;
  detail::subsets(m.rows(), k, [&](const std::vector<int>& rs) {
    detail::subsets(m.cols(), k, [&](const std::vector<int>& cs) {
      PolyMatrix<K> sub(m.ring(), k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
      out.push_back(determinant(sub));
    });
  });
  return out;
}

// Analytic map germ (C^n,0) -> (C^p,0); every component vanishes at 0.
template <class K>
class MapGerm {
 public:
  MapGerm() = default;
  MapGerm(RingPtr ring, std::vector<Poly<K>> comps)
      : ring_(std::move(ring)), comp_(std::move(comps)) {
    if (comp_.empty()) throw Error("map germ needs at least one component");
    for (const auto& f : comp_)
      if (!f.constant_term().is_zero())
        throw Error("map germ component has nonzero constant term");
  }
  explicit MapGerm(const Poly<K>& f) : MapGerm(f.ring(), {f}) {}

  const RingPtr& ring() const { return ring_; }
  int n() const { return ring_->n; }
  int p() const { return int(comp_.size()); }
  const std::vector<Poly<K>>& components() const { return comp_; }
  const Poly<K>& component(int i) const { return comp_[i]; }

  // (f, h): components of f above components of h
  static MapGerm concat(const MapGerm& f, const MapGerm& h) {
    std::vector<Poly<K>> comps = f.comp_;
    comps.insert(comps.end(), h.comp_.begin(), h.comp_.end());
    return MapGerm(f.ring_, std::move(comps));
  }
  MapGerm prefix(int r) const {
    return MapGerm(ring_, std::vector<Poly<K>>(comp_.begin(), comp_.begin() + r));
  }

 private:
  RingPtr ring_;
  std::vector<Poly<K>> comp_;
};

// p x n matrix whose column j holds the j-th partials of the components.
template <class K>
PolyMatrix<K> jacobian(const MapGerm<K>& h) {
  PolyMatrix<K> m(h.ring(), h.p(), h.n());
  for (int i = 0; i < h.p(); ++i)
    for (int j = 0; j < h.n(); ++j) m.at(i, j) = h.component(i).derivative(j);
  return m;
}

// Ideal generated by the maximal minors of the jacobian.
template <class K>
std::vector<Poly<K>> jacobian_minors(const MapGerm<K>& h) {
  return maximal_minors(jacobian(h), std::min(h.p(), h.n()));
}

// g over O_p composed with h : (C^n,0) -> (C^p,0).
template <class K>
Poly<K> substitute(const Poly<K>& g, const MapGerm<K>& h) {
  if (g.ring() && g.ring()->n != h.p()) throw Error("substitution arity mismatch");
  return substitute(g, h.components());
}

template <class K>
VecPoly<K> substitute(const VecPoly<K>& v, const MapGerm<K>& h) {
  VecPoly<K> r(h.ring(), v.rank());
  for (int i = 0; i < v.rank(); ++i) r.c[i] = substitute(v.c[i], h);
  return r;
}

}  // namespace slog
