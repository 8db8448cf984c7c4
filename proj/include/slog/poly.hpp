#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slog/ring.hpp"

namespace slog {

template <class K>
struct Term {
  Mono m;
  K c;
};

// Integer constant as a field element of the ring's coefficient field; this
// is how prime-field values pick up their modulus.
template <class K>
K ring_const(const RingPtr& ring, long v) {
  return K::from_mpq(mpq_class(v), ring->characteristic);
}

// Sparse polynomial; terms are kept strictly descending in the local order so
// the leading term is terms().front().
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const K& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) t_.push_back({Mono::one(), c});
  }

  static Poly variable(const RingPtr& ring, int i, uint16_t k = 1) {
    if (i < 0 || i >= ring->n) throw Error("variable index out of range");
    Poly p(ring);
    p.t_.push_back({Mono::var(i, k), ring_const<K>(ring, 1)});
    return p;
  }
  static Poly term(const RingPtr& ring, const Mono& m, const K& c) {
    Poly p(ring);
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
  }
  // Sorts and combines an arbitrary term list.
  static Poly build(const RingPtr& ring, std::vector<Term<K>> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term<K>& a, const Term<K>& b) {
      return cmp_local(a.m, b.m) > 0;
    });
    Poly p(ring);
    for (auto& t : terms) {
      if (t.c.is_zero()) continue;
      if (!p.t_.empty() && p.t_.back().m == t.m) {
        p.t_.back().c += t.c;
        if (p.t_.back().c.is_zero()) p.t_.pop_back();
      } else {
        p.t_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  const Mono& lm() const { return t_.front().m; }
  const K& lc() const { return t_.front().c; }

  // max total degree of a term; -1 for the zero polynomial
  int degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, int(t.m.deg));
    return d;
  }
  // min total degree of a term (the order of the germ); -1 for zero
  int order() const {
    int d = -1;
    for (const auto& t : t_)
      if (d < 0 || int(t.m.deg) < d) d = int(t.m.deg);
    return d;
  }
  // the constant monomial is the largest one in a local order
  K constant_term() const {
    if (!t_.empty() && t_.front().m.is_one()) return t_.front().c;
    return K::zero();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  // p * c x^m
  Poly times_term(const Mono& m, const K& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
      K cc = t.c * c;
      if (!cc.is_zero()) r.t_.push_back({t.m.times(m), cc});
    }
    return r;
  }
  Poly times_const(const K& c) const { return times_term(Mono::one(), c); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_ ? a.ring_ : b.ring_);
    std::vector<Term<K>> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (const auto& ta : a.t_)
      for (const auto& tb : b.t_) acc.push_back({ta.m.times(tb.m), ta.c * tb.c});
    return build(a.ring_, std::move(acc));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(uint32_t k) const {
    Poly r(ring_, ring_const<K>(ring_, 1));
    Poly base = *this;
    while (k) {
      if (k & 1) r *= base;
      base = (k >>= 1) ? base * base : base;
    }
    return r;
  }

  Poly derivative(int i) const {
    if (i < 0 || i >= ring_->n) throw Error("variable index out of range");
    std::vector<Term<K>> acc;
    for (const auto& t : t_) {
      if (t.m.e[i] == 0) continue;
      Term<K> d{t.m, t.c * ring_const<K>(ring_, long(t.m.e[i]))};
      d.m.e[i] -= 1;
      d.m.deg -= 1;
      acc.push_back(std::move(d));
    }
    return build(ring_, std::move(acc));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : t_) {
      std::string c = t.c.str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string m;
      for (int i = 0; i < ring_->n; ++i) {
        if (t.m.e[i] == 0) continue;
        if (!m.empty()) m += "*";
        m += ring_->vars[i];
        if (t.m.e[i] > 1) m += "^" + std::to_string(t.m.e[i]);
      }
      if (m.empty()) {
        s += c;
      } else if (c == "1") {
        s += m;
      } else {
        s += c + "*" + m;
      }
    }
    return s;
  }

 private:
  static Poly merged(const Poly& a, const Poly& b, bool subtract) {
    Poly r(a.ring_ ? a.ring_ : b.ring_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      int c;
      if (i == a.t_.size())
        c = -1;
      else if (j == b.t_.size())
        c = 1;
      else
        c = cmp_local(a.t_[i].m, b.t_[j].m);
      if (c > 0) {
        r.t_.push_back(a.t_[i++]);
      } else if (c < 0) {
        Term<K> t = b.t_[j++];
        if (subtract) t.c = -t.c;
        r.t_.push_back(std::move(t));
      } else {
        K cc = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
        if (!cc.is_zero()) r.t_.push_back({a.t_[i].m, std::move(cc)});
        ++i, ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term<K>> t_;
};

// g(images[0], ..., images[p-1]) for g over a p-variable ring; the images all
// live in one target ring. Powers of each image are memoized.
template <class K>
Poly<K> substitute(const Poly<K>& g, const std::vector<Poly<K>>& images) {
  if (g.ring() && int(images.size()) != g.ring()->n)
    throw Error("substitution arity mismatch");
  RingPtr target;
  for (const auto& im : images)
    if (im.ring()) target = im.ring();
  if (!target) throw Error("substitution needs a target ring");
  std::vector<std::vector<Poly<K>>> pows(images.size());
  auto power = [&](int i, uint16_t k) -> const Poly<K>& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(Poly<K>(target, ring_const<K>(target, 1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Poly<K> acc(target);
  for (const auto& t : g.terms()) {
    Poly<K> prod(target, t.c);
    for (size_t i = 0; i < images.size(); ++i)
      if (t.m.e[i] > 0) prod *= power(int(i), t.m.e[i]);
    acc += prod;
  }
  return acc;
}

}  // namespace slog
