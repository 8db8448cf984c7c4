#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "slog/errors.hpp"

namespace slog {

// Exact rational coefficients (characteristic 0).
class Rat {
 public:
  static constexpr bool kIsRational = true;

  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rat zero() { return Rat(); }
  static Rat one() { return Rat(1); }
  static Rat from_mpq(const mpq_class& q, uint32_t /*characteristic*/) {
    return Rat(q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  Rat inv() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rat(mpq_class(1) / v_);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

// Prime field element; the modulus travels with the value so mixed-modulus
// arithmetic is caught immediately.
class Fp {
 public:
  static constexpr bool kIsRational = false;

  Fp() : v_(0), p_(0) {}
  Fp(long v) : v_(v), p_(0) {}  // NOLINT: integer constant, modulus joins later
  Fp(int64_t v, uint32_t p) : p_(p) { v_ = norm(v, p); }

  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1, 0); }
  static Fp from_mpq(const mpq_class& q, uint32_t p) {
    if (p < 2) throw Error("prime field needs characteristic >= 2");
    mpz_class n = q.get_num() % p;
    mpz_class d = q.get_den() % p;
    Fp num(n.get_si(), p);
    Fp den(d.get_si(), p);
    return num / den;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return v_ == 0 ? 0 : 1; }

  Fp operator-() const { return p_ == 0 ? Fp(-v_, 0) : Fp(int64_t(p_) - v_, p_); }
  Fp& operator+=(const Fp& o) {
    join(o);
    v_ = norm(v_ + o.v_, p_);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    join(o);
    v_ = norm(v_ - o.v_, p_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    join(o);
    v_ = norm(v_ * o.v_, p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.v_ == b.v_ && (a.v_ == 0 || a.p_ == b.p_ || a.p_ == 0 || b.p_ == 0);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inv() const {
    if (is_zero()) throw Error("inverse of zero");
    if (p_ == 0) {
      if (v_ != 1 && v_ != -1) throw Error("integer constant has no inverse");
      return *this;
    }
    // extended euclid
    int64_t a = v_, m = p_, x0 = 0, x1 = 1;
    int64_t b = m;
    while (a > 1) {
      int64_t q = a / b;
      int64_t t = b;
      b = a % b;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    return Fp(x1, p_);
  }

  std::string str() const { return std::to_string(v_); }
  uint32_t modulus() const { return p_; }

 private:
  static int64_t norm(int64_t v, uint32_t p) {
    if (p == 0) return v;
    v %= int64_t(p);
    if (v < 0) v += p;
    return v;
  }
  // Values created by zero()/one() carry modulus 0 until combined.
  void join(const Fp& o) {
    if (p_ == 0) {
      p_ = o.p_;
      v_ = norm(v_, p_);
    } else if (o.p_ != 0 && o.p_ != p_) {
      throw Error("mixed prime field moduli");
    }
  }

  int64_t v_;
  uint32_t p_;
};

inline bool is_prime(uint32_t c) {
  if (c < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= c; ++d)
    if (c % d == 0) return false;
  return true;
}

}  // namespace slog
