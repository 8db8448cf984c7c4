#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "slog/freemod.hpp"
#include "test_util.hpp"

using namespace slog;
using testutil::random_nonzero_poly;

namespace {

RingPtr ring2() { return make_ring({"x", "y"}); }
RingPtr ring3() { return make_ring({"x", "y", "z"}); }

Poly<Rat> X(const RingPtr& r, int i, uint16_t k = 1) {
  return Poly<Rat>::variable(r, i, k);
}

}  // namespace

TEST_CASE("local order basics") {
  Mono one = Mono::one();
  Mono x = Mono::var(0), y = Mono::var(1);
  Mono x2 = Mono::var(0, 2);
  CHECK(cmp_local(one, x) > 0);  // 1 is the largest monomial
  CHECK(cmp_local(x, x2) > 0);   // lower degree is larger
  CHECK(cmp_local(x, y) > 0);    // revlex tie-break
  CHECK(cmp_local(x, x) == 0);
}

TEST_CASE("ring context validation") {
  CHECK_THROWS_AS(make_ring({"x", "x"}), Error);
  CHECK_THROWS_AS(make_ring({}), Error);
  CHECK_THROWS_AS(make_ring({"x"}, 4), Error);  // 4 is not prime
  CHECK_NOTHROW(make_ring({"x"}, 32003));
}

TEST_CASE("ring axioms on randomized polynomials") {
  auto r = ring3();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    auto a = random_nonzero_poly(r, rng, 4, 5, false);
    auto b = random_nonzero_poly(r, rng, 4, 5, false);
    auto c = random_nonzero_poly(r, rng, 4, 5, false);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a - a == Poly<Rat>(r));
  }
}

TEST_CASE("exact coefficient arithmetic") {
  auto r = ring2();
  Poly<Rat> p = X(r, 0).times_const(Rat(1, 3)) + X(r, 1).times_const(Rat(1, 6));
  Poly<Rat> q = p + p + p + p + p + p;  // 6p = 2x + y
  CHECK(q == X(r, 0).times_const(Rat(2)) + X(r, 1));
}

TEST_CASE("partial derivative examples") {
  auto r2 = ring2();
  // d/dx (x^3 + y^3) = 3x^2
  Poly<Rat> f = X(r2, 0, 3) + X(r2, 1, 3);
  CHECK(f.derivative(0) == X(r2, 0, 2).times_const(Rat(3)));
  // d/dy (x^2 y) = x^2
  Poly<Rat> g = X(r2, 0, 2) * X(r2, 1);
  CHECK(g.derivative(1) == X(r2, 0, 2));
  // d/dz (xyz + x^4 + y^4 + z^4) = xy + 4z^3
  auto r3 = ring3();
  Poly<Rat> h = X(r3, 0) * X(r3, 1) * X(r3, 2) + X(r3, 0, 4) + X(r3, 1, 4) + X(r3, 2, 4);
  CHECK(h.derivative(2) == X(r3, 0) * X(r3, 1) + X(r3, 2, 3).times_const(Rat(4)));
  CHECK_THROWS_AS(h.derivative(5), Error);
}

TEST_CASE("Leibniz rule on randomized polynomials") {
  auto r = ring3();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    auto f = random_nonzero_poly(r, rng, 4, 4, false);
    auto g = random_nonzero_poly(r, rng, 4, 4, false);
    for (int v = 0; v < 3; ++v)
      CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST_CASE("substitution is a ring morphism") {
  auto r3 = ring3();
  auto r2 = ring2();
  std::mt19937_64 rng(13);
  MapGerm<Rat> h(r2, {X(r2, 0, 2), X(r2, 0) * X(r2, 1), X(r2, 1, 3)});
  for (int i = 0; i < 15; ++i) {
    auto p = random_nonzero_poly(r3, rng, 3, 4, false);
    auto q = random_nonzero_poly(r3, rng, 3, 4, false);
    CHECK(substitute(p * q, h) == substitute(p, h) * substitute(q, h));
    CHECK(substitute(p + q, h) == substitute(p, h) + substitute(q, h));
  }
}

TEST_CASE("substitution examples") {
  auto r3 = make_ring({"x", "y", "z"});
  auto r2 = make_ring({"u", "v"});
  // swallowtail discriminant polynomial
  Poly<Rat> phi = X(r3, 2, 3).times_const(Rat(256)) - X(r3, 0, 4).times_const(Rat(27)) +
                  (X(r3, 0, 2) * X(r3, 1) * X(r3, 2)).times_const(Rat(144)) -
                  (X(r3, 1, 2) * X(r3, 2, 2)).times_const(Rat(128)) -
                  (X(r3, 0, 2) * X(r3, 1, 3)).times_const(Rat(4)) +
                  (X(r3, 1, 4) * X(r3, 2)).times_const(Rat(16));
  MapGerm<Rat> h(r2, {X(r2, 0), Poly<Rat>(r2), X(r2, 1)});
  CHECK(substitute(phi, h) ==
        X(r2, 1, 3).times_const(Rat(256)) - X(r2, 0, 4).times_const(Rat(27)));
  // identity map leaves polynomials unchanged
  MapGerm<Rat> id(r2, {X(r2, 0), X(r2, 1)});
  Poly<Rat> p = X(r2, 0, 2) * X(r2, 1) + X(r2, 1, 4);
  CHECK(substitute(p, id) == p);
  // arity mismatch is an error
  CHECK_THROWS_AS(substitute(phi, id), Error);
}

TEST_CASE("map germ constant term check") {
  auto r = ring2();
  CHECK_THROWS_AS(MapGerm<Rat>(r, {X(r, 0) + Poly<Rat>(r, Rat(1))}), Error);
}

TEST_CASE("jacobian examples") {
  auto r = ring2();
  MapGerm<Rat> h(r, {X(r, 0, 3) + X(r, 1, 3), X(r, 0, 2) * X(r, 1)});
  auto m = jacobian(h);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 2);
  CHECK(m.at(0, 0) == X(r, 0, 2).times_const(Rat(3)));
  CHECK(m.at(1, 0) == (X(r, 0) * X(r, 1)).times_const(Rat(2)));
  CHECK(m.at(0, 1) == X(r, 1, 2).times_const(Rat(3)));
  CHECK(m.at(1, 1) == X(r, 0, 2));
}

TEST_CASE("maximal minors") {
  auto r = ring2();
  MapGerm<Rat> h(r, {X(r, 0, 3) + X(r, 1, 3), X(r, 0, 2) * X(r, 1)});
  auto minors = maximal_minors(jacobian(h), 2);
  REQUIRE(minors.size() == 1);
  // det [[3x^2, 3y^2], [2xy, x^2]] = 3x^4 - 6xy^3
  CHECK(minors[0] == X(r, 0, 4).times_const(Rat(3)) -
                         (X(r, 0) * X(r, 1, 3)).times_const(Rat(6)));

  PolyMatrix<Rat> id(r, 2, 2);
  id.at(0, 0) = Poly<Rat>(r, Rat(1));
  id.at(1, 1) = Poly<Rat>(r, Rat(1));
  auto mi = maximal_minors(id, 2);
  REQUIRE(mi.size() == 1);
  CHECK(mi[0] == Poly<Rat>(r, Rat(1)));

  PolyMatrix<Rat> row(r, 1, 2);
  row.at(0, 0) = X(r, 0);
  row.at(0, 1) = X(r, 1);
  auto m1 = maximal_minors(row, 1);
  REQUIRE(m1.size() == 2);
  CHECK(m1[0] == X(r, 0));
  CHECK(m1[1] == X(r, 1));

  CHECK_THROWS_AS(maximal_minors(row, 2), Error);
}

TEST_CASE("Laplace expansion agrees with random cofactor rows") {
  auto r = ring2();
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    PolyMatrix<Rat> m(r, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = random_nonzero_poly(r, rng, 2, 2, false);
    Poly<Rat> ref = determinant(m);
    for (int row = 0; row < 3; ++row) {
      Poly<Rat> acc(r);
      for (int j = 0; j < 3; ++j) {
        PolyMatrix<Rat> sub(r, 2, 2);
        int ii = 0;
        for (int i = 0; i < 3; ++i) {
          if (i == row) continue;
          int jj = 0;
          for (int c = 0; c < 3; ++c) {
            if (c == j) continue;
            sub.at(ii, jj++) = m.at(i, c);
          }
          ++ii;
        }
        Poly<Rat> t = m.at(row, j) * determinant(sub);
        acc += ((row + j) % 2 == 0) ? t : -t;
      }
      CHECK(acc == ref);
    }
  }
}

TEST_CASE("prime field arithmetic") {
  Fp a(10, 13), b(7, 13);
  CHECK((a + b) == Fp(4, 13));
  CHECK((a * b) == Fp(5, 13));
  CHECK((a / b) == a * b.inv());
  CHECK((b * b.inv()).is_one());
  auto r = make_ring({"x", "y"}, 5);
  Poly<Fp> p = Poly<Fp>::variable(r, 0, 5);
  CHECK(p.derivative(0).is_zero());  // d/dx x^5 = 5x^4 = 0 mod 5
}
