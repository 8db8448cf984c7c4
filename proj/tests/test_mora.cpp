#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "slog/derlog.hpp"
#include "test_util.hpp"

using namespace slog;
using testutil::random_nonzero_poly;

namespace {

Poly<Rat> X(const RingPtr& r, int i, uint16_t k = 1) {
  return Poly<Rat>::variable(r, i, k);
}

Submodule<Rat> ideal_of(const RingPtr& r, std::vector<Poly<Rat>> gens) {
  return Submodule<Rat>::ideal(r, gens);
}

// Brute-force standard monomial count for a monomial submodule, independent
// of the engine: enumerate degree by degree and stop at the first empty
// level (standard monomials are closed under division).
struct BruteMono {
  int pos;
  std::vector<int> e;
};

bool brute_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void enumerate_degree(int n, int d, std::vector<int>& cur, int from,
                      const std::function<void(const std::vector<int>&)>& fn) {
  if (from == n - 1) {
    cur[from] = d;
    fn(cur);
    return;
  }
  for (int k = 0; k <= d; ++k) {
    cur[from] = k;
    enumerate_degree(n, d - k, cur, from + 1, fn);
  }
}

// returns -1 for infinite
long brute_colength(int n, int rank, const std::vector<BruteMono>& gens, int hard_cap) {
  long total = 0;
  for (int pos = 0; pos < rank; ++pos) {
    long count = 0;
    bool saw_any = true;
    for (int d = 0; saw_any; ++d) {
      if (d > hard_cap) return -1;
      saw_any = false;
      std::vector<int> cur(n);
      enumerate_degree(n, d, cur, 0, [&](const std::vector<int>& m) {
        for (const auto& g : gens)
          if (g.pos == pos && brute_divides(g.e, m)) return;
        ++count;
        saw_any = true;
      });
    }
    total += count;
  }
  return total;
}

}  // namespace

TEST_CASE("standard basis of principal and monomial ideals") {
  auto r = make_ring({"x", "y"});
  auto b1 = ideal_of(r, {X(r, 0)}).basis();
  REQUIRE(b1.entries().size() == 1);
  CHECK(b1.entries()[0].lead.m == Mono::var(0));

  auto b2 = ideal_of(r, {X(r, 0, 2), X(r, 1, 2)}).basis();
  auto leads = b2.leading_module();
  REQUIRE(leads.size() == 1);
  CHECK(leads[0].size() == 2);
}

TEST_CASE("units are recognized through local reduction") {
  // <x - x^2> = <x> in the local ring: 1 - x is a unit
  auto r = make_ring({"x"});
  Submodule<Rat> m = ideal_of(r, {X(r, 0) - X(r, 0, 2)});
  auto leads = m.basis().leading_module();
  REQUIRE(leads[0].size() == 1);
  CHECK(leads[0][0] == Mono::var(0));
  CHECK(m.contains(VecPoly<Rat>{{X(r, 0)}}));
  CHECK(m.colength() == 1);
}

TEST_CASE("normal form examples") {
  auto r = make_ring({"x", "y"});
  Submodule<Rat> mx = ideal_of(r, {X(r, 0), X(r, 1)});
  VecPoly<Rat> one{{Poly<Rat>(r, Rat(1))}};
  CHECK(!mx.basis().reduce(one).is_zero());
  CHECK(mx.colength() == 1);

  Submodule<Rat> m = ideal_of(r, {X(r, 0, 3) + X(r, 1, 2), X(r, 0) * X(r, 1)});
  for (const auto& g : m.generators()) CHECK(m.basis().reduce(g).is_zero());
}

TEST_CASE("membership soundness on random combinations") {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<VecPoly<Rat>> gens;
    for (int i = 0; i < 3; ++i) {
      VecPoly<Rat> v(r, 2);
      v.c[0] = random_nonzero_poly(r, rng, 3, 3);
      v.c[1] = random_nonzero_poly(r, rng, 3, 3);
      gens.push_back(v);
    }
    Submodule<Rat> m(r, 2, gens);
    VecPoly<Rat> combo(r, 2);
    for (const auto& g : gens)
      combo += g.times_poly(random_nonzero_poly(r, rng, 2, 2, false));
    CHECK(m.contains(combo));
  }
}

TEST_CASE("idempotence of the standard basis") {
  auto r = make_ring({"x", "y"});
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<VecPoly<Rat>> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(VecPoly<Rat>{{random_nonzero_poly(r, rng, 4, 3)}});
    Submodule<Rat> m(r, 1, gens);
    Submodule<Rat> again(r, 1, m.basis().generators());
    auto l1 = m.basis().leading_module();
    auto l2 = again.basis().leading_module();
    REQUIRE(l1.size() == l2.size());
    for (size_t p = 0; p < l1.size(); ++p) {
      std::set<std::array<uint16_t, kMaxVars>> s1, s2;
      for (const auto& m1 : l1[p]) s1.insert(m1.e);
      for (const auto& m2 : l2[p]) s2.insert(m2.e);
      CHECK(s1 == s2);
    }
  }
}

TEST_CASE("colength examples") {
  auto r = make_ring({"x", "y"});
  CHECK(ideal_of(r, {X(r, 0), X(r, 1)}).colength() == 1);
  CHECK(ideal_of(r, {X(r, 0, 2), X(r, 1, 2)}).colength() == 4);
  CHECK_FALSE(ideal_of(r, {X(r, 0)}).colength().is_finite);

  // tau of (x^3+y^3, x^2 y)
  MapGerm<Rat> h(r, {X(r, 0, 3) + X(r, 1, 3), X(r, 0, 2) * X(r, 1)});
  CHECK(tjurina_module(h).colength() == 11);
}

TEST_CASE("colength is independent of generator order") {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 6; ++rep) {
    std::vector<Poly<Rat>> gens = {X(r, 0, 2) + random_nonzero_poly(r, rng, 3, 2),
                                   X(r, 1, 3) + random_nonzero_poly(r, rng, 3, 2),
                                   X(r, 2, 2), random_nonzero_poly(r, rng, 3, 3)};
    Colength base = ideal_of(r, gens).colength();
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(ideal_of(r, gens).colength() == base);
  }
}

TEST_CASE("colength agrees with brute-force staircase enumeration") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + int(rng() % 3);
    std::vector<std::string> names = {"x", "y", "z"};
    auto r = make_ring(std::vector<std::string>(names.begin(), names.begin() + n));
    int rank = 1 + int(rng() % 2);
    std::vector<BruteMono> bgens;
    std::vector<VecPoly<Rat>> gens;
    int count = 1 + int(rng() % 4);
    bool force_finite = rep % 2 == 0;
    for (int pos = 0; pos < rank; ++pos) {
      for (int i = 0; i < count; ++i) {
        BruteMono bm{pos, std::vector<int>(n, 0)};
        int d = 1 + int(rng() % 6);
        for (int k = 0; k < d; ++k) bm.e[int(rng() % n)]++;
        bgens.push_back(bm);
      }
      if (force_finite)
        for (int v = 0; v < n; ++v) {
          BruteMono bm{pos, std::vector<int>(n, 0)};
          bm.e[v] = 1 + int(rng() % 6);
          bgens.push_back(bm);
        }
    }
    for (const auto& bm : bgens) {
      Mono m;
      for (int v = 0; v < n; ++v) {
        m.e[v] = uint16_t(bm.e[v]);
        m.deg += uint32_t(bm.e[v]);
      }
      VecPoly<Rat> vec(r, rank);
      vec.c[bm.pos] = Poly<Rat>::term(r, m, Rat(1));
      gens.push_back(vec);
    }
    long expect = brute_colength(n, rank, bgens, 40);
    Colength got = Submodule<Rat>(r, rank, gens).colength();
    if (expect < 0) {
      CHECK_FALSE(got.is_finite);
    } else {
      CHECK(got == uint64_t(expect));
    }
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("degree cap aborts runaway reductions") {
  auto r = make_ring({"x"}, 0, 2);
  Submodule<Rat> m = ideal_of(r, {X(r, 0) - X(r, 0, 3)});
  CHECK_THROWS_AS(m.basis().reduce(VecPoly<Rat>{{X(r, 0)}}), DegreeCapError);
}

TEST_CASE("mixed generator ranks are rejected") {
  auto r = make_ring({"x", "y"});
  std::vector<VecPoly<Rat>> gens;
  gens.push_back(VecPoly<Rat>{{X(r, 0)}});
  CHECK_THROWS_AS(Submodule<Rat>(r, 2, gens), Error);
}

TEST_CASE("standard bases over a prime field") {
  auto r = make_ring({"x", "y"}, 32003);
  using P = Poly<Fp>;
  P x = P::variable(r, 0), y = P::variable(r, 1);
  Submodule<Fp> j(r, 1, {VecPoly<Fp>{{x.pow(3)}}, VecPoly<Fp>{{y.pow(3)}}});
  CHECK(j.colength() == 9);
  Submodule<Fp> loc(r, 1, {VecPoly<Fp>{{x - x.pow(2)}}, VecPoly<Fp>{{y.pow(2)}}});
  CHECK(loc.colength() == 2);  // <x, y^2> locally
}
