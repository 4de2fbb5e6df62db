#include <doctest.h>

#include <random>

#include "nestcone/error.hpp"
#include "nestcone/spaces.hpp"

using namespace nestcone;

namespace {
std::vector<std::string> labels(const std::vector<BasisElement>& b) {
  std::vector<std::string> out;
  for (const auto& e : b) out.push_back(e.label);
  return out;
}
std::vector<SurfaceModel> surfaces() { return {p2(), p1xp1(), hirzebruch(1), hirzebruch(2), hirzebruch(3), k3(3), k3(5)}; }
}  // namespace

TEST_CASE("surface lattices") {
  CHECK(p2().rho == 1);
  CHECK(p2().gram == Mat{from_ints({1})});
  CHECK(p2().canonical == from_ints({-3}));
  CHECK(k3(3).gram == Mat{from_ints({4})});
  CHECK(k3(3).canonical == from_ints({0}));
  CHECK(p1xp1().gram == Mat{from_ints({0, 1}), from_ints({1, 0})});
  CHECK(p1xp1().canonical == from_ints({-2, -2}));
  CHECK(hirzebruch(0) == p1xp1());
  CHECK(hirzebruch(2).gram == Mat{from_ints({2, 1}), from_ints({1, 0})});
  CHECK(hirzebruch(2).canonical == from_ints({-2, 0}));
  CHECK(hirzebruch(1).generator_names == std::vector<std::string>{"H", "F"});
  CHECK(surface_from_name("f2") == hirzebruch(2));
  CHECK(surface_from_name("k3", 4) == k3(4));
}

TEST_CASE("surface errors") {
  CHECK_THROWS_WITH_AS(k3(2), doctest::Contains("InvalidGenus"), Error);
  CHECK_THROWS_AS(hirzebruch(-1), Error);
  try {
    hirzebruch(-1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidIndex);
  }
}

TEST_CASE("space validation and ranks") {
  CHECK_THROWS_AS(hilb(1, p2()), Error);
  CHECK_NOTHROW(nested(1, p2()));
  CHECK_THROWS_AS(nested(0, p2()), Error);
  CHECK_THROWS_AS(univ(1, p2()), Error);
  for (const auto& s : surfaces()) {
    int r = s.rho;
    CHECK(divisor_rank(surface_space(s)) == r);
    CHECK(divisor_rank(hilb(3, s)) == r + 1);
    CHECK(divisor_rank(nested(3, s)) == 2 * r + 2);
    CHECK(divisor_rank(univ(3, s)) == 2 * r + 1);
    for (const Space& sp : {hilb(3, s), nested(3, s), univ(3, s)}) {
      CHECK(curve_rank(sp) == divisor_rank(sp));
      CHECK(static_cast<int>(divisor_basis(sp).size()) == divisor_rank(sp));
      CHECK(static_cast<int>(curve_basis(sp).size()) == curve_rank(sp));
    }
  }
}

TEST_CASE("basis labels") {
  CHECK(labels(divisor_basis(nested(3, p2()))) == std::vector<std::string>{"Hdiff", "Hb", "Bdiff/2", "Bb/2"});
  CHECK(labels(curve_basis(nested(3, p2()))) == std::vector<std::string>{"Ca1", "Cb1", "Aa", "Ab"});
  CHECK(labels(divisor_basis(hilb(2, p1xp1()))) == std::vector<std::string>{"H1", "H2", "B/2"});
  CHECK(divisor_basis(univ(4, hirzebruch(1))).size() == 5);
  CHECK(labels(divisor_basis(univ(4, hirzebruch(1)))) ==
        std::vector<std::string>{"Hdiff", "Fdiff", "Hb", "Fb", "B/2"});
  CHECK(labels(curve_basis(univ(4, p1xp1()))) == std::vector<std::string>{"Ca1", "Ca2", "Cb1", "Cb2", "Aa"});
}

TEST_CASE("pullbacks") {
  Space sp = nested(5, p2());
  CHECK(pull_res(H(surface_space(p2())), sp).coords == from_ints({1, 0, 0, 0}));
  // pull_a(B/2) - pull_b(B/2) = Bdiff/2
  CHECK(pull_a(half_B(hilb(6, p2())), sp) - pull_b(half_B(hilb(5, p2())), sp) == half_Bdiff(sp));
  // pull_a(H) - pull_b(H) = Hdiff
  CHECK(pull_a(H(hilb(6, p2())), sp) - pull_b(H(hilb(5, p2())), sp) == Hdiff(sp));
  CHECK_THROWS_AS(pull_a(H(hilb(5, p2())), sp), Error);
  CHECK_THROWS_AS(pull_b(H(hilb(5, p1xp1())), nested(5, p2())), Error);

  Space u = univ(4, hirzebruch(1));
  CHECK(pull_a(half_B(hilb(4, hirzebruch(1))), u) == half_B(u));
  CHECK(pull_b(H(surface_space(hirzebruch(1)), 1), u) == Hb(u, 1));
  CHECK(pull_a(H(hilb(4, hirzebruch(1)), 0), u) - pull_b(H(surface_space(hirzebruch(1)), 0), u) == Hdiff(u, 0));
}

TEST_CASE("pullback decomposition and linearity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9), q(1, 5);
  for (const auto& s : surfaces()) {
    for (int n = 1; n <= 6; ++n) {
      Space sp = nested(n, s);
      for (int i = 0; i < s.rho; ++i) {
        if (n == 1) continue;
        DivClass z = pull_a(H(hilb(n + 1, s), i), sp) - pull_b(H(hilb(n, s), i), sp) -
                     pull_res(H(surface_space(s), i), sp);
        CHECK(z == div_zero(sp));
      }
      Space base = hilb(n + 1, s);
      for (int trial = 0; trial < 5; ++trial) {
        DivClass x = div_zero(base), y = div_zero(base);
        for (auto& c : x.coords) c = ratio(d(rng), q(rng));
        for (auto& c : y.coords) c = ratio(d(rng), q(rng));
        Rat a = ratio(d(rng), q(rng)), b = ratio(d(rng), q(rng));
        CHECK(pull_a(a * x + b * y, sp) == a * pull_a(x, sp) + b * pull_a(y, sp));
      }
    }
  }
}

TEST_CASE("tautological classes") {
  Space h = hilb(4, p2());
  CHECK(tautological(h, from_ints({3})).coords == from_ints({3, -1}));
  CHECK(tautological(h, from_ints({0})) == Rat(-1) * half_B(h));
  Space k = hilb(5, k3(3));
  CHECK(k3_slope(k3(3), 5) == ratio(7, 4));
  CHECK(tautological(k, Vec{k3_slope(k3(3), 5)}).coords == Vec{ratio(7, 4), -1});
  CHECK_THROWS_AS(tautological(nested(3, p2()), from_ints({1})), Error);
}

TEST_CASE("canonical class") {
  for (int n = 1; n <= 10; ++n) {
    Space sp = nested(n, p2());
    CHECK(canonical_class(sp) == Rat(-3) * Hb(sp) + Rat(-3) * Hdiff(sp) + half_Bdiff(sp));
  }
  Space k = nested(4, k3(3));
  CHECK(canonical_class(k) == half_Bdiff(k));
  // K_{F1} = -2H - F, expanded by hand
  Space f = nested(3, hirzebruch(1));
  CHECK(canonical_class(f).coords == from_ints({-2, -1, -2, -1, 1, 0}));
  CHECK_THROWS_AS(canonical_class(hilb(3, p2())), Error);
}
