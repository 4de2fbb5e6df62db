#include <doctest.h>

#include <algorithm>
#include <random>

#include "nestcone/cone.hpp"
#include "nestcone/error.hpp"
#include "nestcone/linalg.hpp"
#include "nestcone/spaces.hpp"

using namespace nestcone;

namespace {
Mat sorted(Mat m) {
  std::sort(m.begin(), m.end(), lex_less);
  return m;
}
Cone orthant(size_t d) {
  Mat m;
  for (size_t i = 0; i < d; ++i) m.push_back(unit(d, i));
  return cone_from_rays(d, m);
}
}  // namespace

TEST_CASE("construction normalizes") {
  Cone c = cone_from_rays(2, {from_ints({2, 0}), from_ints({0, 3})});
  CHECK(sorted(c.rays()) == Mat{from_ints({0, 1}), from_ints({1, 0})});
  CHECK(sorted(extremal_rays(cone_from_rays(2, {from_ints({1, 0}), from_ints({0, 1}), from_ints({1, 1})})).rays()) ==
        Mat{from_ints({0, 1}), from_ints({1, 0})});
  CHECK_THROWS_AS(cone_from_rays(2, {}), Error);
  CHECK_THROWS_AS(cone_from_rays(2, {from_ints({0, 0})}), Error);
  CHECK_THROWS_AS(cone_from_rays(2, {from_ints({1, 0, 0})}), Error);
}

TEST_CASE("nef generators of P2[n+1,n] span a pointed full cone") {
  for (int n = 2; n <= 6; ++n) {
    Space sp = nested(n, p2());
    Cone c = cone_from_rays(4, {Hb(sp).coords, taut_b(sp, from_ints({n - 1})).coords, Hdiff(sp).coords,
                                taut_a(sp, from_ints({n})).coords});
    CHECK(c.is_pointed());
    CHECK(c.is_full_dimensional());
    CHECK(extremal_rays(c).rays().size() == 4);
  }
}

TEST_CASE("dual") {
  CHECK(cone_equal(dual(orthant(3)), orthant(3)));
  Cone half = cone_from_rays(2, {from_ints({1, 0}), from_ints({-1, 0}), from_ints({0, 1})});
  Cone d = dual(half);
  CHECK(d.rays() == Mat{from_ints({0, 1})});
  CHECK_FALSE(half.is_pointed());
}

TEST_CASE("extremal rays") {
  Cone c = cone_from_rays(2, {from_ints({1, 0}), from_ints({1, 1}), from_ints({0, 1}), from_ints({2, 1})});
  CHECK(sorted(extremal_rays(c).rays()) == Mat{from_ints({0, 1}), from_ints({1, 0})});
  Cone one = cone_from_rays(3, {from_ints({1, 2, 3})});
  CHECK(extremal_rays(one).rays() == Mat{from_ints({1, 2, 3})});
  // Eff(P2[2,1]): H1, H2, B, D11 are all extremal
  Space u = univ(2, p2());
  Cone eff = cone_from_rays(3, {Hdiff(u).coords, Hb(u).coords, (Rat(2) * half_B(u)).coords,
                                (Hdiff(u) + Hb(u) - half_B(u)).coords});
  CHECK(extremal_rays(eff).rays().size() == 4);
}

TEST_CASE("position") {
  Cone o = orthant(2);
  CHECK(position(o, from_ints({1, 1})) == Position::Interior);
  CHECK(position(o, from_ints({1, 0})) == Position::Boundary);
  CHECK(position(o, from_ints({-1, 1})) == Position::Outside);
  CHECK(position(o, from_ints({0, 0})) == Position::Boundary);
  CHECK_THROWS_AS(position(o, from_ints({1, 1, 1})), Error);
  // lower-dimensional cones have no interior
  Cone ray = cone_from_rays(2, {from_ints({1, 1})});
  CHECK(position(ray, from_ints({2, 2})) == Position::Boundary);
  CHECK(position(ray, from_ints({2, 1})) == Position::Outside);
}

TEST_CASE("containment and equality") {
  CHECK(cone_equal(cone_from_rays(2, {from_ints({1, 0}), from_ints({0, 1})}),
                   cone_from_rays(2, {from_ints({1, 1}), from_ints({1, 0}), from_ints({0, 1})})));
  Cone a = cone_from_rays(2, {from_ints({1, 0}), from_ints({1, 1})});
  Cone b = cone_from_rays(2, {from_ints({0, 1}), from_ints({-1, 1})});
  CHECK_FALSE(cone_contains(a, b));
  CHECK_FALSE(cone_contains(b, a));
  CHECK(cone_contains(orthant(2), a));
  CHECK_THROWS_AS(cone_contains(orthant(2), orthant(3)), Error);
}

TEST_CASE("cross sections") {
  Space u = univ(2, p2());
  Cone eff = cone_from_rays(3, {Hdiff(u).coords, Hb(u).coords, (Rat(2) * half_B(u)).coords,
                                (Hdiff(u) + Hb(u) - half_B(u)).coords});
  Polytope sq = cross_section(eff, Normalization::CoordSum());
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.edges.size() == 4);
  for (const auto& v : sq.vertices) {
    Rat s = 0;
    for (const auto& x : v) s += x;
    CHECK(s == 1);
  }
  CHECK(std::is_sorted(sq.vertices.begin(), sq.vertices.end(), lex_less));

  Space sp = nested(2, p2());
  Cone nef = cone_from_rays(4, {Hb(sp).coords, taut_b(sp, from_ints({1})).coords, Hdiff(sp).coords,
                                taut_a(sp, from_ints({2})).coords});
  // D^b_1 has coordinate sum 0, so normalize by a positive functional
  Polytope simplex = cross_section(nef, Normalization::Given(from_ints({3, 3, -1, -1})));
  CHECK(simplex.vertices.size() == 4);
  CHECK(simplex.edges.size() == 6);
  CHECK_THROWS_AS(cross_section(nef, Normalization::CoordSum()), Error);

  Polytope one = cross_section(cone_from_rays(2, {from_ints({1, 3})}), Normalization::CoordSum());
  CHECK(one.vertices == Mat{Vec{ratio(1, 4), ratio(3, 4)}});
  CHECK(one.edges.empty());
  Cone half = cone_from_rays(2, {from_ints({1, 0}), from_ints({-1, 0})});
  try {
    cross_section(half, Normalization::CoordSum());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPointed);
  }
}

TEST_CASE("random pointed cones: dual of dual, idempotence, interior points") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> ent(-9, 9);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    size_t d = 2 + t % 4;
    size_t k = d + rng() % 3;
    Mat rays;
    // a positive first coordinate keeps the cone pointed
    for (size_t i = 0; i < k; ++i) {
      Vec v(d);
      v[0] = 1 + std::abs(ent(rng));
      for (size_t j = 1; j < d; ++j) v[j] = ent(rng);
      rays.push_back(v);
    }
    Cone c = extremal_rays(cone_from_rays(d, rays));
    CHECK(sorted(extremal_rays(dual(dual(c))).rays()) == sorted(c.rays()));
    CHECK(sorted(extremal_rays(c).rays()) == sorted(c.rays()));
    Vec sum = zeros(d);
    for (const auto& r : c.rays()) sum = add(sum, scale(1 + rng() % 5, r));
    if (c.is_full_dimensional()) {
      CHECK(position(c, sum) == Position::Interior);
      for (const auto& r : c.rays()) CHECK(position(c, r) == Position::Boundary);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("simplicial membership matches solving for coefficients") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ent(-4, 4);
  for (int t = 0; t < 40; ++t) {
    size_t d = 3;
    Mat rays;
    for (size_t i = 0; i < d; ++i) {
      Vec v(d);
      for (auto& x : v) x = ent(rng);
      rays.push_back(v);
    }
    if (rank(rays) < d) continue;
    Cone c = cone_from_rays(d, rays);
    Vec p(d);
    for (auto& x : p) x = ent(rng);
    auto s = solve(transpose(rays), p, d);
    REQUIRE(s.status == SolveStatus::Unique);
    bool nonneg = std::all_of(s.x.begin(), s.x.end(), [](const Rat& x) { return sgn(x) >= 0; });
    CHECK(contains_point(c, p) == nonneg);
  }
}
