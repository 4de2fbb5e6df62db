#include <doctest.h>

#include "nestcone/error.hpp"
#include "nestcone/linalg.hpp"

using namespace nestcone;

TEST_CASE("rationals print canonically and parse back") {
  Rat r(6, -4);
  r.canonicalize();
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(Rat(4)) == "4");
  CHECK(parse_rat("-3/2") == r);
  CHECK(parse_rat("10/4") == ratio(5, 2));
  for (const char* bad : {"1/0", "x", ""}) {
    try {
      parse_rat(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
    }
  }
  CHECK(ratio(-8, 2) == Rat(-4));
  CHECK(ratio(6, 6) == Rat(1));
}

TEST_CASE("primitive clears denominators and common factors") {
  CHECK(primitive(Vec{ratio(1, 2), ratio(1, 3)}) == from_ints({3, 2}));
  CHECK(primitive(from_ints({4, -6, 0})) == from_ints({2, -3, 0}));
  CHECK(primitive(from_ints({-2, 0})) == from_ints({-1, 0}));
}

TEST_CASE("rank, nullspace and solve") {
  Mat m = {from_ints({1, 2, 3}), from_ints({2, 4, 6}), from_ints({0, 1, 1})};
  CHECK(rank(m) == 2);
  Mat ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(mat_vec(m, ns[0])));

  auto u = solve({from_ints({1, 1}), from_ints({1, -1})}, from_ints({3, 1}), 2);
  CHECK(u.status == SolveStatus::Unique);
  CHECK(u.x == from_ints({2, 1}));

  auto inc = solve({from_ints({1, 1}), from_ints({2, 2})}, from_ints({1, 3}), 2);
  CHECK(inc.status == SolveStatus::Inconsistent);
  auto und = solve({from_ints({1, 1})}, from_ints({1}), 2);
  CHECK(und.status == SolveStatus::UnderDetermined);
  CHECK(dot(from_ints({1, 1}), und.x) == 1);
}

TEST_CASE("inverse") {
  auto inv = inverse({from_ints({2, 1}), from_ints({1, 1})});
  REQUIRE(inv);
  CHECK((*inv)[0] == from_ints({1, -1}));
  CHECK((*inv)[1] == from_ints({-1, 2}));
  CHECK_FALSE(inverse({from_ints({1, 2}), from_ints({2, 4})}));
}
