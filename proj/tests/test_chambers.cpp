#include <set>

#include "doctest.h"
#include "dhur/chambers.hpp"
#include "dhur/error.hpp"

using namespace dhur;

namespace {

const Point kP{7, 1, -2, -3, -3};
const Point kQ{9, 4, -5, -5, -3};

// Brute-force sign vector straight from the definition: every nonempty subset of
// {2..n}, ordered by bitmask.
std::vector<bool> direct_signs(const Point& x) {
  const int n = static_cast<int>(x.size());
  std::vector<bool> out;
  for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
    std::int64_t s = 0;
    for (int i = 0; i < n - 1; ++i)
      if (mask >> i & 1U) s += x[static_cast<std::size_t>(i + 1)];
    out.push_back(s > 0);
  }
  return out;
}

}  // namespace

TEST_SUITE("chambers") {

TEST_CASE("signature matches the definition") {
  for (const auto& p : enumerate_profiles(6, 5)) {
    if (first_vanishing_wall(p.x())) continue;
    CHECK(signature(p).positive() == direct_signs(p.x()));
  }
}

TEST_CASE("walls") {
  CHECK(walls(2).size() == 1);
  CHECK(walls(2).front().indices() == std::vector<int>{2});
  const auto w3 = walls(3);
  REQUIRE(w3.size() == 3);
  CHECK(w3[0].to_string() == "[2]");
  CHECK(w3[1].to_string() == "[3]");
  CHECK(w3[2].to_string() == "[2,3]");
  for (int n = 2; n <= 7; ++n) {
    const auto ws = walls(n);
    CHECK(ws.size() == (std::size_t{1} << (n - 1)) - 1);
    std::set<std::uint32_t> masks;
    for (const auto& w : ws) masks.insert(w.mask());
    CHECK(masks.size() == ws.size());
  }
}

TEST_CASE("wall normalization") {
  const Wall w(5, {1, 3, 4});
  CHECK(w.complemented());
  CHECK(w == Wall(5, {2, 5}));
  CHECK_FALSE(Wall(5, {5, 2}).complemented());
  CHECK(w.evaluate(kQ) == 1);
  CHECK(Wall(5, {2, 5}).form() == MultiPoly::variable(5, 2) + MultiPoly::variable(5, 5));
}

TEST_CASE("signature examples") {
  CHECK(signature(RamificationProfile(Point{2, 1, -3})).to_string() == "+--");
  CHECK(signature(RamificationProfile(Point{1, 1, -2})).to_string() == "+--");
  try {
    signature(RamificationProfile(Point{4, 1, -1, -1, -3}));
    FAIL("expected ON_WALL");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnWall);
    CHECK(e.indices() == std::vector<int>{2, 3});
  }
}

TEST_CASE("signature is scaling invariant") {
  for (const auto& p : enumerate_profiles(5, 5)) {
    if (first_vanishing_wall(p.x())) continue;
    for (std::int64_t k : {2, 3, 11}) {
      Point y = p.x();
      for (auto& v : y) v *= k;
      CHECK(signature(y) == signature(p));
    }
  }
}

TEST_CASE("the example pair differs only at [2,5]") {
  const auto diff = signature(RamificationProfile(kP)).differing_walls(signature(RamificationProfile(kQ)));
  REQUIRE(diff.size() == 1);
  CHECK(diff.front() == Wall(5, {2, 5}));
}

TEST_CASE("sample_chamber") {
  SUBCASE("scalings of (1,-1)") {
    const auto pts = sample_chamber(ChamberWitness(RamificationProfile(Point{1, -1})), 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].x() == Point{1, -1});
    CHECK(pts[1].x() == Point{2, -2});
    CHECK(pts[2].x() == Point{3, -3});
  }
  SUBCASE("twenty points in the chamber of P") {
    const ChamberWitness w(RamificationProfile{kP});
    const auto pts = sample_chamber(w, 20);
    CHECK(pts.size() == 20);
    std::set<Point> distinct;
    for (const auto& p : pts) {
      CHECK(signature(p) == w.signature());
      distinct.insert(p.x());
    }
    CHECK(distinct.size() == 20);
  }
  SUBCASE("prefix stable") {
    const ChamberWitness w(RamificationProfile{kQ});
    const auto a = sample_chamber(w, 8);
    const auto b = sample_chamber(w, 15);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
  SUBCASE("budget") {
    try {
      sample_chamber(ChamberWitness(RamificationProfile{kP}), 50, 10);
      FAIL("expected SAMPLING_BUDGET_EXCEEDED");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SamplingBudgetExceeded);
    }
  }
  SUBCASE("witness on a wall is rejected") {
    CHECK_THROWS_AS(ChamberWitness(RamificationProfile(Point{4, 1, -1, -1, -3})), Error);
  }
}

TEST_CASE("adjacent_chamber") {
  const ChamberWitness p(RamificationProfile{kP});
  const Wall wall(5, {2, 5});
  const auto q = adjacent_chamber(p, wall);
  const auto diff = p.signature().differing_walls(q.signature());
  REQUIRE(diff.size() == 1);
  CHECK(diff.front() == wall);
  CHECK(q.signature() == p.signature().flipped(wall));

  // Every wall of a few n = 4 witnesses: whenever a neighbour is found it differs in
  // exactly the requested coordinate.
  for (const Point& x : {Point{3, 1, -2, -2}, Point{5, -1, -1, -3}}) {
    const ChamberWitness w(RamificationProfile{x});
    for (const auto& wl : walls(4)) {
      try {
        const auto other = adjacent_chamber(w, wl);
        CHECK(w.signature().differing_walls(other.signature()) == std::vector<Wall>{wl});
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AdjacencyNotFound);
      }
    }
  }
}

TEST_CASE("adjacent_chamber for n = 2 flips the only wall") {
  const ChamberWitness w(RamificationProfile(Point{1, -1}));
  const auto other = adjacent_chamber(w, Wall(2, {2}));
  CHECK(other.point().x()[0] < 0);
  CHECK(other.signature() == w.signature().flipped(Wall(2, {2})));
}

TEST_CASE("infeasible flip reports ADJACENCY_NOT_FOUND") {
  // x_2 > 0 and x_3 < 0 are forced for (2,1,-3) once [2,3] stays negative; flipping [3]
  // alone would need x_3 > 0 with x_2 + x_3 < 0 and x_2 > 0.
  const ChamberWitness w(RamificationProfile(Point{2, 1, -3}));
  try {
    adjacent_chamber(w, Wall(3, {3}));
    FAIL("expected ADJACENCY_NOT_FOUND");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AdjacencyNotFound);
  }
}

}
