#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "pgblock/plane.hpp"
#include "support/oracles.hpp"

using namespace pgblock;

TEST_CASE("normalization", "[plane]") {
  Field f(13);
  CHECK(normalize(f, 2, 6, 2) == Point{1, 3, 1});
  CHECK(normalize(f, 0, 5, 0) == Point{0, 1, 0});
  CHECK(normalize(f, 3, 9, 0) == Point{1, 3, 0});
  CHECK_THROWS_AS(normalize(f, 0, 0, 0), std::invalid_argument);

  SECTION("idempotent and constant on scalings") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 12);
    for (int it = 0; it < 200; ++it) {
      Fe x = Fe(pick(rng)), y = Fe(pick(rng)), z = Fe(pick(rng));
      if (x == 0 && y == 0 && z == 0) continue;
      Point p = normalize(f, x, y, z);
      CHECK(normalize(f, p.x, p.y, p.z) == p);
      for (int s = 1; s < 13; ++s)
        CHECK(normalize(f, f.mul(x, Fe(s)), f.mul(y, Fe(s)), f.mul(z, Fe(s))) == p);
    }
  }
}

TEST_CASE("line through two points", "[plane]") {
  Field f(13);
  CHECK(line_through(f, Point{0, 0, 1}, Point{1, 1, 0}) == normalize_line(f, 1, f.neg(1), 0));
  CHECK(line_through(f, Point{1, 0, 1}, Point{0, 1, 1}) == normalize_line(f, 1, 1, f.neg(1)));
  CHECK_THROWS_AS(line_through(f, Point{1, 2, 1}, Point{1, 2, 1}), std::invalid_argument);

  SECTION("matches the incidence scan") {
    PlaneIndex plane(f);
    CHECK(line_through(f, Point{1, 0, 0}, Point{0, 1, 1}) ==
          oracle::line_through_by_scan(plane, Point{1, 0, 0}, Point{0, 1, 1}));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, plane.size() - 1);
    for (int it = 0; it < 100; ++it) {
      Point p = plane.point_at(pick(rng)), r = plane.point_at(pick(rng));
      if (p == r) continue;
      CHECK(line_through(f, p, r) == oracle::line_through_by_scan(plane, p, r));
    }
  }
}

TEST_CASE("meet of two lines", "[plane]") {
  Field f(13);
  CHECK(meet(f, Line{0, 1, 0}, Line{1, 0, 0}) == Point{0, 0, 1});
  CHECK(meet(f, Line{0, 0, 1}, Line{1, 0, 0}) == Point{0, 1, 0});
  // [1:1:-1] ∩ [1:-1:0] = (1:1:2) ~ (7:7:1)
  CHECK(meet(f, normalize_line(f, 1, 1, 12), normalize_line(f, 1, 12, 0)) == Point{7, 7, 1});
  CHECK_THROWS_AS(meet(f, Line{0, 1, 0}, Line{0, 1, 0}), std::invalid_argument);
}

TEST_CASE("incidence", "[plane]") {
  Field f(13);
  CHECK(incident(f, Point{1, 3, 0}, Line{0, 0, 1}));
  CHECK_FALSE(incident(f, Point{1, 1, 1}, normalize_line(f, 1, 1, 12)));
  CHECK(incident(f, Point{5, 9, 1}, normalize_line(f, 1, 1, 12)));  // 5 + 9 - 1 = 13
}

TEST_CASE("dense index structure", "[plane]") {
  for (int q : {4, 9, 13}) {
    Field f(q);
    PlaneIndex plane(f);
    INFO("q = " << q);
    REQUIRE(plane.size() == q * q + q + 1);

    SECTION("index round trip at q=" + std::to_string(q)) {
      for (int i = 0; i < plane.size(); ++i) {
        CHECK(plane.index_of(plane.point_at(i)) == i);
        CHECK(plane.index_of(plane.line_at(i)) == i);
      }
    }
    SECTION("incidence lists at q=" + std::to_string(q)) {
      for (int li = 0; li < plane.size(); ++li) {
        auto pts = plane.points_on(li);
        REQUIRE(pts.size() == std::size_t(q + 1));
        std::set<int> distinct(pts.begin(), pts.end());
        CHECK(distinct.size() == std::size_t(q + 1));
        for (int pi : pts) CHECK(incident(f, plane.point_at(pi), plane.line_at(li)));
      }
      for (int pi = 0; pi < plane.size(); ++pi)
        CHECK(plane.lines_through(pi).size() == std::size_t(q + 1));
    }
  }
}

TEST_CASE("plane axioms", "[plane]") {
  Field f(9);
  PlaneIndex plane(f);
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> pick(0, plane.size() - 1);
  for (int it = 0; it < 300; ++it) {
    Point p = plane.point_at(pick(rng)), r = plane.point_at(pick(rng));
    if (p == r) continue;
    Line l = line_through(f, p, r);
    CHECK(incident(f, p, l));
    CHECK(incident(f, r, l));
    Line l2 = plane.line_at(pick(rng)), l3 = plane.line_at(pick(rng));
    if (l2 == l3) continue;
    Point m = meet(f, l2, l3);
    CHECK(incident(f, m, l2));
    CHECK(incident(f, m, l3));
  }
}
