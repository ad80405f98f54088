#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "pgblock/catalog.hpp"
#include "pgblock/pointset.hpp"
#include "support/oracles.hpp"

using namespace pgblock;

namespace {

// union of three non-concurrent lines
PointSet triangle(const PlaneIndex& plane) {
  PointSet s(plane.size());
  for (Line l : {Line{0, 0, 1}, Line{1, 0, 0}, Line{0, 1, 0}})
    for (int pi : plane.points_on(plane.index_of(l))) s.insert(pi);
  return s;
}

PointSet random_subset(const PlaneIndex& plane, int size, std::mt19937& rng) {
  PointSet s(plane.size());
  std::uniform_int_distribution<int> pick(0, plane.size() - 1);
  while (s.size() < size) s.insert(pick(rng));
  return s;
}

}  // namespace

TEST_CASE("secant distribution", "[pointset]") {
  SECTION("catalog q=13 set") {
    Field f = catalog_field(13);
    PlaneIndex plane(f);
    PointSet s = builtin(plane, 13, 1);
    SecantDistribution dist = secant_distribution(plane, s);
    std::map<int, std::int64_t> expect{{12, 2}, {8, 1}, {7, 1}, {6, 4},
                                       {5, 10}, {4, 19}, {3, 51}};
    CHECK(dist.tail(3) == expect);
    CHECK(dist.at(2) == 95);  // forced by the two counting identities
    CHECK(dist.at(1) == 0);
    CHECK(dist.at(0) == 0);
    CHECK(dist.identities_hold(13, s.size()));
  }
  SECTION("triangle census") {
    for (int q : {4, 13}) {
      Field f(q);
      PlaneIndex plane(f);
      SecantDistribution dist = secant_distribution(plane, triangle(plane));
      CHECK(dist.at(q + 1) == 3);
      CHECK(dist.at(3) == std::int64_t(q - 1) * (q - 1));
      CHECK(dist.at(2) == 3 * std::int64_t(q - 1));
      CHECK(dist.identities_hold(q, 3 * q));
    }
  }
  SECTION("empty set") {
    Field f(5);
    PlaneIndex plane(f);
    SecantDistribution dist = secant_distribution(plane, PointSet(plane.size()));
    CHECK(dist.at(0) == plane.size());
  }
  SECTION("identities hold for random sets") {
    Field f(9);
    PlaneIndex plane(f);
    std::mt19937 rng(41);
    for (int it = 0; it < 30; ++it) {
      PointSet s = random_subset(plane, 1 + it * 2, rng);
      CHECK(secant_distribution(plane, s).identities_hold(9, s.size()));
    }
  }
}

TEST_CASE("t-fold blocking", "[pointset]") {
  Field f = catalog_field(13);
  PlaneIndex plane(f);
  SECTION("catalog set is a double blocking set") {
    CHECK(is_t_fold_blocking(plane, builtin(plane, 13, 1), 2));
  }
  SECTION("full plane blocks at q+1") {
    PointSet all(plane.size());
    for (int i = 0; i < plane.size(); ++i) all.insert(i);
    CHECK(is_t_fold_blocking(plane, all, 14));
  }
  SECTION("triangle minus a vertex is not double blocking") {
    PointSet s = triangle(plane);
    s.erase(plane.index_of(Point{0, 0, 1}));
    CHECK(is_t_fold_blocking(plane, triangle(plane), 2));
    CHECK_FALSE(is_t_fold_blocking(plane, s, 2));
  }
  SECTION("equivalent to a zero lower census") {
    Field f9(9);
    PlaneIndex plane9(f9);
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
      PointSet s = random_subset(plane9, 20 + it * 3, rng);
      SecantDistribution dist = secant_distribution(plane9, s);
      for (int t = 0; t <= 3; ++t) {
        bool by_census = true;
        for (int j = 0; j < t; ++j)
          if (dist.at(j)) by_census = false;
        CHECK(is_t_fold_blocking(plane9, s, t) == by_census);
      }
    }
  }
}

TEST_CASE("minimality", "[pointset]") {
  Field f = catalog_field(13);
  PlaneIndex plane(f);
  SECTION("catalog set is minimal") {
    CHECK(is_minimal(plane, builtin(plane, 13, 1), 2));
  }
  SECTION("agrees with the deletion oracle") {
    PointSet tri = triangle(plane);
    CHECK(is_minimal(plane, tri, 2) == oracle::minimal_by_deletion(plane, tri, 2));
    PointSet cat = builtin(plane, 13, 1);
    CHECK(is_minimal(plane, cat, 2) == oracle::minimal_by_deletion(plane, cat, 2));
    PointSet all(plane.size());
    for (int i = 0; i < plane.size(); ++i) all.insert(i);
    CHECK(is_minimal(plane, all, 1) == oracle::minimal_by_deletion(plane, all, 1));
    CHECK_FALSE(is_minimal(plane, all, 1));
  }
  SECTION("precondition enforced") {
    CHECK_THROWS_AS(is_minimal(plane, PointSet(plane.size()), 2), std::invalid_argument);
  }
}

TEST_CASE("membership bounds", "[pointset]") {
  PointSet s(10);
  CHECK_THROWS_AS(s.insert(10), std::out_of_range);
  CHECK_THROWS_AS(s.insert(-1), std::out_of_range);
  CHECK_THROWS_AS(s.erase(10), std::out_of_range);
  s.insert(3);
  s.insert(3);  // idempotent
  CHECK(s.size() == 1);
  s.erase(3);
  CHECK(s.size() == 0);
}

TEST_CASE("long secants", "[pointset]") {
  Field f = catalog_field(13);
  PlaneIndex plane(f);
  PointSet s = builtin(plane, 13, 1);
  SECTION("the two 12-secants are the axes, in index order") {
    auto longs = long_secants(plane, s, 12);
    REQUIRE(longs.size() == 2);
    CHECK(longs[0] == Line{1, 0, 0});
    CHECK(longs[1] == Line{0, 1, 0});
  }
  SECTION("no q-secant") { CHECK(long_secants(plane, s, 13).empty()); }
  SECTION("k beyond q+1 is empty") { CHECK(long_secants(plane, s, 15).empty()); }
}
