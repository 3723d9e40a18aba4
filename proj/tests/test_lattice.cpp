#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tubular/vec2.hpp"

using namespace tubular;

TEST_CASE("det on fixed pairs") {
  CHECK(det({1, 0}, {0, 1}) == 1);
  CHECK(det({1, 0}, {1, 0}) == 0);
  CHECK(det({1, 2}, {2, 1}) == -3);
}

TEST_CASE("intersection numbers") {
  CHECK(intersection_number({1, 0}, {1, 1}) == 1);
  CHECK(intersection_number({1, 0}, {2, 2}) == 2);
  CHECK(intersection_number({1, 2}, {2, 1}) == 3);
}

TEST_CASE("intersection number against a set") {
  std::vector<IntVec2> set1 = {{1, 1}, {1, -1}};
  CHECK(intersection_number_set({1, 0}, set1) == 2);
  std::vector<IntVec2> empty;
  CHECK(intersection_number_set({1, 0}, empty) == 0);
  std::vector<IntVec2> set2 = {{1, 2}, {2, 1}};
  CHECK(intersection_number_set({1, 0}, set2) == 3);  // 2 + 1 by direct determinants
}

TEST_CASE("primitive decomposition") {
  auto [n1, p1] = primitive_decomposition({2, 2});
  CHECK(n1 == 2);
  CHECK(p1 == IntVec2{1, 1});
  auto [n2, p2] = primitive_decomposition({1, -1});
  CHECK(n2 == 1);
  CHECK(p2 == IntVec2{1, -1});
  auto [n3, p3] = primitive_decomposition({-4, 6});
  CHECK(n3 == 2);
  CHECK(p3 == IntVec2{-2, 3});
  CHECK_THROWS_AS(primitive_decomposition({0, 0}), Error);
}

TEST_CASE("lattice properties over random vectors") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> coord(-40, 40);
  auto rand_vec = [&]() -> IntVec2 { return {coord(rng), coord(rng)}; };

  for (int trial = 0; trial < 2000; ++trial) {
    IntVec2 a = rand_vec(), b = rand_vec();
    // symmetry
    CHECK(intersection_number(a, b) == intersection_number(b, a));
    // scaling identity
    Int n = 1 + std::abs(coord(rng)) % 5;
    CHECK(intersection_number(a * n, b) == n * intersection_number(a, b));
    // zero iff linearly dependent
    bool dependent = a.x * b.y == a.y * b.x;
    CHECK((intersection_number(a, b) == 0) == dependent);
    // idempotence of primitive decomposition
    if (!a.is_zero()) {
      auto [n1, p1] = primitive_decomposition(a);
      auto [n2, p2] = primitive_decomposition(p1);
      CHECK(n2 == 1);
      CHECK(p2 == p1);
      CHECK(p1 * n1 == a);
    }
  }
}

TEST_CASE("unit complement inverts levels") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-25, 25);
  for (int trial = 0; trial < 500; ++trial) {
    IntVec2 v{coord(rng), coord(rng)};
    if (v.is_zero()) continue;
    IntVec2 d = normalize_direction(v);
    IntVec2 w = unit_complement(d);
    CHECK(det(d, w) == 1);
  }
}

TEST_CASE("rational line normalization") {
  auto l1 = RationalLine::make({2, 2}, Rat(1));
  CHECK(l1.direction == IntVec2{1, 1});
  CHECK(l1.level == Rat(1, 2));
  auto l2 = RationalLine::make({-1, -1}, Rat(-1, 2));
  CHECK(l2.direction == IntVec2{1, 1});
  CHECK(l2.level == Rat(1, 2));
  CHECK(l1 == l2);
  auto l3 = RationalLine::make({0, -3}, Rat(3));
  CHECK(l3.direction == IntVec2{0, 1});
  CHECK(l3.level == Rat(-1));
}

TEST_CASE("rational parse and format round trip") {
  CHECK(rat_parse("1/3").value() == Rat(1, 3));
  CHECK(rat_parse("-2/5").value() == Rat(-2, 5));
  CHECK(!rat_parse("2/4"));   // not reduced
  CHECK(!rat_parse("1/-3"));  // negative denominator
  CHECK(!rat_parse("3"));     // missing slash
  CHECK(!rat_parse("01/3"));  // leading zero
  CHECK(rat_str(Rat(-7, 3)) == "-7/3");
  CHECK(rat_str(Rat(4)) == "4/1");
  CHECK(rat_parse(rat_str(Rat(22, 7))).value() == Rat(22, 7));
}

TEST_CASE("floor and mod1 helpers") {
  CHECK(rat_floor(Rat(-1, 2)) == -1);
  CHECK(rat_floor(Rat(1, 2)) == 0);
  CHECK(rat_floor(Rat(-2)) == -2);
  CHECK(rat_mod1(Rat(-1, 2)) == Rat(1, 2));
  CHECK(rat_mod1(Rat(7, 3)) == Rat(1, 3));
}
