#include "doctest.h"

#include "sepsys/cubillage.hpp"
#include "sepsys/zonotope.hpp"

using namespace sepsys;

TEST_CASE("make_configuration picks symmetric odd t") {
  auto cfg = make_configuration(4, 2);
  CHECK(cfg->t(1) == -3);
  CHECK(cfg->t(2) == -1);
  CHECK(cfg->t(3) == 1);
  CHECK(cfg->t(4) == 3);
  CHECK(cfg->generator(2) == std::vector<Int>({1, -1}));

  auto cfg1 = make_configuration(2, 1);
  CHECK(cfg1->generator(1) == std::vector<Int>({1}));
  CHECK(cfg1->generator(2) == std::vector<Int>({1}));

  auto cfg3 = make_configuration(4, 3);
  CHECK(cfg3->generator(4) == std::vector<Int>({1, 3, 9}));
}

TEST_CASE("custom t must satisfy the symmetry and positivity guards") {
  CHECK_THROWS(make_configuration(4, 2, {-3, -1, 1, 2}));
  CHECK_THROWS(make_configuration(4, 2, {1, 2, 3, 4}));
  CHECK_NOTHROW(make_configuration(4, 2, {-7, -2, 2, 7}));
}

TEST_CASE("embed") {
  auto cfg = make_configuration(4, 2);
  CHECK(embed(ColorSet{}, *cfg).coords == std::vector<Int>({0, 0}));
  CHECK(embed(ColorSet({1, 4}), *cfg).coords == std::vector<Int>({2, 0}));
  CHECK(embed(ColorSet({1, 2, 3, 4}), *cfg).coords == std::vector<Int>({4, 0}));
}

TEST_CASE("front facets of a single-cube zonotope") {
  // n = d+1: the d+1 facets of the cube's front side.
  auto cfg = make_configuration(4, 4);
  auto fr = front_facets(*cfg);
  CHECK(fr.size() == 4);
  auto re = rear_facets(*cfg);
  CHECK(re.size() == 4);
  for (const auto& f : fr)
    CHECK(std::find(re.begin(), re.end(), f) == re.end());
}

TEST_CASE("front and rear facets are disjoint and cover each type once") {
  for (auto [n, d1] : {std::pair{4, 3}, {5, 3}, {6, 4}, {5, 2}}) {
    auto cfg = make_configuration(n, d1);
    auto fr = front_facets(*cfg);
    auto re = rear_facets(*cfg);
    std::set<Bits> ft, rt;
    for (const auto& f : fr) ft.insert(f.type.bits());
    for (const auto& f : re) rt.insert(f.type.bits());
    CHECK(ft.size() == fr.size());
    CHECK(rt.size() == re.size());
    CHECK(ft == rt);
    for (const auto& f : fr)
      CHECK(std::find(re.begin(), re.end(), f) == re.end());
  }
}

TEST_CASE("Lemma on front/rear star symmetry of boundary facets") {
  // d even: the front side is fixed setwise by *; d odd: star swaps sides.
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= std::min(n, 4); ++d) {
      auto cfg = make_configuration(n, d);
      GroundSet g(n);
      auto fr = front_facets(*cfg);
      auto re = rear_facets(*cfg);
      auto star_of = [&](const std::vector<Cube>& fs) {
        std::vector<Cube> out;
        for (const Cube& f : fs)
          out.push_back(Cube{star(f.bottom | f.type, g), mirror(f.type, g)});
        std::sort(out.begin(), out.end(), CubeLess{});
        return out;
      };
      if (d % 2 == 0) {
        CHECK(star_of(fr) == fr);
        CHECK(star_of(re) == re);
      } else {
        CHECK(star_of(fr) == re);
        CHECK(star_of(re) == fr);
      }
    }
  }
}

TEST_CASE("cube facet split agrees with boundary orientation at n=4,d=2") {
  auto cfg = make_configuration(4, 2);
  // The 12-rhombus at the origin: front edges go through the bottom.
  Cube c{ColorSet{}, ColorSet({1, 2})};
  FacetPair f1 = cube_facets(*cfg, c, 1);
  FacetPair f2 = cube_facets(*cfg, c, 2);
  // ξ_1 is left of ξ_2, so the 2-edge at the bottom faces front-left.
  CHECK(f2.front == Cube{ColorSet{}, ColorSet({1})});
  CHECK(f2.rear == Cube{ColorSet({2}), ColorSet({1})});
  CHECK(f1.front == Cube{ColorSet({1}), ColorSet({2})});
  CHECK(f1.rear == Cube{ColorSet{}, ColorSet({2})});
}
