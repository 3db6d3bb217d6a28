#include "doctest.h"

#include <set>

#include "sepsys/cubillage.hpp"

using namespace sepsys;

namespace {

Collection all_subsets(int n) {
  GroundSet g(n);
  std::vector<ColorSet> sets;
  for (Bits b = 0;; ++b) {
    sets.emplace_back(b);
    if (b == g.mask()) break;
  }
  return Collection(g, std::move(sets));
}

Collection intervals_and_empty(int n) {
  GroundSet g(n);
  std::vector<ColorSet> sets{ColorSet{}};
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) sets.push_back(ColorSet::interval(a, b));
  return Collection(g, std::move(sets));
}

}  // namespace

TEST_CASE("reconstruct the full cube (d = n)") {
  Cubillage Q = reconstruct(all_subsets(4), 4);
  REQUIRE(Q.cubes.size() == 1);
  CHECK(Q.cubes[0] == Cube{ColorSet{}, ColorSet({1, 2, 3, 4})});
}

TEST_CASE("standard tiling of Z(4,2) from intervals") {
  Cubillage Q = reconstruct(intervals_and_empty(4), 2);
  CHECK(Q.cubes.size() == 6);
  CHECK(Q == standard(4, 2));
  CHECK(validate(Q).ok());
}

TEST_CASE("standard cubillage of Z(4,3): Appendix example") {
  Cubillage Q = standard(4, 3);
  REQUIRE(validate(Q).ok());
  std::set<Bits> types;
  for (const Cube& c : Q.cubes) types.insert(c.type.bits());
  CHECK(types == std::set<Bits>{ColorSet({1, 2, 3}).bits(), ColorSet({1, 2, 4}).bits(),
                                ColorSet({1, 3, 4}).bits(), ColorSet({2, 3, 4}).bits()});
  Collection V = Q.vertex_set();
  CHECK(V.size() == 15);
  CHECK_FALSE(V.contains(ColorSet({2, 4})));
  Collection full = all_subsets(4);
  for (ColorSet x : full.sets)
    if (!(x == ColorSet({2, 4}))) CHECK(V.contains(x));
  // Vertex set reconstructs the same cubillage (the GP bijection, vertex side).
  CHECK(reconstruct(V, 3) == Q);

  // Natural order chain F_4 < G_3 < F_2 < G_1.
  Cube F4{ColorSet{}, ColorSet({1, 2, 3})};
  Cube G3{ColorSet({3}), ColorSet({1, 2, 4})};
  Cube F2{ColorSet{}, ColorSet({1, 3, 4})};
  Cube G1{ColorSet({1}), ColorSet({2, 3, 4})};
  for (const Cube& c : {F4, G3, F2, G1}) CHECK(Q.has_cube(c));
  CubeOrder ord = natural_order(Q);
  auto succ_has = [&](const Cube& a, const Cube& b) {
    int ia = Q.index_of(a), ib = Q.index_of(b);
    return std::find(ord.succ[ia].begin(), ord.succ[ia].end(), ib) != ord.succ[ia].end();
  };
  CHECK(succ_has(F4, G3));
  CHECK(succ_has(G3, F2));
  CHECK(succ_has(F2, G1));
}

TEST_CASE("anti-standard Z(4,3) misses {1,3} instead") {
  Cubillage Q = antistandard(4, 3);
  REQUIRE(validate(Q).ok());
  Collection V = Q.vertex_set();
  CHECK(V.size() == 15);
  CHECK_FALSE(V.contains(ColorSet({1, 3})));
}

TEST_CASE("validate flags broken cubillages") {
  Cubillage Q = standard(5, 2);
  REQUIRE(validate(Q).ok());
  CHECK(Q.cubes.size() == 10);
  CHECK(Q.vertex_set().size() == 16);

  Cubillage missing = Q;
  missing.cubes.pop_back();
  CHECK_FALSE(validate(missing).ok());

  Cubillage dup = Q;
  dup.cubes[0] = dup.cubes[1];  // duplicate a cube, type multiplicity breaks
  CHECK_FALSE(validate(Cubillage(dup.cfg, dup.cubes)).ok());
}

TEST_CASE("standard cubillages validate across desk sizes") {
  for (auto [n, d] : {std::pair{3, 2}, {4, 2}, {5, 2}, {6, 2}, {4, 3}, {5, 3}, {6, 3}, {6, 4}, {5, 4}}) {
    CHECK(validate(standard(n, d)).ok());
    CHECK(validate(antistandard(n, d)).ok());
  }
}

TEST_CASE("capsid detection and interior vertices in standard(4,3)") {
  Cubillage Q = standard(4, 3);
  auto caps = find_capsids(Q);
  REQUIRE(caps.size() == 1);
  CHECK(caps[0].bottom == ColorSet{});
  CHECK(caps[0].type == ColorSet({1, 2, 3, 4}));
  CHECK(caps[0].standard_filling);
  CHECK(caps[0].interior_vertex(true) == ColorSet({1, 3}));
  CHECK(caps[0].interior_vertex(false) == ColorSet({2, 4}));

  auto filling = caps[0].filling(true);
  std::vector<Cube> expect{Cube{ColorSet{}, ColorSet({1, 2, 3})},
                           Cube{ColorSet{}, ColorSet({1, 3, 4})},
                           Cube{ColorSet({3}), ColorSet({1, 2, 4})},
                           Cube{ColorSet({1}), ColorSet({2, 3, 4})}};
  std::sort(expect.begin(), expect.end(), CubeLess{});
  CHECK(filling == expect);
}

TEST_CASE("hexagon capsid at d=2 matches the three-rhombus fillings") {
  // H(X|ijk): standard = {(X|ij),(X|jk),(Xj|ik)} with interior Xj.
  Capsid c{ColorSet{}, ColorSet({1, 2, 3}), true};
  std::vector<Cube> expect{Cube{ColorSet{}, ColorSet({1, 2})}, Cube{ColorSet{}, ColorSet({2, 3})},
                           Cube{ColorSet({2}), ColorSet({1, 3})}};
  std::sort(expect.begin(), expect.end(), CubeLess{});
  CHECK(c.filling(true) == expect);
  CHECK(c.interior_vertex(true) == ColorSet({2}));
  std::vector<Cube> expect_ant{Cube{ColorSet{}, ColorSet({1, 3})}, Cube{ColorSet({1}), ColorSet({2, 3})},
                               Cube{ColorSet({3}), ColorSet({1, 2})}};
  std::sort(expect_ant.begin(), expect_ant.end(), CubeLess{});
  CHECK(c.filling(false) == expect_ant);
  CHECK(c.interior_vertex(false) == ColorSet({1, 3}));
}

TEST_CASE("capsid flip: standard(4,3) raising gives antistandard(4,3)") {
  Cubillage Q = standard(4, 3);
  auto caps = find_capsids(Q);
  REQUIRE(caps.size() == 1);
  Cubillage Q2 = capsid_flip(Q, caps[0], Direction::raising);
  CHECK(Q2 == antistandard(4, 3));
  CHECK(validate(Q2).ok());
  auto caps2 = find_capsids(Q2);
  REQUIRE(caps2.size() == 1);
  Cubillage Q3 = capsid_flip(Q2, caps2[0], Direction::lowering);
  CHECK(Q3 == Q);
  CHECK_THROWS(capsid_flip(Q, caps[0], Direction::lowering));
}

TEST_CASE("natural order within capsids follows the alternating chain") {
  // Raising flips from standard(5,2) must terminate at antistandard(5,2).
  Cubillage Q = standard(5, 2);
  int guard = 200;
  while (true) {
    auto caps = find_capsids(Q);
    const Capsid* site = nullptr;
    for (const auto& c : caps)
      if (c.standard_filling) {
        site = &c;
        break;
      }
    if (!site) break;
    Q = capsid_flip(Q, *site, Direction::raising);
    REQUIRE(--guard > 0);
  }
  CHECK(Q == antistandard(5, 2));
}

TEST_CASE("single-cube cubillage has an empty natural order") {
  Cubillage Q = standard(4, 4);
  CubeOrder ord = natural_order(Q);
  CHECK(ord.succ[0].empty());
}

TEST_CASE("barrels") {
  // n = d+2: the whole cubillage is one barrel.
  Cubillage Q = standard(4, 2);
  auto barrels = find_barrels(Q);
  REQUIRE(barrels.size() == 1);
  CHECK(barrels[0].bottom == ColorSet{});
  CHECK(barrels[0].type == ColorSet({1, 2, 3, 4}));
  CHECK(barrels[0].cube_indices.size() == 6);

  // One cube per 2-subset of the barrel type.
  std::set<Bits> types;
  for (int ci : barrels[0].cube_indices) types.insert(Q.cubes[ci].type.bits());
  CHECK(types.size() == 6);
}
