#include "doctest.h"

#include <set>

#include "sepsys/cubillage.hpp"

using namespace sepsys;

TEST_CASE("membranes of standard(4,3): the five ideals of a 4-chain") {
  Cubillage Q = standard(4, 3);
  auto ms = membranes(Q);
  REQUIRE(ms.size() == 5);

  std::vector<std::vector<ColorSet>> expected_inv = {
      {},
      {ColorSet({1, 2, 3})},
      {ColorSet({1, 2, 3}), ColorSet({1, 2, 4})},
      {ColorSet({1, 2, 3}), ColorSet({1, 2, 4}), ColorSet({1, 3, 4})},
      {ColorSet({1, 2, 3}), ColorSet({1, 2, 4}), ColorSet({1, 3, 4}), ColorSet({2, 3, 4})}};
  for (size_t i = 0; i < ms.size(); ++i) {
    CHECK(ms[i].inversions() == expected_inv[i]);
    CHECK(ms[i].inversions().size() == ms[i].ideal.size());
    Cubillage proj = ms[i].project();
    CHECK(validate(proj).ok());
  }

  // Extremes project to the standard/anti-standard tilings.
  CHECK(ms.front().project() == standard(4, 2));
  CHECK(ms.back().project() == antistandard(4, 2));

  // The symmetric membrane (ideal of size 2) has section types 23,14,13,24
  // plus boundary 12,34.
  std::set<Bits> types;
  for (const Cube& f : ms[2].facets()) types.insert(f.type.bits());
  CHECK(types == std::set<Bits>{ColorSet({2, 3}).bits(), ColorSet({1, 4}).bits(),
                                ColorSet({1, 3}).bits(), ColorSet({2, 4}).bits(),
                                ColorSet({1, 2}).bits(), ColorSet({3, 4}).bits()});
}

TEST_CASE("membrane lattice: meet and join act on ideals") {
  Cubillage Q = standard(5, 3);
  auto ms = membranes(Q);
  for (size_t i = 0; i < ms.size(); i += 7)
    for (size_t j = 0; j < ms.size(); j += 5) {
      Membrane mt = membrane_meet(ms[i], ms[j]);
      Membrane jn = membrane_join(ms[i], ms[j]);
      std::set<int> a(ms[i].ideal.begin(), ms[i].ideal.end());
      std::set<int> b(ms[j].ideal.begin(), ms[j].ideal.end());
      for (int c : mt.ideal) CHECK((a.count(c) && b.count(c)));
      CHECK(mt.ideal.size() + jn.ideal.size() == ms[i].ideal.size() + ms[j].ideal.size());
      CHECK(validate(mt.project()).ok());
      CHECK(validate(jn.project()).ok());
    }
}

TEST_CASE("non-ideal input is rejected") {
  Cubillage Q = standard(4, 3);
  // The last cube in the chain alone is not downward closed.
  CubeOrder ord = natural_order(Q);
  int sink = ord.topo.back();
  CHECK_THROWS(membrane_from_ideal(Q, {sink}));
}

TEST_CASE("extend_to_cubillage hosts the lift of a tiling") {
  for (auto make : {standard, antistandard}) {
    Cubillage Q = make(4, 2);
    HostedMembrane hm = extend_to_cubillage(Q);
    CHECK(validate(hm.host).ok());
    CHECK(hm.host.d() == 3);
    Membrane m = hm.membrane();
    CHECK(m.facets() == lift_facets(Q));
    CHECK(m.project() == Q);
  }
}

TEST_CASE("inversions are host-independent (standard(4,3) membranes re-hosted)") {
  Cubillage Q = standard(4, 3);
  for (const Membrane& m : membranes(Q)) {
    Cubillage tiling = m.project();
    HostedMembrane hm = extend_to_cubillage(tiling);
    Membrane m2 = hm.membrane();
    CHECK(m2.inversions() == m.inversions());
  }
}

TEST_CASE("zero contraction of the Z(3,2) standard tiling") {
  Cubillage Q = standard(3, 2);
  REQUIRE(Q.cubes.size() == 3);
  ZeroContraction zc = zero_contract(Q);
  CHECK(zc.contracted.n() == 2);
  CHECK(zc.contracted.cubes.size() == 1);  // single rhombus on 2 colors
  CHECK(zc.membrane.facets.size() == 2);   // two-edge 0-membrane
  // |Π_0| = C(n-1, d-1)
  int pie = 0;
  for (const Cube& c : Q.cubes)
    if (c.type.contains(2)) ++pie;
  CHECK(pie == 2);

  Cubillage back = zero_expand(zc.contracted, zc.membrane);
  CHECK(back == Q);
}

TEST_CASE("zero expand/contract roundtrip on extreme membranes") {
  Cubillage Qp = standard(4, 2);
  CubeOrder zo = zero_order(Qp);
  // Below-set empty: the 0-membrane is the lower boundary.
  ZeroMembrane low = zero_membrane_from_below(Qp, {});
  Cubillage q1 = zero_expand(Qp, low);
  CHECK(validate(q1).ok());
  ZeroContraction rc1 = zero_contract(q1);
  CHECK(rc1.contracted == Qp);
  CHECK(rc1.membrane.below == low.below);

  std::vector<int> all(Qp.cubes.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  ZeroMembrane up = zero_membrane_from_below(Qp, all);
  Cubillage q2 = zero_expand(Qp, up);
  CHECK(validate(q2).ok());
  ZeroContraction rc2 = zero_contract(q2);
  CHECK(rc2.contracted == Qp);
  CHECK(rc2.membrane.below == up.below);
  CHECK(zo.acyclic);
}

TEST_CASE("zero expand rejects a non-membrane below-set") {
  Cubillage Qp = standard(4, 2);
  CubeOrder zo = zero_order(Qp);
  // Find a cube with a 0-predecessor and take it alone: not a 0-ideal.
  for (int v = 0; v < static_cast<int>(Qp.cubes.size()); ++v)
    if (!zo.pred[v].empty()) {
      CHECK_THROWS(zero_membrane_from_below(Qp, {v}));
      return;
    }
  FAIL("no cube with a 0-predecessor");
}
