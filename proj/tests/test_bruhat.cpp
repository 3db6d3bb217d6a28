#include "doctest.h"

#include <set>

#include "sepsys/bruhat.hpp"

using namespace sepsys;

namespace {

std::set<std::vector<Bits>> invsets_as_keys(const PacketSystem& ps,
                                            const std::vector<AdmissibleOrder>& orders) {
  std::set<std::vector<Bits>> keys;
  for (const auto& rho : orders) {
    std::vector<Bits> k;
    for (ColorSet t : inversions_of(ps, rho)) k.push_back(t.bits());
    std::sort(k.begin(), k.end());
    keys.insert(k);
  }
  return keys;
}

std::set<std::vector<Bits>> invsets_as_keys(const std::vector<InvSet>& sets) {
  std::set<std::vector<Bits>> keys;
  for (const auto& u : sets) keys.insert(std::vector<Bits>(u.begin(), u.end()));
  return keys;
}

}  // namespace

TEST_CASE("packet families follow the prescribed order") {
  PacketSystem ps = make_packets(4, 2);
  int p123 = ps.packet_index.at(ColorSet({1, 2, 3}).bits());
  // F({1,2,3}) = ({1,2}, {1,3}, {2,3})
  CHECK(ps.subsets[ps.family[p123][0]] == ColorSet({1, 2}));
  CHECK(ps.subsets[ps.family[p123][1]] == ColorSet({1, 3}));
  CHECK(ps.subsets[ps.family[p123][2]] == ColorSet({2, 3}));
}

TEST_CASE("A(3,1) is all 6 orders and B(3,1) is the weak order on S_3") {
  PacketSystem ps = make_packets(3, 1);
  auto orders = enumerate_A(ps);
  CHECK(orders.size() == 6);
  auto classes = quotient_classes(ps, orders, false);
  CHECK(classes.size() == 6);  // singletons: every pair shares a packet
  // Inversion sets: sizes 0,1,1,2,2,3 with unique min and max.
  std::multiset<size_t> sizes;
  for (const auto& rho : classes) sizes.insert(inversions_of(ps, rho).size());
  CHECK(sizes == std::multiset<size_t>{0, 1, 1, 2, 2, 3});
  // Same via the inversion-set route.
  auto inv = enumerate_B_invsets(ps);
  CHECK(inv.size() == 6);
}

TEST_CASE("B(4,3) has two classes: single packet, lex or anti-lex") {
  PacketSystem ps = make_packets(4, 3);
  auto orders = enumerate_A(ps);
  auto classes = quotient_classes(ps, orders, false);
  CHECK(classes.size() == 2);
  auto inv = enumerate_B_invsets(ps);
  CHECK(inv.size() == 2);
  auto sym = enumerate_Bs_invsets(ps);
  CHECK(sym.size() == 2);  // |B^s(4,3)| = 2
  auto sorders = enumerate_As(ps);
  auto sclasses = quotient_classes(ps, sorders, true);
  CHECK(sclasses.size() == 2);
}

TEST_CASE("order route and inversion-set route agree at small parameters") {
  for (auto [n, d] : {std::pair{3, 1}, {4, 1}, {5, 1}, {4, 2}, {4, 3}, {5, 2}}) {
    PacketSystem ps = make_packets(n, d);
    auto orders = enumerate_A(ps, 1u << 24);
    auto keys_orders = invsets_as_keys(ps, orders);
    auto keys_sets = invsets_as_keys(enumerate_B_invsets(ps));
    CHECK(keys_orders == keys_sets);
    // Class count equals distinct inversion sets (Inv is injective on B).
    auto classes = quotient_classes(ps, orders, false, 1u << 24);
    CHECK(classes.size() == keys_sets.size());
  }
}

TEST_CASE("symmetric route agreement at (4,1), (4,3), (6,1)") {
  for (auto [n, d] : {std::pair{4, 1}, {4, 3}, {6, 1}}) {
    PacketSystem ps = make_packets(n, d);
    auto orders = enumerate_As(ps, 1u << 24);
    auto keys_orders = invsets_as_keys(ps, orders);
    auto keys_sets = invsets_as_keys(enumerate_Bs_invsets(ps));
    CHECK(keys_orders == keys_sets);
    auto classes = quotient_classes(ps, orders, true, 1u << 24);
    CHECK(classes.size() == keys_sets.size());
    // Every s-admissible order's inversion set is star-closed.
    GroundSet g(n);
    for (const auto& rho : orders) {
      auto inv = inversions_of(ps, rho);
      std::set<Bits> u;
      for (ColorSet t : inv) u.insert(t.bits());
      for (ColorSet t : inv) CHECK(u.count(mirror(t, g).bits()));
    }
  }
}

TEST_CASE("admissibility is hereditary: every packet restriction is lex or anti-lex") {
  PacketSystem ps = make_packets(5, 2);
  auto orders = enumerate_A(ps, 1u << 24);
  // inversions_of throws if some packet is neither; spot-check a sample.
  for (size_t i = 0; i < orders.size(); i += std::max<size_t>(1, orders.size() / 50))
    CHECK_NOTHROW(inversions_of(ps, orders[i]));
}

TEST_CASE("|B(n,2)| matches the cubillage counts 8 and 62") {
  CHECK(enumerate_B_invsets(make_packets(4, 2)).size() == 8);
  CHECK(enumerate_B_invsets(make_packets(5, 2)).size() == 62);
}

TEST_CASE("correspondence at (4,3): two classes matching the two cubillages") {
  CorrespondenceReport rep = correspondence_check(4, 3);
  CHECK(rep.bruhat_classes == 2);
  CHECK(rep.symmetric_cubillages == 2);
  CHECK(rep.perfect_matching);
  CHECK(rep.covers_match);
}

TEST_CASE("correspondence at (6,3)") {
  CorrespondenceReport rep = correspondence_check(6, 3);
  CHECK(rep.bruhat_classes == rep.symmetric_cubillages);
  CHECK(rep.perfect_matching);
  CHECK(rep.covers_match);
}
