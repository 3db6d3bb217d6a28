#include "doctest.h"

#include <map>
#include <set>

#include "sepsys/tilings2d.hpp"

using namespace sepsys;

namespace {

std::vector<MiddlePermutation> all_permutations(int n) {
  std::vector<int> vals;
  for (int i = 1; i <= n / 2; ++i) vals.push_back(i);
  std::vector<MiddlePermutation> out;
  std::sort(vals.begin(), vals.end());
  do {
    MiddlePermutation p;
    p.n = n;
    p.sigma = vals;
    out.push_back(p);
  } while (std::next_permutation(vals.begin(), vals.end()));
  return out;
}

}  // namespace

TEST_CASE("middle sequence runs from [m] to [(m+1)..n]") {
  for (int n : {4, 6}) {
    for (const auto& p : all_permutations(n)) {
      auto seq = p.middle_sequence();
      GroundSet g(n);
      CHECK(seq.front() == ColorSet::interval(1, n / 2));
      CHECK(seq.back() == ColorSet::interval(n / 2 + 1, n));
      for (ColorSet a : seq) CHECK(self_symmetric(a, g));
    }
  }
}

TEST_CASE("min tiling exists, is symmetric, and has the declared sigma") {
  for (int n : {4, 6}) {
    for (const auto& p : all_permutations(n)) {
      Cubillage T = min_tiling(p);
      CHECK(validate(T).ok());
      CHECK(is_symmetric_cubillage(T));
      CHECK(sigma_of(T.vertex_set()) == p);
    }
  }
}

TEST_CASE("n=4 blocks are singletons") {
  for (const auto& p : all_permutations(4)) {
    auto block = block_of(p);
    CHECK(block.size() == 1);
  }
}

TEST_CASE("n=6 block sizes are 3,1,3 and duals") {
  std::map<std::vector<int>, int> expected = {{{1, 2, 3}, 3}, {{1, 3, 2}, 1}, {{3, 1, 2}, 3},
                                              {{3, 2, 1}, 3}, {{2, 3, 1}, 1}, {{2, 1, 3}, 3}};
  int total = 0;
  std::set<std::vector<std::pair<Bits, Bits>>> all_states;
  for (const auto& p : all_permutations(6)) {
    auto block = block_of(p);
    REQUIRE(expected.count(p.sigma));
    CHECK(static_cast<int>(block.size()) == expected[p.sigma]);
    total += static_cast<int>(block.size());
    for (const Cubillage& T : block) {
      CHECK(sigma_of(T.vertex_set()) == p);
      std::vector<std::pair<Bits, Bits>> key;
      for (const Cube& c : T.cubes) key.emplace_back(c.bottom.bits(), c.type.bits());
      all_states.insert(key);
    }
  }
  CHECK(total == 14);
  CHECK(all_states.size() == 14);  // blocks partition the symmetric tilings
}

TEST_CASE("directed blocks have the min tiling as unique source") {
  for (int n : {4, 6}) {
    for (const auto& p : all_permutations(n)) {
      Cubillage tmin = min_tiling(p);
      for (const Cubillage& T : block_of(p)) {
        int lowering_moves = 0;
        for (const SymmetricMove& mv : symmetric_flip_sites_even_d(T))
          if (mv.kind == SymmetricMove::Kind::double_capsid &&
              double_move_direction_below_middle(T, mv) == Direction::lowering)
            ++lowering_moves;
        if (T == tmin)
          CHECK(lowering_moves == 0);
        else
          CHECK(lowering_moves > 0);
      }
    }
  }
}

TEST_CASE("Lemma: min tiling satisfies the indegree bound via uniqueness") {
  // Re-running the normalization on any block member lands on the block's
  // unique minimal tiling.
  MiddlePermutation p;
  p.n = 6;
  p.sigma = {1, 2, 3};
  Cubillage tmin = min_tiling(p);
  for (const Cubillage& T : block_of(p)) {
    // Drive T down by below-middle lowering flips.
    Cubillage cur = T;
    int guard = 100;
    while (guard-- > 0) {
      const SymmetricMove* pick = nullptr;
      auto sites = symmetric_flip_sites_even_d(cur);
      for (const SymmetricMove& mv : sites)
        if (mv.kind == SymmetricMove::Kind::double_capsid &&
            double_move_direction_below_middle(cur, mv) == Direction::lowering) {
          pick = &mv;
          break;
        }
      if (!pick) break;
      cur = apply_move(cur, *pick);
    }
    CHECK(cur == tmin);
  }
}

TEST_CASE("sigma_of rejects non-middle collections") {
  GroundSet g(4);
  Collection bad(g, {ColorSet({1})});
  CHECK_THROWS(sigma_of(bad));
}

TEST_CASE("render_svg emits SVG 1.1 with one polygon per rhombus") {
  Cubillage T = standard(4, 2);
  std::string svg = render_svg(T);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  size_t count = 0, pos = 0;
  while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 6);
  CHECK(svg.find("</svg>") != std::string::npos);
  // Labels on demand.
  SvgOptions o;
  o.labels = true;
  std::string labeled = render_svg(T, o);
  CHECK(labeled.find("<text") != std::string::npos);
}
