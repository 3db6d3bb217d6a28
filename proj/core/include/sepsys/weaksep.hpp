#pragma once

#include "sepsys/colorset.hpp"
#include "sepsys/cubillage.hpp"

namespace sepsys {

// Four-witness flip site: Xj <-> Xik with witnesses Xi, Xk, Xij, Xjk.
struct WeakFlipSite {
  ColorSet x;
  int i = 0, j = 0, k = 0;
  Direction dir = Direction::raising;

  ColorSet moved() const { return dir == Direction::raising ? x.with(j) : x.with(i).with(k); }
  ColorSet target() const { return dir == Direction::raising ? x.with(i).with(k) : x.with(j); }
  bool operator==(const WeakFlipSite&) const = default;
};

// All weak flip sites of a maximal w-collection (maximality is checked).
std::vector<WeakFlipSite> find_weak_flips(const Collection& W);

// The six-witness variant on maximal s-collections (witnesses X, Xi, Xk,
// Xij, Xjk, Xijk); sites reuse the same descriptor.
std::vector<WeakFlipSite> find_strong_flips(const Collection& S);
Collection apply_strong_flip(const Collection& S, const WeakFlipSite& s);

// Just the replacement, with witness and separation checks.
Collection apply_weak_flip(const Collection& W, const WeakFlipSite& s);

// The site's flip together with its star-mirror flip; the site's moved set
// must not be self-symmetric (the flips would collide).
Collection symmetric_weak_flip(const Collection& W, const WeakFlipSite& s);

// Lowering sites usable below the middle line, star-deduplicated.
std::vector<WeakFlipSite> symmetric_lowering_sites(const Collection& W);

// Drives a maximal symmetric w-collection to a strongly separated one by
// symmetric weak flips, preserving sigma.
struct WeakNormalization {
  Collection result;
  int steps = 0;
  long long excess_initial = 0;  // below-middle excess level sum at the start
};
WeakNormalization normalize_symmetric_weak(const Collection& W);

// Σ_X min(|X|, n-|X|); drops by exactly 2 per symmetric weak flip.
long long folded_level_sum(const Collection& W);

// The n-odd correspondence: strips the self-complementary color m+1 and
// relabels onto [n-1]; omega_inverse reinserts it at levels >= m.
Collection omega(const Collection& C);
Collection omega_inverse(const Collection& W);

// ---- weakly r-separated gadget flips (r odd) ---------------------------------

struct Gadget {
  ColorSet root;  // X
  ColorSet p;     // r' elements
  ColorSet q;     // r'+1 elements, strictly interleaving p
  Direction dir = Direction::raising;  // raising: XP -> XQ

  ColorSet type() const { return p | q; }
  int rprime() const { return p.size(); }
  int height() const { return root.size() + rprime(); }
  ColorSet moved() const { return dir == Direction::raising ? root | p : root | q; }
  ColorSet target() const { return dir == Direction::raising ? root | q : root | p; }
  std::vector<ColorSet> witnesses() const;       // the sets XS, S ∈ N(P,Q)
  std::vector<ColorSet> lower_layer() const;     // XS with |S| = r'
  std::vector<ColorSet> upper_layer() const;     // XS with |S| = r+1
  bool operator==(const Gadget&) const = default;
};

Gadget star_gadget(const Gadget& g, const GroundSet& ground);

std::vector<Gadget> find_gadgets(const Collection& W, int r);
Collection gadget_flip(const Collection& W, const Gadget& g);

// Raising in the gadget, lowering in its star image. Refuses the unsafe
// height-gap-1 orientation (the case conjecture C3 is about).
Collection symmetric_gadget_flip(const Collection& W, const Gadget& g);
bool symmetric_gadget_flip_safe(const Gadget& g, const GroundSet& ground);

}  // namespace sepsys
