#include "sepsys/weaksep.hpp"

#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace sepsys {

namespace {

void require_maximal_weak(const Collection& W) {
  if (!is_pairwise(W, SeparationPredicate::weak(1)))
    throw std::invalid_argument("collection is not weakly separated");
  if (!is_maximal(W, SeparationPredicate::weak(1)))
    throw std::invalid_argument("collection is not maximal weakly separated");
}

}  // namespace

std::vector<WeakFlipSite> find_weak_flips(const Collection& W) {
  require_maximal_weak(W);
  const int n = W.ground.n;
  std::vector<WeakFlipSite> out;
  for (ColorSet u : W.sets) {
    // raising: u = Xj
    for (int j : u.elements()) {
      ColorSet x = u.without(j);
      for (int i = 1; i < j; ++i) {
        if (u.contains(i)) continue;
        for (int k = j + 1; k <= n; ++k) {
          if (u.contains(k)) continue;
          if (W.contains(x.with(i)) && W.contains(x.with(k)) && W.contains(x.with(i).with(j)) &&
              W.contains(x.with(j).with(k)))
            out.push_back(WeakFlipSite{x, i, j, k, Direction::raising});
        }
      }
    }
    // lowering: u = Xik
    std::vector<int> el = u.elements();
    for (size_t a = 0; a < el.size(); ++a)
      for (size_t b = a + 1; b < el.size(); ++b) {
        const int i = el[a], k = el[b];
        ColorSet x = u.without(i).without(k);
        for (int j = i + 1; j < k; ++j) {
          if (u.contains(j)) continue;
          if (W.contains(x.with(i)) && W.contains(x.with(k)) && W.contains(x.with(i).with(j)) &&
              W.contains(x.with(j).with(k)))
            out.push_back(WeakFlipSite{x, i, j, k, Direction::lowering});
        }
      }
  }
  return out;
}

std::vector<WeakFlipSite> find_strong_flips(const Collection& S) {
  if (!is_pairwise(S, SeparationPredicate::strong(1)))
    throw std::invalid_argument("collection is not strongly separated");
  if (!is_maximal(S, SeparationPredicate::strong(1)))
    throw std::invalid_argument("collection is not maximal strongly separated");
  const int n = S.ground.n;
  std::vector<WeakFlipSite> out;
  auto witnesses_ok = [&](ColorSet x, int i, int j, int k) {
    return S.contains(x) && S.contains(x.with(i)) && S.contains(x.with(k)) &&
           S.contains(x.with(i).with(j)) && S.contains(x.with(j).with(k)) &&
           S.contains(x.with(i).with(j).with(k));
  };
  for (ColorSet u : S.sets) {
    for (int j : u.elements()) {
      ColorSet x = u.without(j);
      for (int i = 1; i < j; ++i) {
        if (u.contains(i)) continue;
        for (int k = j + 1; k <= n; ++k) {
          if (u.contains(k)) continue;
          if (witnesses_ok(x, i, j, k))
            out.push_back(WeakFlipSite{x, i, j, k, Direction::raising});
        }
      }
    }
    std::vector<int> el = u.elements();
    for (size_t a = 0; a < el.size(); ++a)
      for (size_t b = a + 1; b < el.size(); ++b) {
        const int i = el[a], k = el[b];
        ColorSet x = u.without(i).without(k);
        for (int j = i + 1; j < k; ++j) {
          if (u.contains(j)) continue;
          if (witnesses_ok(x, i, j, k))
            out.push_back(WeakFlipSite{x, i, j, k, Direction::lowering});
        }
      }
  }
  return out;
}

Collection apply_strong_flip(const Collection& S, const WeakFlipSite& s) {
  ColorSet x = s.x;
  if (!S.contains(s.moved())) throw std::invalid_argument("strong flip: moved set missing");
  for (ColorSet w : {x, x.with(s.i), x.with(s.k), x.with(s.i).with(s.j), x.with(s.j).with(s.k),
                     x.with(s.i).with(s.j).with(s.k)})
    if (!S.contains(w)) throw std::invalid_argument("strong flip: witness missing");
  Collection out = S.replaced(s.moved(), s.target());
  if (!is_pairwise(out, SeparationPredicate::strong(1)))
    throw std::logic_error("strong flip: result not strongly separated");
  return out;
}

Collection apply_weak_flip(const Collection& W, const WeakFlipSite& s) {
  ColorSet x = s.x;
  if (!W.contains(s.moved())) throw std::invalid_argument("weak flip: moved set missing");
  for (ColorSet w : {x.with(s.i), x.with(s.k), x.with(s.i).with(s.j), x.with(s.j).with(s.k)})
    if (!W.contains(w)) throw std::invalid_argument("weak flip: witness missing");
  Collection out = W.replaced(s.moved(), s.target());
  if (!is_pairwise(out, SeparationPredicate::weak(1)))
    throw std::logic_error("weak flip: result not weakly separated");
  return out;
}

Collection symmetric_weak_flip(const Collection& W, const WeakFlipSite& s) {
  const GroundSet& g = W.ground;
  if (g.n % 2 != 0) throw std::invalid_argument("symmetric_weak_flip: n must be even");
  ColorSet moved = s.moved(), target = s.target();
  ColorSet moved_s = star(moved, g), target_s = star(target, g);
  if (moved == moved_s || target == target_s)
    throw std::invalid_argument("symmetric_weak_flip: self-conflicting site");
  Collection out = apply_weak_flip(W, s);
  out = out.without(moved_s).with(target_s);
  if (!is_symmetric(out)) throw std::logic_error("symmetric_weak_flip: result not symmetric");
  if (!is_pairwise(out, SeparationPredicate::weak(1)))
    throw std::logic_error("symmetric_weak_flip: result not weakly separated");
  return out;
}

std::vector<WeakFlipSite> symmetric_lowering_sites(const Collection& W) {
  const GroundSet& g = W.ground;
  const int m = g.m();
  std::vector<WeakFlipSite> out;
  std::set<std::pair<Bits, Bits>> seen;  // {moved, moved*} unordered
  for (const WeakFlipSite& s : find_weak_flips(W)) {
    if (s.dir != Direction::lowering) continue;
    ColorSet moved = s.moved();
    if (moved.size() > m) continue;
    ColorSet ms = star(moved, g);
    if (moved == ms) continue;
    Bits a = moved.bits(), b = ms.bits();
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
    out.push_back(s);
  }
  return out;
}

long long folded_level_sum(const Collection& W) {
  long long sum = 0;
  for (ColorSet x : W.sets) sum += std::min(x.size(), W.ground.n - x.size());
  return sum;
}

WeakNormalization normalize_symmetric_weak(const Collection& W) {
  const GroundSet& g = W.ground;
  if (g.n % 2 != 0) throw std::invalid_argument("normalize_symmetric_weak: n must be even");
  if (!is_symmetric(W)) throw std::invalid_argument("normalize_symmetric_weak: not symmetric");
  require_maximal_weak(W);
  WeakNormalization res;
  res.result = W;
  const long long start = folded_level_sum(W);
  long long guard = start + 1;
  while (guard-- > 0) {
    auto sites = symmetric_lowering_sites(res.result);
    if (sites.empty()) {
      if (!is_pairwise(res.result, SeparationPredicate::strong(1)))
        throw std::logic_error(
            "normalize_symmetric_weak: stalled before a strongly separated state");
      res.excess_initial = (start - folded_level_sum(res.result)) / 2;
      return res;
    }
    const WeakFlipSite* best = &sites.front();
    auto key = [](const WeakFlipSite& t) {
      return std::tuple<Bits, int, int, int>(t.x.bits(), t.i, t.j, t.k);
    };
    for (const WeakFlipSite& s : sites)
      if (key(s) < key(*best)) best = &s;
    long long before = folded_level_sum(res.result);
    res.result = symmetric_weak_flip(res.result, *best);
    if (folded_level_sum(res.result) != before - 2)
      throw std::logic_error("normalize_symmetric_weak: folded level sum did not drop by 2");
    ++res.steps;
  }
  throw std::logic_error("normalize_symmetric_weak: did not terminate");
}

// ---- omega -----------------------------------------------------------------------

namespace {

ColorSet drop_color(ColorSet s, int z) {
  ColorSet out;
  for (int c : s.elements()) {
    if (c == z) throw std::logic_error("drop_color: color present");
    out = out.with(c < z ? c : c - 1);
  }
  return out;
}

ColorSet raise_color(ColorSet s, int z) {
  ColorSet out;
  for (int c : s.elements()) out = out.with(c < z ? c : c + 1);
  return out;
}

}  // namespace

Collection omega(const Collection& C) {
  const GroundSet& g = C.ground;
  if (g.n % 2 == 0) throw std::invalid_argument("omega: n must be odd");
  if (!is_symmetric(C)) throw std::invalid_argument("omega: collection not symmetric");
  if (!is_pairwise(C, SeparationPredicate::weak(1)))
    throw std::invalid_argument("omega: collection is not weakly separated");
  // For n odd, symmetric collections are never plain-maximal (|C| < s_{n,1});
  // the domain is the symmetric-maximal ones.
  if (!is_symmetric_maximal(C, SeparationPredicate::weak(1)))
    throw std::invalid_argument("omega: collection is not maximal among symmetric ones");
  const int m = g.m(), z = m + 1;
  std::vector<ColorSet> sets;
  for (ColorSet x : C.sets) {
    if (x.contains(z)) {
      if (x.size() < m + 1) throw std::logic_error("omega: member with m+1 below level m+1");
      sets.push_back(drop_color(x.without(z), z));
    } else {
      if (x.size() > m) throw std::logic_error("omega: member without m+1 above level m");
      sets.push_back(drop_color(x, z));
    }
  }
  Collection W(GroundSet(g.n - 1), std::move(sets));
  if (!is_symmetric(W) || !is_pairwise(W, SeparationPredicate::weak(1)))
    throw std::logic_error("omega: image fails the symmetric weak-separation checks");
  if (C.size() != W.size() + (m + 1))
    throw std::logic_error("omega: image size is not |C| - (m+1)");
  return W;
}

Collection omega_inverse(const Collection& W) {
  const GroundSet& g = W.ground;
  if (g.n % 2 != 0) throw std::invalid_argument("omega_inverse: ground must have 2m colors");
  if (!is_symmetric(W)) throw std::invalid_argument("omega_inverse: collection not symmetric");
  require_maximal_weak(W);
  const int m = g.m(), z = m + 1, n = g.n + 1;
  std::vector<ColorSet> sets;
  for (ColorSet x : W.sets) {
    ColorSet lifted = raise_color(x, z);
    if (x.size() < m) sets.push_back(lifted);
    if (x.size() > m) sets.push_back(lifted.with(z));
    if (x.size() == m) {
      // Self-symmetric middle members contribute both copies. A mirror pair
      // {A, A*} contributes the surrounding member low and the star of it
      // (= the other member plus z) high; the other split is never weakly
      // separated.
      ColorSet xs = star(x, g);
      if (xs == x) {
        sets.push_back(lifted);
        sets.push_back(lifted.with(z));
      } else if (surrounds(x, xs)) {
        sets.push_back(lifted);
      } else if (surrounds(xs, x)) {
        sets.push_back(lifted.with(z));
      } else {
        throw std::logic_error("omega_inverse: middle mirror pair without a surrounding member");
      }
    }
  }
  Collection C(GroundSet(n), std::move(sets));
  if (!is_symmetric(C) || !is_pairwise(C, SeparationPredicate::weak(1)))
    throw std::logic_error("omega_inverse: image fails the symmetric weak-separation checks");
  if (!is_symmetric_maximal(C, SeparationPredicate::weak(1)))
    throw std::logic_error("omega_inverse: image not maximal among symmetric collections");
  if (C.size() != W.size() + (m + 1))
    throw std::logic_error("omega_inverse: image size is not |W| + (m+1)");
  return C;
}

// ---- gadgets ---------------------------------------------------------------------

std::vector<ColorSet> Gadget::witnesses() const {
  std::vector<ColorSet> out;
  for (int qq : q.elements()) out.push_back(root | p.with(qq));                // Pq
  for (int pp : p.elements())
    for (int qq : q.elements()) out.push_back(root | p.without(pp).with(qq));  // (P-p)q
  for (int qq : q.elements()) out.push_back(root | q.without(qq));             // Q-q
  for (int pp : p.elements())
    for (int qq : q.elements()) out.push_back(root | q.without(qq).with(pp));  // (Q-q)p
  std::sort(out.begin(), out.end(), ColorSetLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ColorSet> Gadget::lower_layer() const {
  std::vector<ColorSet> out{root | p};
  for (int qq : q.elements()) out.push_back(root | q.without(qq));
  for (int pp : p.elements())
    for (int qq : q.elements()) out.push_back(root | p.without(pp).with(qq));
  std::sort(out.begin(), out.end(), ColorSetLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ColorSet> Gadget::upper_layer() const {
  std::vector<ColorSet> out{root | q};
  for (int qq : q.elements()) out.push_back(root | p.with(qq));
  for (int pp : p.elements())
    for (int qq : q.elements()) out.push_back(root | q.without(qq).with(pp));
  std::sort(out.begin(), out.end(), ColorSetLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Gadget star_gadget(const Gadget& g, const GroundSet& ground) {
  Gadget s;
  s.root = star(g.root | g.type(), ground);
  s.p = mirror(g.p, ground);
  s.q = mirror(g.q, ground);
  s.dir = g.dir == Direction::raising ? Direction::lowering : Direction::raising;
  return s;
}

namespace {

bool interleaves(ColorSet p, ColorSet q) {
  // q_0 < p_1 < q_1 < ... < p_r' < q_r'
  std::vector<int> pe = p.elements(), qe = q.elements();
  if (qe.size() != pe.size() + 1) return false;
  for (size_t i = 0; i < pe.size(); ++i)
    if (!(qe[i] < pe[i] && pe[i] < qe[i + 1])) return false;
  return true;
}

void for_each_ksubset(const std::vector<int>& el, int k, const std::function<void(ColorSet)>& fn) {
  const int n = static_cast<int>(el.size());
  if (k > n) return;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    ColorSet s;
    for (int i : comb) s = s.with(el[i]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace

std::vector<Gadget> find_gadgets(const Collection& W, int r) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("find_gadgets: r must be odd");
  const int n = W.ground.n, rp = (r + 1) / 2;
  std::vector<Gadget> out;
  auto has_witnesses = [&](const Gadget& gg) {
    for (ColorSet w : gg.witnesses())
      if (!W.contains(w)) return false;
    return true;
  };
  for (ColorSet u : W.sets) {
    std::vector<int> others;
    for (int c = 1; c <= n; ++c)
      if (!u.contains(c)) others.push_back(c);
    // raising gadgets with XP = u
    for_each_ksubset(u.elements(), rp, [&](ColorSet p) {
      ColorSet x = u - p;
      for_each_ksubset(others, rp + 1, [&](ColorSet q) {
        if (!interleaves(p, q)) return;
        Gadget gg{x, p, q, Direction::raising};
        if (has_witnesses(gg)) out.push_back(gg);
      });
    });
    // lowering gadgets with XQ = u
    for_each_ksubset(u.elements(), rp + 1, [&](ColorSet q) {
      ColorSet x = u - q;
      for_each_ksubset(others, rp, [&](ColorSet p) {
        if (!interleaves(p, q)) return;
        Gadget gg{x, p, q, Direction::lowering};
        if (has_witnesses(gg)) out.push_back(gg);
      });
    });
  }
  return out;
}

Collection gadget_flip(const Collection& W, const Gadget& g) {
  if (!W.contains(g.moved())) throw std::invalid_argument("gadget_flip: source missing");
  for (ColorSet w : g.witnesses())
    if (!W.contains(w)) throw std::invalid_argument("gadget_flip: witness missing");
  Collection out = W.replaced(g.moved(), g.target());
  const int r = 2 * g.rprime() - 1;
  if (!is_pairwise(out, SeparationPredicate::weak(r)))
    throw std::logic_error("gadget_flip: result not weakly r-separated");
  return out;
}

bool symmetric_gadget_flip_safe(const Gadget& g, const GroundSet& ground) {
  const Gadget raising = g.dir == Direction::raising ? g : star_gadget(g, ground);
  const Gadget lowering = star_gadget(raising, ground);
  const int delta = std::abs(raising.height() - lowering.height());
  if (delta >= 2) return true;
  // Gap 1 is safe only when the raising flip happens in the lower gadget.
  return raising.height() + 1 == lowering.height();
}

Collection symmetric_gadget_flip(const Collection& W, const Gadget& g) {
  const GroundSet& ground = W.ground;
  if (ground.n % 2 != 0) throw std::invalid_argument("symmetric_gadget_flip: n must be even");
  if (!symmetric_gadget_flip_safe(g, ground))
    throw std::invalid_argument("symmetric_gadget_flip: unsafe height-gap-1 orientation");
  const Gadget raising = g.dir == Direction::raising ? g : star_gadget(g, ground);
  const Gadget lowering = star_gadget(raising, ground);
  Collection out = gadget_flip(W, raising);
  out = gadget_flip(out, lowering);
  if (out.size() != W.size()) throw std::logic_error("symmetric_gadget_flip: size changed");
  if (!is_symmetric(out)) throw std::logic_error("symmetric_gadget_flip: result not symmetric");
  return out;
}

}  // namespace sepsys
