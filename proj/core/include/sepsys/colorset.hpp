#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepsys {

// Colors are 1..n; a ColorSet stores color i in bit i-1. Ground sets are
// capped at 31 colors, far beyond the desk scale this library targets.
using Bits = std::uint32_t;
inline constexpr int kMaxColors = 31;

struct GroundSet {
  int n = 0;

  GroundSet() = default;
  explicit GroundSet(int n_) : n(n_) {
    if (n < 0 || n > kMaxColors) throw std::invalid_argument("GroundSet: n out of range");
  }

  int m() const { return n / 2; }
  bool odd() const { return (n & 1) != 0; }
  // i° = n+1-i
  int comp(int i) const { return n + 1 - i; }
  Bits mask() const { return n == 0 ? 0u : ((Bits{1} << n) - 1u); }

  bool operator==(const GroundSet&) const = default;
};

class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(Bits bits) : bits_(bits) {}
  ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) *this = with(c);
  }

  static ColorSet full(const GroundSet& g) { return ColorSet(g.mask()); }
  static ColorSet interval(int a, int b) {  // [a..b], empty when a > b
    ColorSet s;
    for (int c = a; c <= b; ++c) s = s.with(c);
    return s;
  }

  Bits bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  bool contains(int c) const { return c >= 1 && (bits_ >> (c - 1)) & 1u; }

  ColorSet with(int c) const {
    if (c < 1 || c > kMaxColors) throw std::invalid_argument("ColorSet: color out of range");
    return ColorSet(bits_ | (Bits{1} << (c - 1)));
  }
  ColorSet without(int c) const { return ColorSet(bits_ & ~(Bits{1} << (c - 1))); }

  ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  ColorSet operator-(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
  ColorSet operator^(ColorSet o) const { return ColorSet(bits_ ^ o.bits_); }

  bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint(ColorSet o) const { return (bits_ & o.bits_) == 0; }

  // min(∅) = +∞ and max(∅) = -∞ encoded as sentinels beyond any color.
  static constexpr int kMinOfEmpty = kMaxColors + 1;
  static constexpr int kMaxOfEmpty = 0;
  int min() const { return bits_ == 0 ? kMinOfEmpty : __builtin_ctz(bits_) + 1; }
  int max() const { return bits_ == 0 ? kMaxOfEmpty : 32 - __builtin_clz(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (Bits b = bits_; b; b &= b - 1) out.push_back(__builtin_ctz(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int c : elements()) {
      if (!first) s += ',';
      s += std::to_string(c);
      first = false;
    }
    return s + "}";
  }

  bool operator==(const ColorSet&) const = default;

 private:
  Bits bits_ = 0;
};

// Order by the ascending element sequence (shorter prefix first), the
// canonical tie-break used throughout.
inline bool lex_less(ColorSet a, ColorSet b) {
  if (a == b) return false;
  Bits diff = a.bits() ^ b.bits();
  int d = __builtin_ctz(diff) + 1;  // first color where they differ
  Bits above = ~((Bits{1} << d) - 1u);
  if (a.contains(d)) return (b.bits() & above) != 0;  // b continues past the shared prefix
  return (a.bits() & above) == 0;                     // a is a proper prefix of b
}

struct ColorSetLess {
  bool operator()(ColorSet a, ColorSet b) const { return lex_less(a, b); }
};

// X* = {i : i° ∉ X}. Involutive; |X| + |X*| = n.
inline ColorSet star(ColorSet x, const GroundSet& g) {
  Bits rev = 0;
  for (int i = 1; i <= g.n; ++i)
    if (x.contains(g.comp(i))) rev |= Bits{1} << (i - 1);
  return ColorSet(~rev & g.mask());
}

// X° = {i° : i ∈ X}.
inline ColorSet mirror(ColorSet x, const GroundSet& g) {
  Bits rev = 0;
  for (int i = 1; i <= g.n; ++i)
    if (x.contains(g.comp(i))) rev |= Bits{1} << (i - 1);
  return ColorSet(rev);
}

inline bool self_symmetric(ColorSet x, const GroundSet& g) { return star(x, g) == x; }

// min(A-B) < min(B-A) and max(A-B) > max(B-A), with the empty-set conventions.
inline bool surrounds(ColorSet a, ColorSet b) {
  ColorSet ab = a - b, ba = b - a;
  return ab.min() < ba.min() && ab.max() > ba.max();
}

// Length of the longest chain i_1 < ... < i_k alternating between A-B and
// B-A: one element per block of the left-to-right block decomposition.
inline int alternation_blocks(ColorSet a, ColorSet b) {
  ColorSet ab = a - b, ba = b - a;
  int blocks = 0;
  int side = 0;  // 0 none, 1 in A-B, 2 in B-A
  Bits rem = ab.bits() | ba.bits();
  while (rem) {
    int c = __builtin_ctz(rem) + 1;
    rem &= rem - 1;
    int s = ab.contains(c) ? 1 : 2;
    if (s != side) {
      ++blocks;
      side = s;
    }
  }
  return blocks;
}

// No r+2 elements alternating in A-B and B-A. r=1 strong, r=2 chord.
inline bool is_r_separated(ColorSet a, ColorSet b, int r) {
  if (r < 1) throw std::invalid_argument("is_r_separated: r must be >= 1");
  return alternation_blocks(a, b) <= r + 1;
}

inline bool is_strongly_separated(ColorSet a, ColorSet b) { return is_r_separated(a, b, 1); }
inline bool is_chord_separated(ColorSet a, ColorSet b) { return is_r_separated(a, b, 2); }

inline bool is_weakly_separated(ColorSet a, ColorSet b) {
  if (!is_chord_separated(a, b)) return false;
  if (surrounds(a, b) && !(b - a).empty() && a.size() > b.size()) return false;
  if (surrounds(b, a) && !(a - b).empty() && b.size() > a.size()) return false;
  return true;
}

// Weak r-separation for odd r: strongly (r+1)-separated, and when a maximal
// alternation of length r+2 exists its two ends fix the size constraint.
inline bool is_weakly_r_separated(ColorSet a, ColorSet b, int r) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("is_weakly_r_separated: r must be odd");
  int blocks = alternation_blocks(a, b);
  if (blocks > r + 2) return false;
  if (blocks == r + 2) {
    // r+2 is odd, so a length-(r+2) chain starts and ends in the side
    // holding the smallest element of the symmetric difference.
    ColorSet ab = a - b, ba = b - a;
    bool ends_in_a = ab.min() < ba.min();
    if (ends_in_a && a.size() > b.size()) return false;
    if (!ends_in_a && b.size() > a.size()) return false;
  }
  return true;
}

struct SeparationPredicate {
  enum class Kind { strong, weak };
  Kind kind = Kind::strong;
  int r = 1;

  static SeparationPredicate strong(int r = 1) { return {Kind::strong, r}; }
  static SeparationPredicate weak(int r = 1) { return {Kind::weak, r}; }

  bool operator()(ColorSet a, ColorSet b) const {
    if (kind == Kind::strong) return is_r_separated(a, b, r);
    return r == 1 ? is_weakly_separated(a, b) : is_weakly_r_separated(a, b, r);
  }
};

// A finite family of distinct ColorSets over a ground set, kept sorted.
struct Collection {
  GroundSet ground;
  std::vector<ColorSet> sets;

  Collection() = default;
  Collection(GroundSet g, std::vector<ColorSet> s) : ground(g), sets(std::move(s)) {
    normalize();
  }

  void normalize() {
    for (ColorSet s : sets)
      if (!s.subset_of(ColorSet::full(ground)))
        throw std::invalid_argument("Collection: member outside ground set");
    std::sort(sets.begin(), sets.end(), ColorSetLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  }

  bool contains(ColorSet s) const {
    return std::binary_search(sets.begin(), sets.end(), s, ColorSetLess{});
  }
  int size() const { return static_cast<int>(sets.size()); }

  Collection with(ColorSet s) const {
    Collection c = *this;
    c.sets.push_back(s);
    c.normalize();
    return c;
  }
  Collection without(ColorSet s) const {
    Collection c = *this;
    c.sets.erase(std::remove(c.sets.begin(), c.sets.end(), s), c.sets.end());
    return c;
  }
  Collection replaced(ColorSet out, ColorSet in) const {
    Collection c = without(out);
    return c.with(in);
  }

  bool operator==(const Collection&) const = default;
};

inline bool is_pairwise(const Collection& s, const SeparationPredicate& pred) {
  for (size_t i = 0; i < s.sets.size(); ++i)
    for (size_t j = i + 1; j < s.sets.size(); ++j)
      if (!pred(s.sets[i], s.sets[j])) return false;
  return true;
}

inline bool is_symmetric(const Collection& s) {
  for (ColorSet x : s.sets)
    if (!s.contains(star(x, s.ground))) return false;
  return true;
}

// True when no orbit {Y, Y*} outside S can be added keeping the predicate;
// the right maximality notion for symmetric collections (n odd especially,
// where symmetric collections are never plain-maximal).
inline bool is_symmetric_maximal(const Collection& s, const SeparationPredicate& pred) {
  Bits full = s.ground.mask();
  for (Bits b = 0;; ++b) {
    ColorSet y(b);
    if (!s.contains(y)) {
      ColorSet ys = star(y, s.ground);
      bool fits = pred(y, ys);
      for (ColorSet x : s.sets) {
        if (!fits) break;
        fits = pred(x, y) && pred(x, ys);
      }
      if (fits) return false;
    }
    if (b == full) break;
  }
  return true;
}

// True when every Y ∉ S fails the predicate against some member of S.
inline bool is_maximal(const Collection& s, const SeparationPredicate& pred) {
  Bits full = s.ground.mask();
  for (Bits b = 0;; ++b) {
    ColorSet y(b);
    if (!s.contains(y)) {
      bool fits = true;
      for (ColorSet x : s.sets)
        if (!pred(x, y)) {
          fits = false;
          break;
        }
      if (fits) return false;
    }
    if (b == full) break;
  }
  return true;
}

}  // namespace sepsys
