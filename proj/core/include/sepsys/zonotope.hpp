#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepsys/colorset.hpp"

namespace sepsys {

using Int = boost::multiprecision::cpp_int;

struct Point {
  std::vector<Int> coords;
  bool operator==(const Point&) const = default;
};

// A d-face of a cubic complex in Z(n, dim): bottom vertex X, edge colors T.
struct Cube {
  ColorSet bottom;
  ColorSet type;

  ColorSet top() const { return bottom | type; }
  bool operator==(const Cube&) const = default;
};

inline bool cube_less(const Cube& a, const Cube& b) {
  if (a.bottom != b.bottom) return lex_less(a.bottom, b.bottom);
  return lex_less(a.type, b.type);
}
struct CubeLess {
  bool operator()(const Cube& a, const Cube& b) const { return cube_less(a, b); }
};

// Cyclic configuration ξ_i = (1, t_i, ..., t_i^{d-1}) with t symmetric
// around 0 (t_{i°} = -t_i). All flag minors of the generator matrix are
// positive; verified at construction.
class CyclicConfiguration {
 public:
  CyclicConfiguration(int n, int d, std::vector<long long> t);

  int n() const { return n_; }
  int d() const { return d_; }
  const GroundSet& ground() const { return ground_; }
  long long t(int color) const { return t_[color - 1]; }
  const std::vector<Int>& generator(int color) const { return gen_[color - 1]; }

  // Normal of span{ξ_s : s ∈ S}, |S| = d-1, normalized so the last
  // coordinate is negative (points toward the front side).
  const std::vector<Int>& front_normal(ColorSet S) const;

  // sign(h_S · ξ_color) for the front normal h_S; never 0 for color ∉ S.
  int dot_sign(ColorSet S, int color) const;

  // sign of the first coordinate of the front normal (nonzero iff no t_s = 0;
  // used for the up/low classification along ξ_0 in the odd-n constructions).
  int first_coord_sign(ColorSet S) const;

 private:
  int n_, d_;
  GroundSet ground_;
  std::vector<long long> t_;
  std::vector<std::vector<Int>> gen_;
  std::map<Bits, std::vector<Int>> normals_;  // keyed by (d-1)-subset bits

  void verify_flag_minors() const;
  void verify_injective_embedding() const;
  std::vector<Int> compute_normal(ColorSet S) const;
};

using CfgPtr = std::shared_ptr<const CyclicConfiguration>;

// The configuration with t_i = 2i - n - 1 (symmetric odd integers; for n odd
// the middle color gets t = 0). Results are cached per (n, d).
CfgPtr make_configuration(int n, int d);
CfgPtr make_configuration(int n, int d, std::vector<long long> t);

// Σ_{i∈X} ξ_i as an exact rational (here: integral) point.
Point embed(ColorSet X, const CyclicConfiguration& cfg);

// Facets of Z(n, cfg.d) on the front/rear side, one per (d-1)-subset type;
// their projections tile Z(n, d-1).
std::vector<Cube> front_facets(const CyclicConfiguration& cfg);
std::vector<Cube> rear_facets(const CyclicConfiguration& cfg);

// The two facets of a cube (X|T) of color t (S = T - t), classified by the
// projection direction of the last coordinate.
struct FacetPair {
  Cube front;
  Cube rear;
};
FacetPair cube_facets(const CyclicConfiguration& cfg, const Cube& c, int t);

// Same split along the first coordinate (the ξ_0 direction used by the
// 0-membrane machinery); requires all t_s ≠ 0 for the facet types involved.
struct UpLowPair {
  Cube up;
  Cube low;
};
UpLowPair cube_facets_updown(const CyclicConfiguration& cfg, const Cube& c, int t);

}  // namespace sepsys
