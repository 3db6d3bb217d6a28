#include "sepsys/tilings2d.hpp"

#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace sepsys {

using Rat = boost::multiprecision::cpp_rational;

std::vector<ColorSet> MiddlePermutation::middle_sequence() const {
  GroundSet g(n);
  std::vector<ColorSet> seq;
  ColorSet cur = ColorSet::interval(1, m());
  seq.push_back(cur);
  for (int i = 1; i <= m(); ++i) {
    cur = cur.without(sigma[i - 1]).with(g.comp(sigma[i - 1]));
    seq.push_back(cur);
  }
  return seq;
}

MiddlePermutation identity_permutation(int n) {
  MiddlePermutation p;
  p.n = n;
  for (int i = 1; i <= n / 2; ++i) p.sigma.push_back(i);
  return p;
}

MiddlePermutation sigma_of(const Collection& S) {
  const GroundSet& g = S.ground;
  if (g.n % 2 != 0) throw std::invalid_argument("sigma_of: n must be even");
  const int m = g.m();
  std::vector<ColorSet> mid;
  for (ColorSet x : S.sets)
    if (self_symmetric(x, g)) mid.push_back(x);
  if (static_cast<int>(mid.size()) != m + 1)
    throw std::invalid_argument("sigma_of: expected m+1 self-symmetric members, found " +
                                std::to_string(mid.size()));
  std::sort(mid.begin(), mid.end(), [&](ColorSet a, ColorSet b) {
    return (a & ColorSet::interval(1, m)).size() > (b & ColorSet::interval(1, m)).size();
  });
  if (!(mid.front() == ColorSet::interval(1, m)) || !(mid.back() == ColorSet::interval(m + 1, g.n)))
    throw std::invalid_argument("sigma_of: middle sequence does not run from [m] to [(m+1)..n]");
  MiddlePermutation p;
  p.n = g.n;
  for (int i = 1; i <= m; ++i) {
    ColorSet lost = mid[i - 1] - mid[i];
    ColorSet gained = mid[i] - mid[i - 1];
    if (lost.size() != 1 || gained.size() != 1 || g.comp(lost.min()) != gained.min())
      throw std::invalid_argument("sigma_of: middle step is not a single a -> a° swap");
    p.sigma.push_back(lost.min());
  }
  std::set<int> vals(p.sigma.begin(), p.sigma.end());
  if (static_cast<int>(vals.size()) != m || *vals.begin() < 1 || *vals.rbegin() > m)
    throw std::invalid_argument("sigma_of: extracted values are not a permutation of [m]");
  return p;
}

Collection complete_symmetric_strong(const Collection& seed) {
  const GroundSet& g = seed.ground;
  if (!is_symmetric(seed) || !is_pairwise(seed, SeparationPredicate::strong(1)))
    throw std::invalid_argument("complete_symmetric_strong: bad seed");
  std::vector<ColorSet> order;
  for (Bits b = 0;; ++b) {
    order.emplace_back(b);
    if (b == g.mask()) break;
  }
  std::sort(order.begin(), order.end(), [](ColorSet a, ColorSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  std::vector<ColorSet> fam = seed.sets;
  auto in_fam = [&](ColorSet x) { return std::find(fam.begin(), fam.end(), x) != fam.end(); };
  for (ColorSet x : order) {
    if (in_fam(x)) continue;
    ColorSet xs = star(x, g);
    if (!is_strongly_separated(x, xs)) continue;
    bool ok = true;
    for (ColorSet y : fam)
      if (!is_strongly_separated(x, y) || !is_strongly_separated(xs, y)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    fam.push_back(x);
    if (!(xs == x)) fam.push_back(xs);
  }
  return Collection(g, std::move(fam));
}

namespace {

std::map<Bits, int> tiling_indegrees(const Cubillage& T) {
  std::set<std::pair<Bits, Bits>> edges;
  for (const Cube& c : T.cubes) {
    std::vector<int> el = c.type.elements();
    const int i = el[0], j = el[1];
    edges.insert({c.bottom.bits(), c.bottom.with(i).bits()});
    edges.insert({c.bottom.bits(), c.bottom.with(j).bits()});
    edges.insert({c.bottom.with(i).bits(), c.top().bits()});
    edges.insert({c.bottom.with(j).bits(), c.top().bits()});
  }
  std::map<Bits, int> indeg;
  for (const auto& [u, v] : edges) indeg[v]++;
  return indeg;
}

}  // namespace

Direction double_move_direction_below_middle(const Cubillage& Q, const SymmetricMove& mv) {
  if (mv.kind != SymmetricMove::Kind::double_capsid || !mv.partner)
    throw std::invalid_argument("double_move_direction_below_middle: not a double move");
  (void)Q;
  const int site_top = mv.site.top().size();
  const int partner_top = mv.partner->top().size();
  const Capsid& below = site_top <= partner_top ? mv.site : *mv.partner;
  return below.standard_filling ? Direction::raising : Direction::lowering;
}

Cubillage min_tiling(const MiddlePermutation& sigma) {
  const int n = sigma.n;
  if (n % 2 != 0) throw std::invalid_argument("min_tiling: n must be even");
  const int m = sigma.m();
  GroundSet g(n);
  std::vector<ColorSet> seq = sigma.middle_sequence();
  std::vector<ColorSet> seed_sets(seq);
  for (int i = 1; i <= m; ++i) {
    seed_sets.push_back(seq[i - 1] & seq[i]);
    seed_sets.push_back(seq[i - 1] | seq[i]);
  }
  Collection V = complete_symmetric_strong(Collection(g, std::move(seed_sets)));
  const int want = 1 + n + n * (n - 1) / 2;
  if (V.size() != want)
    throw std::runtime_error("min_tiling: completion has size " + std::to_string(V.size()) +
                             ", expected " + std::to_string(want));
  Cubillage T = reconstruct(V, 2);
  for (int i = 1; i <= m; ++i) {
    Cube rhomb{seq[i - 1].without(sigma.sigma[i - 1]),
               ColorSet({sigma.sigma[i - 1], g.comp(sigma.sigma[i - 1])})};
    if (!T.has_cube(rhomb)) throw std::logic_error("min_tiling: middle rhombus missing");
  }

  // Lower below the middle line until every vertex at level <= m has
  // indegree <= 2; each step is a symmetric double hexagonal flip.
  long long guard = 1;
  for (const ColorSet& v : T.vertex_set().sets)
    if (v.size() <= m) guard += v.size();
  while (guard-- > 0) {
    std::map<Bits, int> indeg = tiling_indegrees(T);
    ColorSet pivot;
    bool found = false;
    for (const auto& [vb, deg] : indeg) {
      ColorSet v(vb);
      if (v.size() > m || deg < 3) continue;
      if (!found || v.size() < pivot.size() || (v.size() == pivot.size() && lex_less(v, pivot))) {
        pivot = v;
        found = true;
      }
    }
    if (!found) return T;
    // The minimal-level pivot tops an anti-standard hexagon.
    const Capsid* site = nullptr;
    std::vector<Capsid> caps = find_capsids(T);
    for (const Capsid& c : caps)
      if (!c.standard_filling && c.top() == pivot &&
          (!site || cube_less(Cube{c.bottom, c.type}, Cube{site->bottom, site->type})))
        site = &c;
    if (!site) throw std::logic_error("min_tiling: indegree-3 vertex without a W-hexagon");
    Capsid partner = star_capsid(*site, g);
    auto p = capsid_at(T, partner.bottom, partner.type);
    if (!p || p->standard_filling == site->standard_filling)
      throw std::logic_error("min_tiling: star hexagon missing or of equal flavor");
    SymmetricMove mv;
    mv.kind = SymmetricMove::Kind::double_capsid;
    mv.site = *site;
    mv.partner = *p;
    mv.dir = Direction::lowering;
    T = apply_move(T, mv);
  }
  throw std::logic_error("min_tiling: lowering did not terminate");
}

std::vector<Cubillage> block_of(const MiddlePermutation& sigma) {
  Cubillage seed = min_tiling(sigma);
  auto key_of = [](const Cubillage& Q) {
    std::vector<std::pair<Bits, Bits>> k;
    k.reserve(Q.cubes.size());
    for (const Cube& c : Q.cubes) k.emplace_back(c.bottom.bits(), c.type.bits());
    return k;
  };
  std::map<std::vector<std::pair<Bits, Bits>>, int> seen;
  std::vector<Cubillage> out{seed};
  seen[key_of(seed)] = 0;
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    Cubillage cur = out[qi];
    for (const SymmetricMove& mv : symmetric_flip_sites_even_d(cur)) {
      if (mv.kind != SymmetricMove::Kind::double_capsid) continue;
      Cubillage nxt = apply_move(cur, mv);
      auto k = key_of(nxt);
      if (!seen.count(k)) {
        seen[k] = static_cast<int>(out.size());
        out.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

// ---- SVG ------------------------------------------------------------------------

namespace {

struct Xy {
  double x, y;
};

std::string set_label(ColorSet s, int n) {
  if (s.empty()) return "&#8709;";
  std::string out;
  bool digits = n <= 9;
  for (int c : s.elements()) {
    if (!out.empty() && !digits) out += ',';
    out += std::to_string(c);
  }
  return out;
}

}  // namespace

std::string render_svg(const Cubillage& Q, const SvgOptions& opts) {
  if (Q.d() != 2) throw std::invalid_argument("render_svg: d must be 2");
  const int n = Q.n();
  const auto& cfg = *Q.cfg;
  // Concave embedding (1, t) -> (t, 1 - t^2 / (2 t_n^2)); satisfies the
  // zonogon conditions, including strict concavity and x_i = -x_{i°}.
  Rat c = Rat(1) / (Rat(2) * cfg.t(n) * cfg.t(n));
  std::vector<Rat> ex(n), ey(n);
  for (int i = 1; i <= n; ++i) {
    ex[i - 1] = Rat(cfg.t(i));
    ey[i - 1] = Rat(1) - c * cfg.t(i) * cfg.t(i);
  }
  auto place = [&](ColorSet s) {
    Rat x = 0, y = 0;
    for (int i : s.elements()) {
      x += ex[i - 1];
      y += ey[i - 1];
    }
    return Xy{static_cast<double>(x), static_cast<double>(y)};
  };

  Collection V = Q.vertex_set();
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (ColorSet v : V.sets) {
    Xy p = place(v);
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double s = opts.scale, pad = 0.6 * s;
  auto sx = [&](double x) { return (x - minx) * s + pad; };
  auto sy = [&](double y) { return (maxy - y) * s + pad; };
  const double w = (maxx - minx) * s + 2 * pad, h = (maxy - miny) * s + 2 * pad;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (const Cube& r : Q.cubes) {
    std::vector<int> el = r.type.elements();
    ColorSet corners[4] = {r.bottom, r.bottom.with(el[0]), r.top(), r.bottom.with(el[1])};
    svg << "  <polygon points=\"";
    for (int k = 0; k < 4; ++k) {
      Xy p = place(corners[k]);
      svg << sx(p.x) << "," << sy(p.y) << (k + 1 < 4 ? " " : "");
    }
    svg << "\" fill=\"#eef3fb\" stroke=\"#2b4a6f\" stroke-width=\"1.5\"/>\n";
  }
  if (n % 2 == 0) {
    Rat yml = 0;
    for (int i = 1; i <= n / 2; ++i) yml += ey[i - 1];
    double y = sy(static_cast<double>(yml));
    svg << "  <line x1=\"0\" y1=\"" << y << "\" x2=\"" << w << "\" y2=\"" << y
        << "\" stroke=\"#b03030\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  }
  if (opts.labels) {
    for (ColorSet v : V.sets) {
      Xy p = place(v);
      svg << "  <text x=\"" << sx(p.x) + 3 << "\" y=\"" << sy(p.y) - 3 << "\" font-size=\""
          << s / 5 << "\" fill=\"#222\">" << set_label(v, n) << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sepsys
