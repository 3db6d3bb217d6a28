#include "sepsys/symmetry.hpp"

#include <map>
#include <mutex>
#include <set>

namespace sepsys {

Cube star_face(const Cube& f, const GroundSet& g) {
  if (!f.bottom.disjoint(f.type)) throw std::invalid_argument("star_face: X meets T");
  return Cube{star(f.bottom | f.type, g), mirror(f.type, g)};
}

Cubillage star_cubillage(const Cubillage& Q) {
  const GroundSet& g = Q.cfg->ground();
  std::vector<Cube> cubes;
  cubes.reserve(Q.cubes.size());
  for (const Cube& c : Q.cubes) cubes.push_back(star_face(c, g));
  return Cubillage(Q.cfg, std::move(cubes));
}

bool is_symmetric_cubillage(const Cubillage& Q) { return star_cubillage(Q) == Q; }

bool faces_star_closed(const Cubillage& Q) {
  const GroundSet& g = Q.cfg->ground();
  for (const Cube& c : Q.cubes)
    if (!Q.has_cube(star_face(c, g))) return false;
  return is_symmetric(Q.vertex_set());
}

Capsid star_capsid(const Capsid& c, const GroundSet& g) {
  Cube s = star_face(Cube{c.bottom, c.type}, g);
  return Capsid{s.bottom, s.type, c.standard_filling};
}

// ---- symmetric flips ---------------------------------------------------------

namespace {

Direction own_direction(const Capsid& c) {
  return c.standard_filling ? Direction::raising : Direction::lowering;
}

std::vector<Cube> shared_cubes(const Capsid& a, const Capsid& b) {
  std::vector<Cube> fa = a.filling(), fb = b.filling(), out;
  std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(out),
                        CubeLess{});
  return out;
}

Capsid resolve_partner(const Cubillage& Q, const Capsid& c) {
  const GroundSet& g = Q.cfg->ground();
  Cube s = star_face(Cube{c.bottom, c.type}, g);
  auto p = capsid_at(Q, s.bottom, s.type);
  if (!p)
    throw std::logic_error("symmetric flip: star capsid missing (cubillage not symmetric?)");
  return *p;
}

bool capsid_label_less(const Capsid& a, const Capsid& b) {
  return cube_less(Cube{a.bottom, a.type}, Cube{b.bottom, b.type});
}

}  // namespace

Cubillage symmetric_capsid_flip(const Cubillage& Q, const Capsid& c, Direction dir) {
  if (Q.n() % 2 != 0 || Q.d() % 2 == 0)
    throw std::invalid_argument("symmetric_capsid_flip: needs n even, d odd");
  Capsid site = c;
  auto found = capsid_at(Q, c.bottom, c.type);
  if (!found) throw std::invalid_argument("symmetric_capsid_flip: stale capsid");
  site.standard_filling = found->standard_filling;
  if (own_direction(site) != dir)
    throw std::invalid_argument("symmetric_capsid_flip: flavor mismatch for direction");
  Capsid partner = resolve_partner(Q, site);
  if (partner.standard_filling != site.standard_filling)
    throw std::logic_error("symmetric_capsid_flip: star capsid has opposite flavor (d odd)");
  if (partner.bottom == site.bottom && partner.type == site.type)
    return capsid_flip(Q, site, dir);  // central flip
  if (!shared_cubes(site, partner).empty())
    throw std::logic_error("symmetric_capsid_flip: distinct star capsids share cubes (d odd)");
  Cubillage mid = capsid_flip(Q, site, dir);
  return capsid_flip(mid, partner, dir);
}

std::vector<SymmetricMove> symmetric_flip_sites_odd_d(const Cubillage& Q) {
  if (Q.n() % 2 != 0 || Q.d() % 2 == 0)
    throw std::invalid_argument("symmetric_flip_sites_odd_d: needs n even, d odd");
  std::vector<SymmetricMove> out;
  std::set<std::pair<Bits, Bits>> seen;
  for (const Capsid& c : find_capsids(Q)) {
    Capsid partner = resolve_partner(Q, c);
    if (partner.standard_filling != c.standard_filling)
      throw std::logic_error("symmetric sites: star capsid flavor differs (d odd)");
    const Capsid& rep = capsid_label_less(c, partner) ? c : partner;
    if (!seen.insert({rep.bottom.bits(), rep.type.bits()}).second) continue;
    SymmetricMove mv;
    mv.site = rep;
    mv.dir = own_direction(rep);
    if (partner.bottom == c.bottom && partner.type == c.type) {
      mv.kind = SymmetricMove::Kind::central;
    } else {
      if (!shared_cubes(c, partner).empty())
        throw std::logic_error("symmetric sites: star pair shares cubes (d odd)");
      mv.kind = SymmetricMove::Kind::double_capsid;
      mv.partner = capsid_label_less(c, partner) ? partner : c;
    }
    out.push_back(std::move(mv));
  }
  return out;
}

std::vector<SymmetricMove> symmetric_flip_sites_even_d(const Cubillage& Q) {
  if (Q.n() % 2 != 0 || Q.d() % 2 != 0)
    throw std::invalid_argument("symmetric_flip_sites_even_d: needs n even, d even");
  const GroundSet& g = Q.cfg->ground();
  std::vector<SymmetricMove> out;
  std::set<std::pair<Bits, Bits>> seen_pair, seen_barrel;
  for (const Capsid& c : find_capsids(Q)) {
    Capsid partner = resolve_partner(Q, c);
    if (partner.standard_filling == c.standard_filling)
      throw std::logic_error("symmetric sites: star capsid flavor equal (d even)");
    const Capsid& rep = capsid_label_less(c, partner) ? c : partner;
    if (!seen_pair.insert({rep.bottom.bits(), rep.type.bits()}).second) continue;
    std::vector<Cube> common = shared_cubes(c, partner);
    if (common.empty()) {
      SymmetricMove mv;
      mv.kind = SymmetricMove::Kind::double_capsid;
      mv.site = rep;
      mv.partner = capsid_label_less(c, partner) ? partner : c;
      mv.dir = own_direction(rep);
      out.push_back(std::move(mv));
    } else if (common.size() == 1) {
      ColorSet Tt = c.type | partner.type;
      if (!(mirror(Tt, g) == Tt)) throw std::logic_error("symmetric sites: T∪T° not symmetric");
      ColorSet Xt = c.bottom.size() <= partner.bottom.size() ? c.bottom : partner.bottom;
      if (!Xt.disjoint(Tt)) throw std::logic_error("symmetric sites: barrel bottom meets type");
      if (auto b = barrel_at(Q, Xt, Tt)) {
        if (seen_barrel.insert({Xt.bits(), Tt.bits()}).second) {
          SymmetricMove mv;
          mv.kind = SymmetricMove::Kind::barrel;
          mv.site = rep;
          mv.barrel_site = *b;
          out.push_back(std::move(mv));
        }
      }
    } else {
      throw std::logic_error("symmetric sites: star pair shares more than one cube");
    }
  }
  return out;
}

std::vector<SymmetricMove> symmetric_flip_sites_odd_n(const Cubillage& Q) {
  if (Q.n() % 2 == 0 || Q.d() % 2 == 0)
    throw std::invalid_argument("symmetric_flip_sites_odd_n: needs n odd, d odd");
  const GroundSet& g = Q.cfg->ground();
  std::vector<SymmetricMove> out;
  std::set<std::pair<Bits, Bits>> seen_pair, seen_barrel;
  for (const Capsid& c : find_capsids(Q)) {
    Capsid partner = resolve_partner(Q, c);
    if (partner.standard_filling != c.standard_filling)
      throw std::logic_error("symmetric sites: star capsid flavor differs (n odd, d odd)");
    if (partner.bottom == c.bottom && partner.type == c.type)
      throw std::logic_error("symmetric sites: self-symmetric capsid with n odd");
    const Capsid& rep = capsid_label_less(c, partner) ? c : partner;
    if (!seen_pair.insert({rep.bottom.bits(), rep.type.bits()}).second) continue;
    std::vector<Cube> common = shared_cubes(c, partner);
    if (common.empty()) {
      SymmetricMove mv;
      mv.kind = SymmetricMove::Kind::double_capsid;
      mv.site = rep;
      mv.partner = capsid_label_less(c, partner) ? partner : c;
      mv.dir = own_direction(rep);
      out.push_back(std::move(mv));
    } else if (common.size() == 1) {
      ColorSet Tt = c.type | partner.type;
      ColorSet Xt = c.bottom.size() <= partner.bottom.size() ? c.bottom : partner.bottom;
      if (!(mirror(Tt, g) == Tt) || !Xt.disjoint(Tt))
        throw std::logic_error("symmetric sites: malformed barrel candidate");
      if (auto b = barrel_at(Q, Xt, Tt)) {
        if (seen_barrel.insert({Xt.bits(), Tt.bits()}).second) {
          SymmetricMove mv;
          mv.kind = SymmetricMove::Kind::barrel;
          mv.site = rep;
          mv.barrel_site = *b;
          mv.dir = own_direction(rep);  // the mirror flip removes this flavor's capsids
          out.push_back(std::move(mv));
        }
      }
    } else {
      throw std::logic_error("symmetric sites: star pair shares more than one cube");
    }
  }
  return out;
}

// Template fillings of Z(d+2, d): the projections of the unique symmetric
// membranes of the two cubillages of Z(d+2, d+1).
namespace {

std::pair<std::vector<Cube>, std::vector<Cube>> barrel_templates(int d) {
  static std::map<int, std::pair<std::vector<Cube>, std::vector<Cube>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Membrane m1 = symmetric_membrane(standard(d + 2, d + 1));
  Membrane m2 = symmetric_membrane(antistandard(d + 2, d + 1));
  auto pair = std::make_pair(m1.facets(), m2.facets());
  cache[d] = pair;
  return pair;
}

ColorSet map_colors(ColorSet s, const std::vector<int>& to) {
  ColorSet out;
  for (int c : s.elements()) out = out.with(to[c - 1]);
  return out;
}

}  // namespace

std::pair<std::vector<Cube>, std::vector<Cube>> symmetric_barrel_fillings(const Cubillage& Q,
                                                                          const Barrel& b) {
  auto [t1, t2] = barrel_templates(Q.d());
  std::vector<int> to = b.type.elements();  // template color k -> k-th smallest of T̃
  auto instantiate = [&](const std::vector<Cube>& tmpl) {
    std::vector<Cube> out;
    out.reserve(tmpl.size());
    for (const Cube& c : tmpl)
      out.push_back(Cube{b.bottom | map_colors(c.bottom, to), map_colors(c.type, to)});
    std::sort(out.begin(), out.end(), CubeLess{});
    return out;
  };
  return {instantiate(t1), instantiate(t2)};
}

namespace {

Cubillage replace_cubes(const Cubillage& Q, const std::vector<int>& old_indices,
                        const std::vector<Cube>& new_cubes) {
  std::vector<char> drop(Q.cubes.size(), 0);
  for (int i : old_indices) drop.at(i) = 1;
  std::vector<Cube> cubes;
  cubes.reserve(Q.cubes.size());
  for (int i = 0; i < static_cast<int>(Q.cubes.size()); ++i)
    if (!drop[i]) cubes.push_back(Q.cubes[i]);
  cubes.insert(cubes.end(), new_cubes.begin(), new_cubes.end());
  return Cubillage(Q.cfg, std::move(cubes));
}

Cubillage apply_barrel_even_n(const Cubillage& Q, const Barrel& b) {
  auto [f1, f2] = symmetric_barrel_fillings(Q, b);
  std::vector<Cube> current;
  for (int i : b.cube_indices) current.push_back(Q.cubes[i]);
  std::sort(current.begin(), current.end(), CubeLess{});
  const std::vector<Cube>* other = nullptr;
  if (current == f1)
    other = &f2;
  else if (current == f2)
    other = &f1;
  else
    throw std::logic_error("barrel flip: current filling is not one of the symmetric pair");
  return replace_cubes(Q, b.cube_indices, *other);
}

Cubillage apply_barrel_odd_n(const Cubillage& Q, const Barrel& b) {
  const GroundSet& g = Q.cfg->ground();
  std::vector<Cube> mirrored;
  for (int i : b.cube_indices) {
    const Cube& c = Q.cubes[i];
    mirrored.push_back(Cube{b.bottom | mirror(c.bottom - b.bottom, g), mirror(c.type, g)});
  }
  return replace_cubes(Q, b.cube_indices, mirrored);
}

}  // namespace

Cubillage apply_move(const Cubillage& Q, const SymmetricMove& mv) {
  switch (mv.kind) {
    case SymmetricMove::Kind::central: {
      auto found = capsid_at(Q, mv.site.bottom, mv.site.type);
      if (!found || found->standard_filling != mv.site.standard_filling)
        throw std::invalid_argument("apply_move: stale central site");
      return capsid_flip(Q, mv.site, own_direction(mv.site));
    }
    case SymmetricMove::Kind::double_capsid: {
      if (!mv.partner) throw std::invalid_argument("apply_move: double move without partner");
      auto f1 = capsid_at(Q, mv.site.bottom, mv.site.type);
      auto f2 = capsid_at(Q, mv.partner->bottom, mv.partner->type);
      if (!f1 || !f2 || f1->standard_filling != mv.site.standard_filling ||
          f2->standard_filling != mv.partner->standard_filling)
        throw std::invalid_argument("apply_move: stale double site");
      Cubillage mid = capsid_flip(Q, mv.site, own_direction(mv.site));
      return capsid_flip(mid, *mv.partner, own_direction(*mv.partner));
    }
    case SymmetricMove::Kind::barrel: {
      if (!mv.barrel_site) throw std::invalid_argument("apply_move: barrel move without barrel");
      auto fresh = barrel_at(Q, mv.barrel_site->bottom, mv.barrel_site->type);
      if (!fresh) throw std::invalid_argument("apply_move: stale barrel site");
      return Q.n() % 2 == 0 ? apply_barrel_even_n(Q, *fresh) : apply_barrel_odd_n(Q, *fresh);
    }
  }
  throw std::logic_error("apply_move: unknown kind");
}

// ---- star on ideals ------------------------------------------------------------

std::vector<int> star_ideal(const Cubillage& Q, const std::vector<int>& ideal) {
  const GroundSet& g = Q.cfg->ground();
  std::vector<char> in(Q.cubes.size(), 0);
  for (int i : ideal) in.at(i) = 1;
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(Q.cubes.size()); ++i) {
    // d odd: star swaps front and rear, so the image ideal is the star of
    // the complement; d even: star preserves the sides.
    const bool take = (Q.d() % 2 != 0) ? !in[i] : in[i];
    if (!take) continue;
    int j = Q.index_of(star_face(Q.cubes[i], g));
    if (j < 0) throw std::invalid_argument("star_ideal: cubillage not symmetric");
    out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_symmetric_ideal(const Cubillage& Q, const std::vector<int>& ideal) {
  std::vector<int> sorted = ideal;
  std::sort(sorted.begin(), sorted.end());
  return star_ideal(Q, sorted) == sorted;
}

// ---- Theorem: a symmetric cubillage contains a symmetric membrane ---------------

Membrane symmetric_membrane(const Cubillage& Q) {
  if (Q.n() % 2 != 0) throw std::invalid_argument("symmetric_membrane: n must be even");
  if (!is_symmetric_cubillage(Q))
    throw std::invalid_argument("symmetric_membrane: cubillage not symmetric");
  if (Q.d() % 2 == 0) return membrane_from_ideal(Q, {});  // front side, self-symmetric

  const GroundSet& g = Q.cfg->ground();
  CubeOrder ord = natural_order(Q);
  const int N = static_cast<int>(Q.cubes.size());
  std::vector<int> star_of(N);
  for (int i = 0; i < N; ++i) {
    star_of[i] = Q.index_of(star_face(Q.cubes[i], g));
    if (star_of[i] < 0) throw std::logic_error("symmetric_membrane: star cube missing");
  }
  std::vector<char> in(N, 0), in_star(N, 1);  // ideals of M and M*
  int guard = N + 1;
  while (true) {
    if (--guard < 0) throw std::logic_error("symmetric_membrane: no convergence");
    int chosen = -1;
    for (int v = 0; v < N; ++v) {
      if (in[v] || !in_star[v]) continue;  // gap = Q(M*) - Q(M)
      bool minimal = true;
      for (int u : ord.pred[v])
        if (!in[u] && in_star[u]) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      if (chosen < 0 || cube_less(Q.cubes[v], Q.cubes[chosen])) chosen = v;
    }
    if (chosen < 0) break;  // gap empty
    const int cs = star_of[chosen];
    if (cs == chosen) throw std::logic_error("symmetric_membrane: self-symmetric cube (d odd)");
    if (in[cs]) throw std::logic_error("symmetric_membrane: invariant broken");
    in[chosen] = 1;
    in_star[cs] = 0;
  }
  if (in != in_star) throw std::logic_error("symmetric_membrane: ideals did not meet");
  std::vector<int> ideal;
  for (int v = 0; v < N; ++v)
    if (in[v]) ideal.push_back(v);
  Membrane m = membrane_from_ideal(Q, std::move(ideal));
  if (!is_symmetric_ideal(Q, m.ideal))
    throw std::logic_error("symmetric_membrane: result not self-symmetric");
  return m;
}

// ---- Theorem: a symmetric cubillage lifts into a symmetric host ------------------

namespace {

// Drives Q to the standard (lowering) or anti-standard (raising) end by
// symmetric capsid flips, collecting the lift cube of every flip.
std::vector<Cube> sweep_symmetric(Cubillage Q, Direction dir) {
  std::vector<Cube> emitted;
  const long long cap = 2 + (1LL << std::min(Q.n(), 24));
  for (long long step = 0; step <= cap; ++step) {
    std::vector<SymmetricMove> sites = symmetric_flip_sites_odd_d(Q);
    const SymmetricMove* pick = nullptr;
    for (const auto& mv : sites) {
      if (mv.dir != dir) continue;
      if (!pick || capsid_label_less(mv.site, pick->site)) pick = &mv;
    }
    if (!pick) {
      Cubillage end =
          dir == Direction::lowering ? standard(Q.n(), Q.d()) : antistandard(Q.n(), Q.d());
      if (!(Q == end)) throw std::logic_error("symmetric sweep: stuck before reaching the end");
      return emitted;
    }
    emitted.push_back(Cube{pick->site.bottom, pick->site.type});
    if (pick->partner) emitted.push_back(Cube{pick->partner->bottom, pick->partner->type});
    Q = apply_move(Q, *pick);
  }
  throw std::logic_error("symmetric sweep: step cap exceeded");
}

}  // namespace

SymmetricLift symmetric_lift(const Cubillage& Q) {
  if (Q.n() % 2 != 0) throw std::invalid_argument("symmetric_lift: n must be even");
  if (!is_symmetric_cubillage(Q))
    throw std::invalid_argument("symmetric_lift: cubillage not symmetric");
  const int n = Q.n(), d = Q.d();
  const GroundSet& g = Q.cfg->ground();
  std::vector<Cube> before, after;
  if ((d + 1) % 2 != 0) {
    // d+1 odd: fill before M deterministically, mirror that half by star.
    before = fill_before_membrane(Q);
    for (const Cube& c : before) after.push_back(star_face(c, g));
  } else {
    // d+1 even, d odd: symmetric lowering flips sweep out the before-region.
    before = sweep_symmetric(Q, Direction::lowering);
    after = sweep_symmetric(Q, Direction::raising);
  }
  std::vector<Cube> all = before;
  all.insert(all.end(), after.begin(), after.end());
  Cubillage host(make_configuration(n, d + 1), std::move(all));
  ValidationReport rep = validate(host);
  if (!rep.ok()) throw std::logic_error("symmetric_lift: host invalid: " + rep.violations.front());
  if (!is_symmetric_cubillage(host)) throw std::logic_error("symmetric_lift: host not symmetric");
  std::vector<int> ideal;
  for (const Cube& c : before) ideal.push_back(host.index_of(c));
  std::sort(ideal.begin(), ideal.end());
  Membrane m = membrane_from_ideal(host, ideal);
  if (!(m.facets() == Q.cubes)) throw std::logic_error("symmetric_lift: membrane is not M_Q");
  return SymmetricLift{std::move(host), std::move(ideal)};
}

// ---- Lemma: symmetric 0-membranes (the odd-n construction) ----------------------

ZeroMembrane symmetric_zero_membrane(const Cubillage& Qp) {
  if (Qp.n() % 2 != 0 || Qp.d() % 2 == 0)
    throw std::invalid_argument("symmetric_zero_membrane: needs even ground (n odd) and d odd");
  if (!is_symmetric_cubillage(Qp))
    throw std::invalid_argument("symmetric_zero_membrane: cubillage not symmetric");
  const GroundSet& g = Qp.cfg->ground();
  CubeOrder ord = zero_order(Qp);
  const int N = static_cast<int>(Qp.cubes.size());
  std::vector<int> star_of(N);
  for (int i = 0; i < N; ++i) star_of[i] = Qp.index_of(star_face(Qp.cubes[i], g));
  std::vector<char> below(N, 1), below_star(N, 0);  // M = Z'^up, M* = Z'^low
  int guard = N + 1;
  while (true) {
    if (--guard < 0) throw std::logic_error("symmetric_zero_membrane: no convergence");
    int chosen = -1;
    for (int v = 0; v < N; ++v) {
      if (!below[v] || below_star[v]) continue;  // gap = Q'(M) - Q'(M*)
      bool maximal = true;
      for (int w : ord.succ[v])
        if (below[w] && !below_star[w]) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (chosen < 0 || cube_less(Qp.cubes[v], Qp.cubes[chosen])) chosen = v;
    }
    if (chosen < 0) break;
    const int cs = star_of[chosen];
    if (cs == chosen) throw std::logic_error("symmetric_zero_membrane: self-symmetric cube");
    below[chosen] = 0;
    below_star[cs] = 1;
  }
  if (below != below_star) throw std::logic_error("symmetric_zero_membrane: did not converge");
  std::vector<int> b;
  for (int v = 0; v < N; ++v)
    if (below[v]) b.push_back(v);
  ZeroMembrane m = zero_membrane_from_below(Qp, std::move(b));
  std::vector<char> flags(N, 0);
  for (int i : m.below) flags[i] = 1;
  for (int i = 0; i < N; ++i)
    if (flags[i] == flags[star_of[i]])
      throw std::logic_error("symmetric_zero_membrane: result not self-symmetric");
  return m;
}

std::vector<Membrane> symmetric_membranes(const Cubillage& Q) {
  std::vector<Membrane> out;
  for (Membrane& m : membranes(Q))
    if (is_symmetric_ideal(Q, m.ideal)) out.push_back(std::move(m));
  return out;
}

std::vector<ZeroMembrane> symmetric_zero_membranes(const Cubillage& Qp) {
  const GroundSet& g = Qp.cfg->ground();
  CubeOrder ord = zero_order(Qp);
  const int N = static_cast<int>(Qp.cubes.size());
  std::vector<int> star_of(N);
  for (int i = 0; i < N; ++i) {
    star_of[i] = Qp.index_of(star_face(Qp.cubes[i], g));
    if (star_of[i] < 0) throw std::invalid_argument("symmetric_zero_membranes: not symmetric");
  }
  // 0-ideals with C ∈ B ⟺ C* ∉ B, found by BFS over all 0-ideals.
  std::vector<ZeroMembrane> out;
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> queue;
  std::vector<char> empty(N, 0);
  seen.insert(empty);
  queue.push_back(empty);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<char> cur = queue[qi];
    bool symmetric = true;
    for (int v = 0; v < N && symmetric; ++v)
      if (cur[v] == cur[star_of[v]]) symmetric = false;
    if (symmetric) {
      std::vector<int> b;
      for (int v = 0; v < N; ++v)
        if (cur[v]) b.push_back(v);
      out.push_back(zero_membrane_from_below(Qp, std::move(b)));
    }
    for (int v = 0; v < N; ++v) {
      if (cur[v]) continue;
      bool minimal = true;
      for (int u : ord.pred[v])
        if (!cur[u]) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      std::vector<char> nxt = cur;
      nxt[v] = 1;
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ZeroMembrane& a, const ZeroMembrane& b) { return a.below < b.below; });
  return out;
}

}  // namespace sepsys
