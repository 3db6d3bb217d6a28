#include "sepsys/cubillage.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sepsys {

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void for_each_subset(ColorSet base, int k, const std::function<void(ColorSet)>& fn) {
  std::vector<int> el = base.elements();
  const int n = static_cast<int>(el.size());
  if (k > n) return;
  if (k == 0) {
    fn(ColorSet());
    return;
  }
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

using FacetKey = std::pair<Bits, Bits>;
FacetKey key_of(const Cube& f) { return {f.bottom.bits(), f.type.bits()}; }

}  // namespace

int Cubillage::index_of(const Cube& c) const {
  auto it = std::lower_bound(cubes.begin(), cubes.end(), c, CubeLess{});
  if (it == cubes.end() || !(*it == c)) return -1;
  return static_cast<int>(it - cubes.begin());
}

Collection Cubillage::vertex_set() const {
  std::set<Bits> verts;
  for (const Cube& c : cubes) {
    std::vector<int> el = c.type.elements();
    const int k = static_cast<int>(el.size());
    for (Bits s = 0; s < (Bits{1} << k); ++s) {
      ColorSet v = c.bottom;
      for (int i = 0; i < k; ++i)
        if ((s >> i) & 1u) v = v.with(el[i]);
      verts.insert(v.bits());
    }
  }
  std::vector<ColorSet> out;
  out.reserve(verts.size());
  for (Bits b : verts) out.emplace_back(b);
  return Collection(cfg->ground(), std::move(out));
}

std::string ValidationReport::to_string() const {
  std::string s;
  for (const auto& v : violations) {
    s += v;
    s += '\n';
  }
  return s;
}

Cubillage reconstruct(const Collection& V, int d) {
  const int n = V.ground.n;
  std::vector<Cube> cubes;
  for (ColorSet x : V.sets) {
    ColorSet rest = ColorSet::full(V.ground) - x;
    for_each_subset(rest, d, [&](ColorSet T) {
      std::vector<int> el = T.elements();
      for (Bits s = 1; s < (Bits{1} << d); ++s) {
        ColorSet v = x;
        for (int i = 0; i < d; ++i)
          if ((s >> i) & 1u) v = v.with(el[i]);
        if (!V.contains(v)) return;
      }
      cubes.push_back(Cube{x, T});
    });
  }
  Cubillage Q(make_configuration(n, d), std::move(cubes));
  ValidationReport rep = validate(Q);
  if (!rep.ok())
    throw std::runtime_error("not a cubillage vertex set: " + rep.violations.front());
  if (!(Q.vertex_set() == V))
    throw std::runtime_error("not a cubillage vertex set: reconstructed vertices differ");
  return Q;
}

ValidationReport validate(const Cubillage& Q) {
  ValidationReport rep;
  const int n = Q.n(), d = Q.d();
  for (const Cube& c : Q.cubes) {
    if (!c.bottom.disjoint(c.type))
      rep.violations.push_back("cube " + c.bottom.to_string() + "|" + c.type.to_string() +
                               " has bottom meeting type");
    if (c.type.size() != d) rep.violations.push_back("cube of wrong dimension");
  }
  if (!rep.ok()) return rep;

  std::set<Bits> types;
  for (const Cube& c : Q.cubes) types.insert(c.type.bits());
  if (static_cast<long long>(types.size()) != static_cast<long long>(Q.cubes.size()))
    rep.violations.push_back("type multiplicity: some d-subset type repeats");
  if (static_cast<long long>(Q.cubes.size()) != binom(n, d))
    rep.violations.push_back("cube count " + std::to_string(Q.cubes.size()) + " != C(n,d) = " +
                             std::to_string(binom(n, d)));

  long long expect_verts = 0;
  for (int k = 0; k <= d; ++k) expect_verts += binom(n, k);
  long long got_verts = Q.vertex_set().size();
  if (got_verts != expect_verts)
    rep.violations.push_back("vertex count " + std::to_string(got_verts) + " != " +
                             std::to_string(expect_verts));

  // Facet pairing: every facet shared rear/front by two cubes or on ∂Z.
  std::map<FacetKey, std::pair<int, int>> owners;  // (rear owner, front owner)
  for (int ci = 0; ci < static_cast<int>(Q.cubes.size()); ++ci) {
    const Cube& c = Q.cubes[ci];
    for (int t : c.type.elements()) {
      FacetPair fp = cube_facets(*Q.cfg, c, t);
      auto& rt = owners[key_of(fp.rear)];
      if (rt.first == 0)
        rt.first = ci + 1;
      else
        rep.violations.push_back("facet rear-owned twice");
      auto& ft = owners[key_of(fp.front)];
      if (ft.second == 0)
        ft.second = ci + 1;
      else
        rep.violations.push_back("facet front-owned twice");
    }
  }
  if (!rep.ok()) return rep;
  std::set<FacetKey> fr, re;
  for (const Cube& f : front_facets(*Q.cfg)) fr.insert(key_of(f));
  for (const Cube& f : rear_facets(*Q.cfg)) re.insert(key_of(f));
  for (const auto& [k, own] : owners) {
    const bool has_rear = own.first != 0, has_front = own.second != 0;
    if (has_rear && has_front) continue;  // interior, shared rear/front
    if (has_front && fr.count(k)) continue;  // on Z^fr
    if (has_rear && re.count(k)) continue;   // on Z^rear
    rep.violations.push_back("facet pairing violated at (" + ColorSet(k.first).to_string() + "|" +
                             ColorSet(k.second).to_string() + ")");
  }
  if (!rep.ok()) return rep;

  CubeOrder ord = natural_order(Q);
  if (!ord.acyclic) rep.violations.push_back("natural order has a directed cycle");
  return rep;
}

Cubillage standard(int n, int d) {
  if (n == d) return Cubillage(make_configuration(n, d), {Cube{ColorSet(), ColorSet::full(GroundSet(n))}});
  return Cubillage(make_configuration(n, d), front_facets(*make_configuration(n, d + 1)));
}

Cubillage antistandard(int n, int d) {
  if (n == d) return Cubillage(make_configuration(n, d), {Cube{ColorSet(), ColorSet::full(GroundSet(n))}});
  return Cubillage(make_configuration(n, d), rear_facets(*make_configuration(n, d + 1)));
}

// ---- capsids ---------------------------------------------------------------

std::vector<Cube> Capsid::filling(bool std_flavor) const {
  const int d = type.size() - 1;
  std::vector<int> p = type.elements();  // p_1 < ... < p_{d+1}
  std::vector<Cube> out;
  out.reserve(d + 1);
  for (int i = 1; i <= d + 1; ++i) {
    ColorSet t = type.without(p[i - 1]);
    const bool lower = std_flavor ? ((d - i) % 2 != 0) : ((d - i) % 2 == 0);
    out.push_back(lower ? Cube{bottom, t} : Cube{bottom.with(p[i - 1]), t});
  }
  std::sort(out.begin(), out.end(), CubeLess{});
  return out;
}

ColorSet Capsid::interior_vertex(bool std_flavor) const {
  const int d = type.size() - 1;
  std::vector<int> p = type.elements();
  ColorSet v = bottom;
  for (int i = 1; i <= d + 1; ++i) {
    const bool pick = std_flavor ? ((d - i) % 2 == 0) : ((d - i) % 2 != 0);
    if (pick) v = v.with(p[i - 1]);
  }
  return v;
}

std::optional<Capsid> capsid_at(const Cubillage& Q, ColorSet bottom, ColorSet type) {
  for (bool flavor : {true, false}) {
    Capsid c{bottom, type, flavor};
    bool all = true;
    for (const Cube& cube : c.filling(flavor))
      if (!Q.has_cube(cube)) {
        all = false;
        break;
      }
    if (all) return c;
  }
  return std::nullopt;
}

std::vector<Capsid> find_capsids(const Cubillage& Q) {
  const int n = Q.n(), d = Q.d();
  std::vector<Capsid> out;
  if (d + 1 > n) return out;
  std::set<Bits> bottoms;
  for (const Cube& c : Q.cubes) bottoms.insert(c.bottom.bits());
  for (Bits xb : bottoms) {
    ColorSet X(xb);
    ColorSet rest = ColorSet::full(GroundSet(n)) - X;
    for_each_subset(rest, d + 1, [&](ColorSet T) {
      if (auto c = capsid_at(Q, X, T)) out.push_back(*c);
    });
  }
  std::sort(out.begin(), out.end(), [](const Capsid& a, const Capsid& b) {
    return cube_less(Cube{a.bottom, a.type}, Cube{b.bottom, b.type});
  });
  return out;
}

Cubillage capsid_flip(const Cubillage& Q, const Capsid& c, Direction dir) {
  const bool need_standard = (dir == Direction::raising);
  std::vector<Cube> from = c.filling(need_standard);
  for (const Cube& cube : from)
    if (!Q.has_cube(cube))
      throw std::invalid_argument("capsid_flip: flavor mismatch or stale capsid");
  std::vector<Cube> to = c.filling(!need_standard);
  std::vector<Cube> cubes;
  cubes.reserve(Q.cubes.size());
  for (const Cube& cube : Q.cubes)
    if (!std::binary_search(from.begin(), from.end(), cube, CubeLess{})) cubes.push_back(cube);
  cubes.insert(cubes.end(), to.begin(), to.end());
  return Cubillage(Q.cfg, std::move(cubes));
}

// ---- natural order ---------------------------------------------------------

namespace {

CubeOrder build_order(const Cubillage& Q, bool along_first_coord) {
  const int N = static_cast<int>(Q.cubes.size());
  CubeOrder ord;
  ord.succ.assign(N, {});
  ord.pred.assign(N, {});
  std::map<FacetKey, int> gives, takes;  // rear/up owner, front/low owner
  for (int ci = 0; ci < N; ++ci) {
    const Cube& c = Q.cubes[ci];
    for (int t : c.type.elements()) {
      Cube give, take;
      if (along_first_coord) {
        UpLowPair ul = cube_facets_updown(*Q.cfg, c, t);
        give = ul.up;
        take = ul.low;
      } else {
        FacetPair fp = cube_facets(*Q.cfg, c, t);
        give = fp.rear;
        take = fp.front;
      }
      gives[key_of(give)] = ci;
      takes[key_of(take)] = ci;
    }
  }
  for (const auto& [k, u] : gives) {
    auto it = takes.find(k);
    if (it == takes.end()) continue;
    ord.succ[u].push_back(it->second);
    ord.pred[it->second].push_back(u);
  }
  // Kahn topological sort; smallest available index first for determinism.
  std::vector<int> indeg(N, 0);
  for (int v = 0; v < N; ++v) indeg[v] = static_cast<int>(ord.pred[v].size());
  std::set<int> ready;
  for (int v = 0; v < N; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    ord.topo.push_back(v);
    for (int w : ord.succ[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (static_cast<int>(ord.topo.size()) != N) {
    ord.acyclic = false;
    ord.topo.clear();
  }
  return ord;
}

}  // namespace

bool CubeOrder::is_ideal(const std::vector<char>& in) const {
  for (int v = 0; v < static_cast<int>(in.size()); ++v)
    if (in[v])
      for (int u : pred[v])
        if (!in[u]) return false;
  return true;
}

CubeOrder natural_order(const Cubillage& Q) {
  CubeOrder ord = build_order(Q, false);
  if (!ord.acyclic) throw std::runtime_error("natural_order: directed cycle (invalid cubillage)");
  return ord;
}

CubeOrder zero_order(const Cubillage& Q) {
  CubeOrder ord = build_order(Q, true);
  if (!ord.acyclic) throw std::runtime_error("zero_order: directed cycle (invalid cubillage)");
  return ord;
}

// ---- membranes -------------------------------------------------------------

Membrane membrane_from_ideal(const Cubillage& Q, std::vector<int> ideal) {
  std::sort(ideal.begin(), ideal.end());
  CubeOrder ord = natural_order(Q);
  std::vector<char> in(Q.cubes.size(), 0);
  for (int i : ideal) in.at(i) = 1;
  if (!ord.is_ideal(in)) throw std::invalid_argument("membrane_from_ideal: not an ideal");
  return Membrane{Q, std::move(ideal)};
}

std::vector<Cube> Membrane::facets() const {
  std::vector<char> in(host.cubes.size(), 0);
  for (int i : ideal) in[i] = 1;
  std::map<FacetKey, int> front_owner, rear_owner;
  std::map<FacetKey, Cube> by_key;
  for (int ci = 0; ci < static_cast<int>(host.cubes.size()); ++ci) {
    const Cube& c = host.cubes[ci];
    for (int t : c.type.elements()) {
      FacetPair fp = cube_facets(*host.cfg, c, t);
      front_owner[key_of(fp.front)] = ci + 1;
      rear_owner[key_of(fp.rear)] = ci + 1;
      by_key[key_of(fp.front)] = fp.front;
      by_key[key_of(fp.rear)] = fp.rear;
    }
  }
  std::vector<Cube> out;
  for (const auto& [k, f] : by_key) {
    const int fo = front_owner.count(k) ? front_owner[k] : 0;
    const int ro = rear_owner.count(k) ? rear_owner[k] : 0;
    bool in_m = false;
    if (ro && fo)
      in_m = in[ro - 1] && !in[fo - 1];  // section between ideal and complement
    else if (fo)
      in_m = !in[fo - 1];  // on Z^fr, exposed iff its cube is not in the ideal
    else if (ro)
      in_m = in[ro - 1];  // on Z^rear, covered iff its cube is in the ideal
    if (in_m) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), CubeLess{});
  return out;
}

Cubillage Membrane::project() const {
  if (host.d() < 2) throw std::invalid_argument("Membrane::project: host dimension < 2");
  return Cubillage(make_configuration(host.n(), host.d() - 1), facets());
}

std::vector<ColorSet> Membrane::inversions() const {
  std::vector<ColorSet> out;
  out.reserve(ideal.size());
  for (int i : ideal) out.push_back(host.cubes[i].type);
  std::sort(out.begin(), out.end(), ColorSetLess{});
  return out;
}

std::vector<Membrane> membranes(const Cubillage& Q, std::size_t cap) {
  CubeOrder ord = natural_order(Q);
  const int N = static_cast<int>(Q.cubes.size());
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> queue;
  std::vector<char> empty(N, 0);
  seen.insert(empty);
  queue.push_back(empty);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<char> cur = queue[qi];
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
      if (seen.insert(nxt).second) {
        queue.push_back(std::move(nxt));
        if (seen.size() > cap) throw std::runtime_error("membranes: cap exceeded");
      }
    }
  }
  std::vector<Membrane> out;
  out.reserve(seen.size());
  for (const auto& flags : seen) {
    std::vector<int> ideal;
    for (int v = 0; v < N; ++v)
      if (flags[v]) ideal.push_back(v);
    out.push_back(Membrane{Q, std::move(ideal)});
  }
  std::sort(out.begin(), out.end(), [](const Membrane& a, const Membrane& b) {
    if (a.ideal.size() != b.ideal.size()) return a.ideal.size() < b.ideal.size();
    return a.ideal < b.ideal;
  });
  return out;
}

Membrane membrane_meet(const Membrane& a, const Membrane& b) {
  if (!(a.host == b.host)) throw std::invalid_argument("membrane_meet: different hosts");
  std::vector<int> ideal;
  std::set_intersection(a.ideal.begin(), a.ideal.end(), b.ideal.begin(), b.ideal.end(),
                        std::back_inserter(ideal));
  return Membrane{a.host, std::move(ideal)};
}

Membrane membrane_join(const Membrane& a, const Membrane& b) {
  if (!(a.host == b.host)) throw std::invalid_argument("membrane_join: different hosts");
  std::vector<int> ideal;
  std::set_union(a.ideal.begin(), a.ideal.end(), b.ideal.begin(), b.ideal.end(),
                 std::back_inserter(ideal));
  return Membrane{a.host, std::move(ideal)};
}

std::vector<Cube> lift_facets(const Cubillage& Q) { return Q.cubes; }

// ---- hosting a membrane ------------------------------------------------------

namespace {

// Sweeps the membrane toward Z'^fr (toward_front) or Z'^rear, emitting the
// crossed cubes in lexicographic (X|T) order.
std::vector<Cube> sweep_membrane(const Cubillage& Q, bool toward_front) {
  const int n = Q.n(), d1 = Q.d() + 1;
  CfgPtr cfg = make_configuration(n, d1);
  std::set<Cube, CubeLess> current(Q.cubes.begin(), Q.cubes.end());
  std::vector<Cube> target_v = toward_front ? front_facets(*cfg) : rear_facets(*cfg);
  std::set<Cube, CubeLess> target(target_v.begin(), target_v.end());
  std::vector<Cube> out;
  long long guard = binom(n, d1) + 1;
  while (current != target) {
    if (--guard < 0) throw std::runtime_error("extend_to_cubillage: no progress (not a membrane)");
    std::optional<Cube> best;
    std::set<Cube, CubeLess> tried;
    for (const Cube& f : current) {
      for (int t = 1; t <= n; ++t) {
        if (f.type.contains(t)) continue;
        ColorSet S = f.type;
        int s = cfg->dot_sign(S, t);
        // When sweeping toward the front we cross cubes whose rear side lies
        // on the membrane; toward the rear, cubes whose front side does.
        const bool bottom_side = toward_front ? (s > 0) : (s < 0);
        ColorSet X;
        if (bottom_side) {
          if (f.bottom.contains(t)) continue;
          X = f.bottom;
        } else {
          if (!f.bottom.contains(t)) continue;
          X = f.bottom.without(t);
        }
        Cube cand{X, S.with(t)};
        if (!X.disjoint(cand.type)) continue;
        if (!tried.insert(cand).second) continue;
        bool ok = true;
        for (int tt : cand.type.elements()) {
          FacetPair fp = cube_facets(*cfg, cand, tt);
          const Cube& side = toward_front ? fp.rear : fp.front;
          if (!current.count(side)) {
            ok = false;
            break;
          }
        }
        if (ok && (!best || cube_less(cand, *best))) best = cand;
      }
    }
    if (!best) throw std::runtime_error("extend_to_cubillage: stuck (not a membrane)");
    for (int tt : best->type.elements()) {
      FacetPair fp = cube_facets(*cfg, *best, tt);
      const Cube& del = toward_front ? fp.rear : fp.front;
      const Cube& add = toward_front ? fp.front : fp.rear;
      current.erase(del);
      current.insert(add);
    }
    out.push_back(*best);
  }
  return out;
}

}  // namespace

std::vector<Cube> fill_before_membrane(const Cubillage& Q) { return sweep_membrane(Q, true); }
std::vector<Cube> fill_after_membrane(const Cubillage& Q) { return sweep_membrane(Q, false); }

HostedMembrane extend_to_cubillage(const Cubillage& Q) {
  std::vector<Cube> before = fill_before_membrane(Q);
  std::vector<Cube> after = fill_after_membrane(Q);
  std::vector<Cube> all = before;
  all.insert(all.end(), after.begin(), after.end());
  Cubillage host(make_configuration(Q.n(), Q.d() + 1), std::move(all));
  ValidationReport rep = validate(host);
  if (!rep.ok())
    throw std::runtime_error("extend_to_cubillage: host invalid: " + rep.violations.front());
  std::vector<int> ideal;
  ideal.reserve(before.size());
  for (const Cube& c : before) ideal.push_back(host.index_of(c));
  std::sort(ideal.begin(), ideal.end());
  // The before-cubes form an ideal and Q is the membrane section.
  Membrane m = membrane_from_ideal(host, ideal);
  if (!(m.facets() == Q.cubes))
    throw std::runtime_error("extend_to_cubillage: membrane section mismatch");
  return HostedMembrane{std::move(host), std::move(ideal)};
}

// ---- 0-contraction / 0-expansion --------------------------------------------

namespace {

ColorSet drop_relabel(ColorSet s, int z) {  // [n]-{z} -> [n-1]
  ColorSet out;
  for (int c : s.elements()) out = out.with(c < z ? c : c - 1);
  return out;
}

ColorSet insert_relabel(ColorSet s, int z) {  // [n-1] -> [n]-{z}
  ColorSet out;
  for (int c : s.elements()) out = out.with(c < z ? c : c + 1);
  return out;
}

}  // namespace

std::vector<Cube> zero_membrane_facets(const Cubillage& Qp, const std::vector<int>& below) {
  std::vector<char> in(Qp.cubes.size(), 0);
  for (int i : below) in.at(i) = 1;
  std::map<FacetKey, int> up_owner, low_owner;
  std::map<FacetKey, Cube> by_key;
  for (int ci = 0; ci < static_cast<int>(Qp.cubes.size()); ++ci) {
    const Cube& c = Qp.cubes[ci];
    for (int t : c.type.elements()) {
      UpLowPair ul = cube_facets_updown(*Qp.cfg, c, t);
      up_owner[key_of(ul.up)] = ci + 1;
      low_owner[key_of(ul.low)] = ci + 1;
      by_key[key_of(ul.up)] = ul.up;
      by_key[key_of(ul.low)] = ul.low;
    }
  }
  std::vector<Cube> out;
  for (const auto& [k, f] : by_key) {
    const int uo = up_owner.count(k) ? up_owner[k] : 0;
    const int lo = low_owner.count(k) ? low_owner[k] : 0;
    bool in_m = false;
    if (uo && lo)
      in_m = in[uo - 1] && !in[lo - 1];
    else if (lo)
      in_m = !in[lo - 1];  // on Z'^low
    else if (uo)
      in_m = in[uo - 1];  // on Z'^up
    if (in_m) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), CubeLess{});
  return out;
}

ZeroMembrane zero_membrane_from_below(const Cubillage& Qp, std::vector<int> below) {
  std::sort(below.begin(), below.end());
  CubeOrder ord = zero_order(Qp);
  std::vector<char> in(Qp.cubes.size(), 0);
  for (int i : below) in.at(i) = 1;
  if (!ord.is_ideal(in)) throw std::invalid_argument("zero membrane: below-set not a 0-ideal");
  ZeroMembrane m;
  m.facets = zero_membrane_facets(Qp, below);
  m.below = std::move(below);
  return m;
}

ZeroContraction zero_contract(const Cubillage& Q) {
  const int n = Q.n(), d = Q.d();
  if (n % 2 == 0) throw std::invalid_argument("zero_contract: n must be odd");
  const int z = (n + 1) / 2;  // the self-complementary color, t_z = 0
  std::vector<Cube> below_cubes, above_cubes, facets;
  for (const Cube& c : Q.cubes) {
    if (c.type.contains(z)) {
      facets.push_back(Cube{drop_relabel(c.bottom, z), drop_relabel(c.type.without(z), z)});
    } else if (c.bottom.contains(z)) {
      above_cubes.push_back(Cube{drop_relabel(c.bottom.without(z), z), drop_relabel(c.type, z)});
    } else {
      below_cubes.push_back(Cube{drop_relabel(c.bottom, z), drop_relabel(c.type, z)});
    }
  }
  std::vector<Cube> all = below_cubes;
  all.insert(all.end(), above_cubes.begin(), above_cubes.end());
  Cubillage Qp(make_configuration(n - 1, d), std::move(all));
  ValidationReport rep = validate(Qp);
  if (!rep.ok()) throw std::runtime_error("zero_contract: result invalid: " + rep.violations.front());
  std::vector<int> below;
  for (const Cube& c : below_cubes) below.push_back(Qp.index_of(c));
  ZeroMembrane m = zero_membrane_from_below(Qp, std::move(below));
  std::sort(facets.begin(), facets.end(), CubeLess{});
  if (!(m.facets == facets))
    throw std::runtime_error("zero_contract: shrunk facets disagree with 0-membrane section");
  return ZeroContraction{std::move(Qp), std::move(m)};
}

Cubillage zero_expand(const Cubillage& Qp, const ZeroMembrane& M0) {
  const int np = Qp.n(), d = Qp.d();
  if (np % 2 != 0) throw std::invalid_argument("zero_expand: host must have an even ground set");
  const int n = np + 1, z = (n + 1) / 2;
  std::vector<Cube> check = zero_membrane_facets(Qp, M0.below);
  if (!(check == M0.facets)) throw std::runtime_error("zero_expand: invalid 0-membrane");
  std::vector<char> in(Qp.cubes.size(), 0);
  for (int i : M0.below) in.at(i) = 1;
  std::vector<Cube> cubes;
  for (int ci = 0; ci < static_cast<int>(Qp.cubes.size()); ++ci) {
    const Cube& c = Qp.cubes[ci];
    ColorSet bot = insert_relabel(c.bottom, z);
    if (!in[ci]) bot = bot.with(z);
    cubes.push_back(Cube{bot, insert_relabel(c.type, z)});
  }
  for (const Cube& f : M0.facets)
    cubes.push_back(Cube{insert_relabel(f.bottom, z), insert_relabel(f.type, z).with(z)});
  Cubillage Q(make_configuration(n, d), std::move(cubes));
  ValidationReport rep = validate(Q);
  if (!rep.ok()) throw std::runtime_error("zero_expand: invalid 0-membrane: " + rep.violations.front());
  return Q;
}

// ---- barrels ------------------------------------------------------------------

std::vector<Barrel> find_barrels(const Cubillage& Q) {
  const int n = Q.n(), d = Q.d();
  std::vector<Barrel> out;
  if (n < d + 2) return out;
  const long long want = binom(d + 2, d);
  for_each_subset(ColorSet::full(GroundSet(n)), d + 2, [&](ColorSet Tt) {
    std::map<Bits, std::vector<int>> buckets;  // bottom X̃ -> cube indices
    for (int ci = 0; ci < static_cast<int>(Q.cubes.size()); ++ci) {
      const Cube& c = Q.cubes[ci];
      if (!c.type.subset_of(Tt)) continue;
      buckets[(c.bottom - Tt).bits()].push_back(ci);
    }
    for (const auto& [xb, idxs] : buckets) {
      if (static_cast<long long>(idxs.size()) != want) continue;
      std::set<Bits> types;
      for (int ci : idxs) types.insert(Q.cubes[ci].type.bits());
      if (static_cast<long long>(types.size()) != want) continue;
      out.push_back(Barrel{ColorSet(xb), Tt, idxs});
    }
  });
  std::sort(out.begin(), out.end(), [](const Barrel& a, const Barrel& b) {
    return cube_less(Cube{a.bottom, a.type}, Cube{b.bottom, b.type});
  });
  return out;
}

std::optional<Barrel> barrel_at(const Cubillage& Q, ColorSet bottom, ColorSet type) {
  const int d = Q.d();
  const long long want = binom(d + 2, d);
  std::vector<int> idxs;
  for (int ci = 0; ci < static_cast<int>(Q.cubes.size()); ++ci) {
    const Cube& c = Q.cubes[ci];
    if (!c.type.subset_of(type)) continue;
    if ((c.bottom - type) == bottom && bottom.subset_of(c.bottom)) idxs.push_back(ci);
  }
  if (static_cast<long long>(idxs.size()) != want) return std::nullopt;
  std::set<Bits> types;
  for (int ci : idxs) types.insert(Q.cubes[ci].type.bits());
  if (static_cast<long long>(types.size()) != want) return std::nullopt;
  return Barrel{bottom, type, idxs};
}

}  // namespace sepsys
