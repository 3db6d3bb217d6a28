#include "sepsys/flipgraph.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sepsys {

Family family_from_string(const std::string& s) {
  if (s == "strong") return Family::strong;
  if (s == "weak") return Family::weak;
  if (s == "symmetric-strong") return Family::symmetric_strong;
  if (s == "symmetric-weak") return Family::symmetric_weak;
  if (s == "cubillage") return Family::cubillage;
  if (s == "symmetric-cubillage") return Family::symmetric_cubillage;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::strong: return "strong";
    case Family::weak: return "weak";
    case Family::symmetric_strong: return "symmetric-strong";
    case Family::symmetric_weak: return "symmetric-weak";
    case Family::cubillage: return "cubillage";
    case Family::symmetric_cubillage: return "symmetric-cubillage";
  }
  return "?";
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Collection intervals_collection(int n) {
  GroundSet g(n);
  std::vector<ColorSet> sets{ColorSet{}};
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) sets.push_back(ColorSet::interval(a, b));
  return Collection(g, std::move(sets));
}

std::vector<Bits> coll_key(const Collection& c) {
  std::vector<Bits> k;
  k.reserve(c.sets.size());
  for (ColorSet s : c.sets) k.push_back(s.bits());
  return k;
}

std::vector<std::pair<Bits, Bits>> cub_key(const Cubillage& q) {
  std::vector<std::pair<Bits, Bits>> k;
  k.reserve(q.cubes.size());
  for (const Cube& c : q.cubes) k.emplace_back(c.bottom.bits(), c.type.bits());
  return k;
}

std::string move_kind(const SymmetricMove& mv) {
  switch (mv.kind) {
    case SymmetricMove::Kind::central: return "central";
    case SymmetricMove::Kind::double_capsid: return "double";
    case SymmetricMove::Kind::barrel: return "big";
  }
  return "?";
}

// Validation hooks: no invalid state is ever enqueued.
void validate_state(const ClassSpec& spec, const Collection& c) {
  switch (spec.family) {
    case Family::strong:
    case Family::symmetric_strong:
      if (!is_pairwise(c, SeparationPredicate::strong(1)))
        throw std::logic_error("flip graph: state not strongly separated");
      break;
    case Family::weak:
    case Family::symmetric_weak:
      if (!is_pairwise(c, SeparationPredicate::weak(1)))
        throw std::logic_error("flip graph: state not weakly separated");
      break;
    default:
      break;
  }
  if (spec.family == Family::symmetric_strong || spec.family == Family::symmetric_weak)
    if (!is_symmetric(c)) throw std::logic_error("flip graph: state not symmetric");
}

void validate_state(const ClassSpec& spec, const Cubillage& q) {
  ValidationReport rep = validate(q);
  if (!rep.ok()) throw std::logic_error("flip graph: invalid cubillage: " + rep.violations.front());
  if (spec.family == Family::symmetric_cubillage || spec.family == Family::symmetric_strong)
    if (!is_symmetric_cubillage(q)) throw std::logic_error("flip graph: cubillage not symmetric");
}

std::vector<WeakFlipSite> symmetric_raising_sites(const Collection& W) {
  const GroundSet& g = W.ground;
  const int m = g.m();
  std::vector<WeakFlipSite> out;
  std::set<std::pair<Bits, Bits>> seen;
  for (const WeakFlipSite& s : find_weak_flips(W)) {
    if (s.dir != Direction::raising) continue;
    ColorSet target = s.target(), moved = s.moved();
    if (target.size() > m) continue;
    ColorSet ts = star(target, g), ms = star(moved, g);
    if (target == ts || moved == ms) continue;
    Bits a = target.bits(), b = ts.bits();
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace

FlipGraph build(const ClassSpec& spec, std::uint64_t cap) {
  FlipGraph g;
  g.spec = spec;
  const int n = spec.n;
  std::set<std::tuple<int, int, std::string>> edge_seen;
  auto add_edge = [&](int u, int v, const std::string& kind, bool directed) {
    int a = u, b = v;
    if (!directed && a > b) std::swap(a, b);
    if (edge_seen.insert({a, b, kind}).second) g.edges.push_back({a, b, kind, directed});
  };

  const bool set_family = spec.family == Family::strong || spec.family == Family::weak ||
                          spec.family == Family::symmetric_weak;
  if (set_family) {
    std::map<std::vector<Bits>, int> seen;
    Collection seed = spec.family == Family::symmetric_weak
                          ? min_tiling(identity_permutation(n)).vertex_set()
                          : intervals_collection(n);
    validate_state(spec, seed);
    g.states_validated++;
    g.collections.push_back(seed);
    seen[coll_key(seed)] = 0;
    for (std::size_t qi = 0; qi < g.collections.size(); ++qi) {
      Collection cur = g.collections[qi];
      auto visit = [&](const Collection& nxt) {
        auto k = coll_key(nxt);
        auto it = seen.find(k);
        if (it == seen.end()) {
          validate_state(spec, nxt);
          g.states_validated++;
          it = seen.emplace(k, static_cast<int>(g.collections.size())).first;
          g.collections.push_back(nxt);
          if (g.collections.size() > cap) throw CapExceeded("flip graph: cap exceeded");
        }
        return it->second;
      };
      if (spec.family == Family::strong) {
        for (const WeakFlipSite& s : find_strong_flips(cur)) {
          int j = visit(apply_strong_flip(cur, s));
          if (s.dir == Direction::raising)
            add_edge(static_cast<int>(qi), j, "strong-flip", true);
          else
            add_edge(j, static_cast<int>(qi), "strong-flip", true);
        }
      } else if (spec.family == Family::weak) {
        for (const WeakFlipSite& s : find_weak_flips(cur)) {
          int j = visit(apply_weak_flip(cur, s));
          if (s.dir == Direction::raising)
            add_edge(static_cast<int>(qi), j, "weak-flip", true);
          else
            add_edge(j, static_cast<int>(qi), "weak-flip", true);
        }
      } else {
        for (const WeakFlipSite& s : symmetric_lowering_sites(cur)) {
          int j = visit(symmetric_weak_flip(cur, s));
          add_edge(j, static_cast<int>(qi), "double-weak", true);
        }
        for (const WeakFlipSite& s : symmetric_raising_sites(cur)) {
          int j = visit(symmetric_weak_flip(cur, s));
          add_edge(static_cast<int>(qi), j, "double-weak", true);
        }
        if (is_pairwise(cur, SeparationPredicate::strong(1))) {
          Cubillage t = reconstruct(cur, 2);
          for (const SymmetricMove& mv : symmetric_flip_sites_even_d(t)) {
            if (mv.kind != SymmetricMove::Kind::barrel) continue;
            int j = visit(apply_move(t, mv).vertex_set());
            add_edge(static_cast<int>(qi), j, "big", false);
          }
        }
      }
    }
    return g;
  }

  // Geometric families.
  std::map<std::vector<std::pair<Bits, Bits>>, int> seen;
  Cubillage seed;
  if (spec.family == Family::cubillage) {
    seed = standard(n, spec.d);
  } else if (spec.family == Family::symmetric_strong) {
    seed = min_tiling(identity_permutation(n));
  } else {
    // symmetric cubillage seeds depend on parity
    if (n % 2 == 0 && spec.d % 2 == 1)
      seed = standard(n, spec.d);
    else if (n % 2 == 0) {
      if (spec.d == n)
        seed = standard(n, spec.d);
      else
        seed = symmetric_membrane(standard(n, spec.d + 1)).project();
    } else if (spec.d % 2 == 1) {
      ZeroContraction dummy{};
      Cubillage base = all_symmetric_cubillages(n - 1, spec.d, cap).front();
      seed = zero_expand(base, symmetric_zero_membrane(base));
    } else {
      throw std::invalid_argument("build: symmetric cubillages with n odd, d even unsupported");
    }
  }
  validate_state(spec, seed);
  g.states_validated++;
  g.cubillages.push_back(seed);
  seen[cub_key(seed)] = 0;
  for (std::size_t qi = 0; qi < g.cubillages.size(); ++qi) {
    Cubillage cur = g.cubillages[qi];
    auto visit = [&](const Cubillage& nxt) {
      auto k = cub_key(nxt);
      auto it = seen.find(k);
      if (it == seen.end()) {
        validate_state(spec, nxt);
        g.states_validated++;
        it = seen.emplace(k, static_cast<int>(g.cubillages.size())).first;
        g.cubillages.push_back(nxt);
        if (g.cubillages.size() > cap) throw CapExceeded("flip graph: cap exceeded");
      }
      return it->second;
    };
    if (spec.family == Family::cubillage) {
      for (const Capsid& c : find_capsids(cur)) {
        Direction dir = c.standard_filling ? Direction::raising : Direction::lowering;
        int j = visit(capsid_flip(cur, c, dir));
        if (dir == Direction::raising)
          add_edge(static_cast<int>(qi), j, "capsid", true);
        else
          add_edge(j, static_cast<int>(qi), "capsid", true);
      }
    } else if (spec.family == Family::symmetric_strong ||
               (spec.family == Family::symmetric_cubillage && n % 2 == 0 && spec.d % 2 == 0)) {
      for (const SymmetricMove& mv : symmetric_flip_sites_even_d(cur)) {
        int j = visit(apply_move(cur, mv));
        if (mv.kind == SymmetricMove::Kind::double_capsid && spec.family == Family::symmetric_strong) {
          // Directed inside a block by the below-middle direction.
          if (double_move_direction_below_middle(cur, mv) == Direction::raising)
            add_edge(static_cast<int>(qi), j, "double", true);
          else
            add_edge(j, static_cast<int>(qi), "double", true);
        } else {
          add_edge(static_cast<int>(qi), j, move_kind(mv), false);
        }
      }
    } else if (spec.family == Family::symmetric_cubillage && n % 2 == 0) {
      for (const SymmetricMove& mv : symmetric_flip_sites_odd_d(cur)) {
        int j = visit(apply_move(cur, mv));
        if (mv.dir == Direction::raising)
          add_edge(static_cast<int>(qi), j, move_kind(mv), true);
        else
          add_edge(j, static_cast<int>(qi), move_kind(mv), true);
      }
    } else {
      for (const SymmetricMove& mv : symmetric_flip_sites_odd_n(cur)) {
        int j = visit(apply_move(cur, mv));
        std::string kind = mv.kind == SymmetricMove::Kind::barrel ? "barrel" : "double";
        if (mv.dir == Direction::raising)
          add_edge(static_cast<int>(qi), j, kind, true);
        else
          add_edge(j, static_cast<int>(qi), kind, true);
      }
    }
  }
  return g;
}

GraphAnalysis analyze(const FlipGraph& g) {
  GraphAnalysis a;
  const int N = g.size();
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : g.edges) parent[find(e.u)] = find(e.v);
  std::set<int> comps;
  for (int v = 0; v < N; ++v) comps.insert(find(v));
  a.connected = comps.size() <= 1;

  std::vector<int> indeg(N, 0), outdeg(N, 0);
  std::vector<std::vector<int>> succ(N);
  bool all_directed = !g.edges.empty();
  for (const auto& e : g.edges) {
    if (!e.directed) {
      all_directed = false;
      continue;
    }
    succ[e.u].push_back(e.v);
    outdeg[e.u]++;
    indeg[e.v]++;
  }
  std::vector<int> deg = indeg, stack;
  for (int v = 0; v < N; ++v)
    if (deg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : succ[v])
      if (--deg[w] == 0) stack.push_back(w);
  }
  a.acyclic = seen == N;
  for (int v = 0; v < N; ++v) {
    if (indeg[v] == 0) a.sources.push_back(v);
    if (outdeg[v] == 0) a.sinks.push_back(v);
  }
  a.poset_with_unique_extremes =
      a.acyclic && all_directed && a.sources.size() == 1 && a.sinks.size() == 1;
  return a;
}

std::string to_dot(const FlipGraph& g) {
  std::ostringstream out;
  out << "digraph flips {\n";
  for (int v = 0; v < g.size(); ++v) out << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& e : g.edges) {
    out << "  v" << e.u << " -> v" << e.v << " [label=\"" << e.kind << "\"";
    if (!e.directed) out << " dir=none";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

// ---- exhaustive enumerations -------------------------------------------------------

namespace {

// Maximum cliques over at most 64 items via Bron-Kerbosch with pivoting.
void bron_kerbosch(std::uint64_t R, std::uint64_t P, std::uint64_t X,
                   const std::vector<std::uint64_t>& adj,
                   const std::function<void(std::uint64_t)>& emit, std::uint64_t& count,
                   std::uint64_t cap) {
  if (P == 0 && X == 0) {
    emit(R);
    if (++count > cap) throw CapExceeded("clique enumeration: cap exceeded");
    return;
  }
  std::uint64_t PX = P | X;
  int pivot = __builtin_ctzll(PX);
  std::uint64_t best = P & ~adj[pivot];
  for (std::uint64_t px = PX; px; px &= px - 1) {
    int u = __builtin_ctzll(px);
    std::uint64_t cand = P & ~adj[u];
    if (__builtin_popcountll(cand) < __builtin_popcountll(best)) {
      best = cand;
      pivot = u;
    }
  }
  for (std::uint64_t c = best; c;) {
    int v = __builtin_ctzll(c);
    c &= c - 1;
    std::uint64_t bit = 1ull << v;
    bron_kerbosch(R | bit, P & adj[v], X & adj[v], adj, emit, count, cap);
    P &= ~bit;
    X |= bit;
  }
}

}  // namespace

std::vector<Collection> all_size_maximal_rsep(int n, int r, std::uint64_t cap) {
  if (n > 6) throw CapExceeded("all_size_maximal_rsep: n too large for brute force");
  GroundSet g(n);
  const int K = 1 << n;
  std::vector<std::uint64_t> adj(K, 0);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      if (i != j && (r == 0 ? alternation_blocks(ColorSet(i), ColorSet(j)) <= 1
                            : is_r_separated(ColorSet(i), ColorSet(j), r)))
        adj[i] |= 1ull << j;
  std::vector<std::uint64_t> cliques;
  std::uint64_t count = 0;
  std::uint64_t P = K == 64 ? ~0ull : ((1ull << K) - 1);
  bron_kerbosch(0, P, 0, adj, [&](std::uint64_t c) { cliques.push_back(c); }, count, cap);
  int best = 0;
  for (std::uint64_t c : cliques) best = std::max(best, __builtin_popcountll(c));
  std::vector<Collection> out;
  for (std::uint64_t c : cliques) {
    if (__builtin_popcountll(c) != best) continue;
    std::vector<ColorSet> sets;
    for (std::uint64_t b = c; b; b &= b - 1) sets.emplace_back(static_cast<Bits>(__builtin_ctzll(b)));
    out.emplace_back(g, std::move(sets));
  }
  std::sort(out.begin(), out.end(),
            [](const Collection& a, const Collection& b) { return coll_key(a) < coll_key(b); });
  return out;
}

std::vector<Collection> maximal_symmetric_collections(int n, const SeparationPredicate& pred,
                                                      std::uint64_t cap) {
  GroundSet g(n);
  std::vector<std::pair<ColorSet, ColorSet>> orbits;
  std::set<Bits> used;
  for (Bits b = 0;; ++b) {
    if (!used.count(b)) {
      ColorSet x(b), xs = star(x, g);
      used.insert(x.bits());
      used.insert(xs.bits());
      if (pred(x, xs)) orbits.emplace_back(x, xs);
    }
    if (b == g.mask()) break;
  }
  const int K = static_cast<int>(orbits.size());
  if (K > 63) throw CapExceeded("maximal_symmetric_collections: too many orbits");
  std::vector<std::uint64_t> adj(K, 0);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      if (i == j) continue;
      const auto& [a, as] = orbits[i];
      const auto& [b, bs] = orbits[j];
      if (pred(a, b) && pred(a, bs) && pred(as, b) && pred(as, bs)) adj[i] |= 1ull << j;
    }
  std::vector<Collection> out;
  std::uint64_t count = 0;
  std::uint64_t P = K == 64 ? ~0ull : ((1ull << K) - 1);
  bron_kerbosch(0, P, 0, adj,
                [&](std::uint64_t c) {
                  std::vector<ColorSet> sets;
                  for (std::uint64_t b = c; b; b &= b - 1) {
                    const auto& [x, xs] = orbits[__builtin_ctzll(b)];
                    sets.push_back(x);
                    sets.push_back(xs);
                  }
                  out.emplace_back(g, std::move(sets));
                },
                count, cap);
  std::sort(out.begin(), out.end(),
            [](const Collection& a, const Collection& b) { return coll_key(a) < coll_key(b); });
  return out;
}

std::vector<Cubillage> all_cubillages(int n, int d, std::uint64_t cap) {
  ClassSpec spec{Family::cubillage, n, d};
  return build(spec, cap).cubillages;
}

std::vector<Cubillage> all_symmetric_cubillages(int n, int d, std::uint64_t cap) {
  if (d == n) return {standard(n, d)};
  if (n % 2 == 0 && d % 2 == 1) {
    ClassSpec spec{Family::symmetric_cubillage, n, d};
    return build(spec, cap).cubillages;
  }
  if (n % 2 == 0) {
    // d even: project the symmetric membranes of all (d+1)-hosts; complete
    // because every symmetric cubillage lifts into a symmetric host.
    std::map<std::vector<std::pair<Bits, Bits>>, Cubillage> out;
    for (const Cubillage& K : all_symmetric_cubillages(n, d + 1, cap))
      for (const Membrane& m : symmetric_membranes(K)) {
        Cubillage q = m.project();
        out.emplace(cub_key(q), q);
        if (out.size() > cap) throw CapExceeded("all_symmetric_cubillages: cap exceeded");
      }
    std::vector<Cubillage> v;
    v.reserve(out.size());
    for (auto& [k, q] : out) v.push_back(std::move(q));
    return v;
  }
  if (d % 2 == 1) {
    // n odd: 0-expansions of symmetric 0-membranes, a bijection.
    std::map<std::vector<std::pair<Bits, Bits>>, Cubillage> out;
    for (const Cubillage& Qp : all_symmetric_cubillages(n - 1, d, cap))
      for (const ZeroMembrane& m0 : symmetric_zero_membranes(Qp)) {
        Cubillage q = zero_expand(Qp, m0);
        out.emplace(cub_key(q), q);
        if (out.size() > cap) throw CapExceeded("all_symmetric_cubillages: cap exceeded");
      }
    std::vector<Cubillage> v;
    v.reserve(out.size());
    for (auto& [k, q] : out) v.push_back(std::move(q));
    return v;
  }
  throw std::invalid_argument("all_symmetric_cubillages: n odd with d even is unsupported");
}

// ---- conjecture checkers ------------------------------------------------------------

namespace {

std::string cube_str(const Cube& c) { return c.bottom.to_string() + "|" + c.type.to_string(); }

// Rim of the sub-zonotope (X̃, T̃) inside dimension-dim space: the (dim-2)-
// faces of its boundary lying on both the front and the rear side.
std::vector<Cube> rim_faces(ColorSet bottom, ColorSet type, int dim) {
  const int nn = type.size();
  CfgPtr tcfg = make_configuration(nn, dim);
  auto subfaces = [&](const std::vector<Cube>& facets) {
    std::set<std::pair<Bits, Bits>> keys;
    std::vector<Cube> faces;
    for (const Cube& f : facets)
      for (int t : f.type.elements())
        for (Cube sub : {Cube{f.bottom, f.type.without(t)}, Cube{f.bottom.with(t), f.type.without(t)}})
          if (keys.insert({sub.bottom.bits(), sub.type.bits()}).second) faces.push_back(sub);
    return faces;
  };
  auto fr = subfaces(front_facets(*tcfg));
  auto re = subfaces(rear_facets(*tcfg));
  std::sort(fr.begin(), fr.end(), CubeLess{});
  std::sort(re.begin(), re.end(), CubeLess{});
  std::vector<Cube> rim;
  std::set_intersection(fr.begin(), fr.end(), re.begin(), re.end(), std::back_inserter(rim),
                        CubeLess{});
  // map template colors onto T̃ and shift by the bottom
  std::vector<int> to = type.elements();
  auto remap = [&](ColorSet s) {
    ColorSet o;
    for (int c : s.elements()) o = o.with(to[c - 1]);
    return o;
  };
  std::vector<Cube> out;
  out.reserve(rim.size());
  for (const Cube& f : rim) out.push_back(Cube{bottom | remap(f.bottom), remap(f.type)});
  std::sort(out.begin(), out.end(), CubeLess{});
  return out;
}

bool face_of(const Cube& sub, const Cube& f) {
  return sub.type.subset_of(f.type) && f.bottom.subset_of(sub.bottom) &&
         (sub.bottom - f.bottom).subset_of(f.type - sub.type);
}

bool membrane_contains_faces(const std::vector<Cube>& mfacets, const std::vector<Cube>& faces) {
  for (const Cube& sub : faces) {
    bool found = false;
    for (const Cube& f : mfacets)
      if (face_of(sub, f)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Abstract self-symmetric capsids (X|T) in Z(n, dim): |T| = dim+1, T = T°,
// X = (XT)*.
std::vector<Capsid> central_capsids(int n, int dim) {
  GroundSet g(n);
  std::vector<Capsid> out;
  const int tsize = dim + 1;
  std::function<void(int, ColorSet)> rec = [&](int c, ColorSet t) {
    if (t.size() == tsize) {
      ColorSet rest = ColorSet::full(g) - t;
      // X ⊆ rest with X = (XT)*
      std::vector<int> el = rest.elements();
      for (Bits mask = 0; mask < (Bits{1} << el.size()); ++mask) {
        ColorSet x;
        for (size_t i = 0; i < el.size(); ++i)
          if ((mask >> i) & 1u) x = x.with(el[i]);
        if (star(x | t, g) == x) out.push_back(Capsid{x, t, false});
      }
      return;
    }
    if (c > g.m()) return;
    rec(c + 1, t);
    rec(c + 1, t.with(c).with(g.comp(c)));
  };
  rec(1, ColorSet{});
  std::sort(out.begin(), out.end(), [](const Capsid& a, const Capsid& b) {
    return cube_less(Cube{a.bottom, a.type}, Cube{b.bottom, b.type});
  });
  return out;
}

}  // namespace

int replay_orbit_path(const Cubillage& K, const std::vector<int>& ideal_from,
                      const std::vector<int>& ideal_to) {
  const GroundSet& g = K.cfg->ground();
  CubeOrder ord = natural_order(K);
  const int N = static_cast<int>(K.cubes.size());
  std::vector<int> star_of(N);
  for (int i = 0; i < N; ++i) star_of[i] = K.index_of(star_face(K.cubes[i], g));
  std::vector<char> cur(N, 0), target(N, 0);
  for (int i : ideal_from) cur.at(i) = 1;
  for (int i : ideal_to) target.at(i) = 1;
  Cubillage prev_proj = Membrane{K, ideal_from}.project();
  int steps = 0, guard = N + 1;
  while (cur != target) {
    if (--guard < 0) throw std::logic_error("replay_orbit_path: no progress");
    int chosen = -1;
    for (int v = 0; v < N; ++v) {
      if (cur[v] || !target[v]) continue;  // v in K(M') - K(M)
      bool minimal = true;
      for (int u : ord.pred[v])
        if (!cur[u] && target[u]) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      if (chosen < 0 || cube_less(K.cubes[v], K.cubes[chosen])) chosen = v;
    }
    if (chosen < 0) throw std::logic_error("replay_orbit_path: stuck");
    const int cs = star_of[chosen];
    cur[chosen] = 1;
    if (!cur[cs]) throw std::logic_error("replay_orbit_path: star cube not in the ideal");
    cur[cs] = 0;
    std::vector<int> ideal;
    for (int v = 0; v < N; ++v)
      if (cur[v]) ideal.push_back(v);
    Membrane m = membrane_from_ideal(K, ideal);
    Cubillage proj = m.project();
    if (!is_symmetric_cubillage(proj)) throw std::logic_error("replay_orbit_path: asymmetric step");
    // The step is a symmetric double flip on the projections.
    bool adjacent = false;
    for (const SymmetricMove& mv : symmetric_flip_sites_even_d(prev_proj)) {
      if (mv.kind != SymmetricMove::Kind::double_capsid) continue;
      if (apply_move(prev_proj, mv) == proj) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) throw std::logic_error("replay_orbit_path: step is not a symmetric double flip");
    prev_proj = proj;
    ++steps;
  }
  return steps;
}

ConjectureReport check_C1(int n, int d, std::uint64_t cap) {
  if (n % 2 != 0 || d % 2 != 0) throw std::invalid_argument("check_C1: needs n, d even");
  ConjectureReport rep;
  rep.name = "C1 (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
  const int dim = d + 1;
  std::vector<Cubillage> hosts = all_symmetric_cubillages(n, dim, cap);
  std::vector<Capsid> capsids = central_capsids(n, dim);
  rep.notes.push_back("symmetric (d+1)-cubillages: " + std::to_string(hosts.size()));
  rep.notes.push_back("central capsids: " + std::to_string(capsids.size()));

  // Symmetric membranes per host, with canonical facet keys.
  std::vector<std::vector<Membrane>> host_membranes;
  std::map<std::vector<std::pair<Bits, Bits>>, int> mkey_id;
  std::vector<std::vector<int>> incidence;  // membrane id -> host indices
  for (std::size_t hi = 0; hi < hosts.size(); ++hi) {
    host_membranes.push_back(symmetric_membranes(hosts[hi]));
    for (const Membrane& m : host_membranes.back()) {
      auto key = cub_key(Cubillage(hosts[hi].cfg, m.facets()));
      auto it = mkey_id.find(key);
      if (it == mkey_id.end()) {
        it = mkey_id.emplace(key, static_cast<int>(incidence.size())).first;
        incidence.push_back({});
      }
      incidence[it->second].push_back(static_cast<int>(hi));
    }
  }

  bool all_ok = true;
  // (i) every central capsid has a host containing its anti-standard filling
  // together with a perfect symmetric membrane.
  for (const Capsid& Dd : capsids) {
    ++rep.instances;
    std::vector<Cube> anti = Dd.filling(false);
    std::vector<Cube> rim = rim_faces(Dd.bottom, Dd.type, dim);
    bool found = false;
    std::string witness;
    for (std::size_t hi = 0; hi < hosts.size() && !found; ++hi) {
      bool has_anti = true;
      for (const Cube& c : anti)
        if (!hosts[hi].has_cube(c)) {
          has_anti = false;
          break;
        }
      if (!has_anti) continue;
      for (const Membrane& m : host_membranes[hi]) {
        if (membrane_contains_faces(m.facets(), rim)) {
          found = true;
          witness = "capsid " + cube_str(Cube{Dd.bottom, Dd.type}) + " host#" + std::to_string(hi) +
                    " ideal size " + std::to_string(m.ideal.size());
          break;
        }
      }
    }
    if (found)
      rep.witnesses.push_back(witness);
    else {
      all_ok = false;
      rep.counterexamples.push_back("C1(i) fails for capsid " +
                                    cube_str(Cube{Dd.bottom, Dd.type}));
    }
  }

  // (ii) orbits: union membranes sharing a host; each train must contain the
  // standard host or a perfect-membrane witness.
  const int M = static_cast<int>(incidence.size());
  std::vector<int> parent(M);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::map<int, std::vector<int>> membranes_of_host;
  for (int mi = 0; mi < M; ++mi)
    for (int hi : incidence[mi]) membranes_of_host[hi].push_back(mi);
  for (auto& [hi, ms] : membranes_of_host)
    for (std::size_t i = 1; i < ms.size(); ++i) parent[find(ms[0])] = find(ms[i]);
  std::map<int, std::set<int>> trains;  // orbit root -> hosts
  for (int mi = 0; mi < M; ++mi)
    for (int hi : incidence[mi]) trains[find(mi)].insert(hi);
  rep.notes.push_back("orbits: " + std::to_string(trains.size()));

  Cubillage std_host = standard(n, dim);
  int std_idx = -1;
  for (std::size_t hi = 0; hi < hosts.size(); ++hi)
    if (hosts[hi] == std_host) std_idx = static_cast<int>(hi);
  for (auto& [root, hs] : trains) {
    ++rep.instances;
    bool ok = std_idx >= 0 && hs.count(std_idx);
    std::string why = ok ? "train contains the standard host" : "";
    for (auto it = hs.begin(); it != hs.end() && !ok; ++it) {
      for (const Capsid& Dd : capsids) {
        std::vector<Cube> anti = Dd.filling(false);
        bool has_anti = true;
        for (const Cube& c : anti)
          if (!hosts[*it].has_cube(c)) {
            has_anti = false;
            break;
          }
        if (!has_anti) continue;
        std::vector<Cube> rim = rim_faces(Dd.bottom, Dd.type, dim);
        for (const Membrane& m : host_membranes[*it])
          if (membrane_contains_faces(m.facets(), rim)) {
            ok = true;
            why = "train reaches host#" + std::to_string(*it) + " perfect for capsid " +
                  cube_str(Cube{Dd.bottom, Dd.type});
            break;
          }
        if (ok) break;
      }
    }
    if (ok)
      rep.witnesses.push_back("orbit@" + std::to_string(root) + ": " + why);
    else {
      all_ok = false;
      rep.counterexamples.push_back("C1(ii) fails for orbit@" + std::to_string(root));
    }
  }
  rep.verdict = all_ok ? "PASS" : "FAIL";
  return rep;
}

ConjectureReport check_C2(int n, int d, std::uint64_t cap) {
  if (n % 2 == 0 || d % 2 == 0) throw std::invalid_argument("check_C2: needs n, d odd");
  ConjectureReport rep;
  rep.name = "C2 (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
  std::vector<Cubillage> cubs = all_symmetric_cubillages(n, d, cap);
  rep.notes.push_back("symmetric cubillages: " + std::to_string(cubs.size()));
  bool all_ok = true;
  for (std::size_t i = 0; i < cubs.size(); ++i) {
    const Cubillage& Q = cubs[i];
    int anti = 0;
    for (const Capsid& c : find_capsids(Q))
      if (!c.standard_filling) ++anti;
    if (anti == 0) continue;
    ++rep.instances;
    int lowering_moves = 0;
    for (const SymmetricMove& mv : symmetric_flip_sites_odd_n(Q))
      if (mv.dir == Direction::lowering) ++lowering_moves;
    if (lowering_moves > 0)
      rep.witnesses.push_back("cubillage#" + std::to_string(i) + ": " +
                              std::to_string(anti) + " anti capsids, " +
                              std::to_string(lowering_moves) + " lowering moves");
    else {
      all_ok = false;
      rep.counterexamples.push_back("cubillage#" + std::to_string(i) +
                                    " has anti capsids but no lowering double/barrel flip");
    }
  }
  // Bonus observation: reachability of the standard cubillage by lowering.
  ClassSpec spec{Family::symmetric_cubillage, n, d};
  FlipGraph g = build(spec, cap);
  rep.notes.push_back("flip-reachable from one seed: " + std::to_string(g.size()) + " of " +
                      std::to_string(cubs.size()));
  rep.verdict = all_ok ? "PASS" : "FAIL";
  return rep;
}

namespace {

long long size_max_rsep(int n, int r) {
  long long s = 0;
  for (int k = 0; k <= r + 1; ++k) s += binom(n, k);
  return s;
}

std::vector<Collection> symmetric_size_maximal(int n, int r) {
  std::vector<Collection> out;
  for (Collection& c : maximal_symmetric_collections(n, SeparationPredicate::weak(r)))
    if (c.size() == size_max_rsep(n, r)) out.push_back(std::move(c));
  return out;
}

}  // namespace

ConjectureReport check_C3(int n, int r, std::uint64_t cap) {
  if (n % 2 != 0 || r % 2 == 0) throw std::invalid_argument("check_C3: needs n even, r odd");
  (void)cap;
  ConjectureReport rep;
  rep.name = "C3 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
  GroundSet g(n);
  std::vector<Collection> states = symmetric_size_maximal(n, r);
  rep.notes.push_back("symmetric size-maximal weakly " + std::to_string(r) +
                      "-separated collections: " + std::to_string(states.size()));
  bool all_ok = true;
  for (std::size_t wi = 0; wi < states.size(); ++wi) {
    std::set<std::tuple<Bits, Bits, Bits>> seen;
    for (const Gadget& gg : find_gadgets(states[wi], r)) {
      if (!seen.insert({gg.root.bits(), gg.p.bits(), gg.q.bits()}).second) continue;
      Gadget sg = star_gadget(gg, g);
      if (sg.height() != gg.height() + 1) continue;
      ++rep.instances;
      ColorSet xq = gg.root | gg.q;
      auto low = sg.lower_layer();
      bool hit = std::find(low.begin(), low.end(), xq) != low.end();
      if (hit) {
        all_ok = false;
        rep.counterexamples.push_back("W#" + std::to_string(wi) + " gadget root " +
                                      gg.root.to_string() + " P " + gg.p.to_string() + " Q " +
                                      gg.q.to_string() + ": XQ lies in the star's lower layer");
      } else {
        rep.witnesses.push_back("W#" + std::to_string(wi) + " gadget root " + gg.root.to_string() +
                                " P " + gg.p.to_string() + " Q " + gg.q.to_string() + ": clear");
      }
    }
  }
  rep.verdict = all_ok ? "PASS" : "FAIL";
  return rep;
}

ConjectureReport check_C4(int n, int r, std::uint64_t cap) {
  if (n % 2 != 0 || r % 2 == 0) throw std::invalid_argument("check_C4: needs n even, r odd");
  (void)cap;
  ConjectureReport rep;
  rep.name = "C4 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
  GroundSet g(n);
  std::vector<Collection> states = symmetric_size_maximal(n, r);
  const int V = static_cast<int>(states.size());
  rep.notes.push_back("vertices: " + std::to_string(V));
  std::map<std::vector<Bits>, int> index;
  for (int i = 0; i < V; ++i) index[coll_key(states[i])] = i;
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  long long edges = 0;
  for (int i = 0; i < V; ++i) {
    for (const Gadget& gg : find_gadgets(states[i], r)) {
      if (gg.dir != Direction::raising) continue;
      if (!symmetric_gadget_flip_safe(gg, g)) continue;
      Collection nxt = symmetric_gadget_flip(states[i], gg);
      auto it = index.find(coll_key(nxt));
      if (it == index.end())
        throw std::logic_error("check_C4: flip left the class (self-consistency)");
      parent[find(i)] = find(it->second);
      ++edges;
      ++rep.instances;
    }
  }
  std::set<int> comps;
  for (int i = 0; i < V; ++i) comps.insert(find(i));
  rep.notes.push_back("gadget-flip edges (directed count): " + std::to_string(edges));
  rep.notes.push_back("components: " + std::to_string(comps.size()));
  if (comps.size() <= 1) {
    rep.verdict = "PASS";
    rep.witnesses.push_back("connected on " + std::to_string(V) + " vertices");
  } else {
    rep.verdict = "FAIL";
    for (int c : comps) {
      std::string members;
      for (int i = 0; i < V; ++i)
        if (find(i) == c) members += " W#" + std::to_string(i);
      rep.counterexamples.push_back("component:" + members);
    }
  }
  return rep;
}

}  // namespace sepsys
