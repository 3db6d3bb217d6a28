#include "sepsys/bruhat.hpp"

#include <functional>

#include "sepsys/symmetry.hpp"

namespace sepsys {

namespace {

void for_each_ksubset_of_n(int n, int k, const std::function<void(ColorSet)>& fn) {
  if (k == 0) {
    fn(ColorSet());
    return;
  }
  if (k > n) return;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i + 1;
  while (true) {
    ColorSet s;
    for (int c : comb) s = s.with(c);
    fn(s);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace

PacketSystem make_packets(int n, int d) {
  if (d < 1 || d >= n) throw std::invalid_argument("make_packets: need n > d >= 1");
  PacketSystem ps;
  ps.n = n;
  ps.d = d;
  for_each_ksubset_of_n(n, d, [&](ColorSet s) {
    ps.subset_index[s.bits()] = static_cast<int>(ps.subsets.size());
    ps.subsets.push_back(s);
  });
  ps.packets_of.assign(ps.subsets.size(), {});
  for_each_ksubset_of_n(n, d + 1, [&](ColorSet p) {
    const int pid = static_cast<int>(ps.packets.size());
    ps.packet_index[p.bits()] = pid;
    ps.packets.push_back(p);
    // F(P) = (P - i_{d+1}, P - i_d, ..., P - i_1)
    std::vector<int> el = p.elements();
    std::vector<int> fam;
    for (int i = static_cast<int>(el.size()) - 1; i >= 0; --i) {
      int sid = ps.subset_index.at(p.without(el[i]).bits());
      fam.push_back(sid);
      ps.packets_of[sid].push_back(pid);
    }
    ps.family.push_back(std::move(fam));
  });
  return ps;
}

int PacketSystem::mirror_subset(int s) const {
  return subset_index.at(mirror(subsets[s], GroundSet(n)).bits());
}
int PacketSystem::mirror_packet(int p) const {
  return packet_index.at(mirror(packets[p], GroundSet(n)).bits());
}

namespace {

// Per-packet incremental state for the admissible-order DFS.
struct PacketState {
  int placed = 0;
  int mode = 0;  // 0 unknown, 1 lex, 2 anti
};

std::vector<AdmissibleOrder> enumerate_orders(const PacketSystem& ps, bool s_admissible,
                                              std::uint64_t cap) {
  const int S = ps.num_subsets(), P = ps.num_packets();
  std::vector<AdmissibleOrder> out;
  std::vector<PacketState> st(P);
  std::vector<char> used(S, 0);
  AdmissibleOrder rho;
  rho.reserve(S);

  std::function<void()> dfs = [&]() {
    if (static_cast<int>(rho.size()) == S) {
      out.push_back(rho);
      if (out.size() > cap) throw CapExceeded("enumerate orders: cap exceeded");
      return;
    }
    for (int s = 0; s < S; ++s) {
      if (used[s]) continue;
      bool ok = true;
      std::vector<std::pair<int, PacketState>> saved;
      for (int p : ps.packets_of[s]) {
        const auto& fam = ps.family[p];
        const int dd = static_cast<int>(fam.size()) - 1;
        PacketState& q = st[p];
        int need_mode = 0;
        if (q.mode == 0) {
          if (fam[0] == s)
            need_mode = 1;
          else if (fam[dd] == s)
            need_mode = 2;
          else {
            ok = false;
            break;
          }
        } else if (q.mode == 1) {
          if (fam[q.placed] != s) {
            ok = false;
            break;
          }
          need_mode = 1;
        } else {
          if (fam[dd - q.placed] != s) {
            ok = false;
            break;
          }
          need_mode = 2;
        }
        if (s_admissible && q.placed == 0) {
          // A decided partner packet must carry the same mode.
          const int pm = ps.mirror_packet(p);
          if (pm != p && st[pm].mode != 0 && st[pm].mode != need_mode) {
            ok = false;
            break;
          }
        }
        saved.emplace_back(p, q);
        q.mode = need_mode;
        q.placed += 1;
      }
      if (ok) {
        used[s] = 1;
        rho.push_back(s);
        dfs();
        rho.pop_back();
        used[s] = 0;
      }
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) st[it->first] = it->second;
    }
  };
  dfs();
  return out;
}

}  // namespace

std::vector<AdmissibleOrder> enumerate_A(const PacketSystem& ps, std::uint64_t cap) {
  return enumerate_orders(ps, false, cap);
}

std::vector<AdmissibleOrder> enumerate_As(const PacketSystem& ps, std::uint64_t cap) {
  return enumerate_orders(ps, true, cap);
}

std::vector<ColorSet> inversions_of(const PacketSystem& ps, const AdmissibleOrder& rho) {
  std::vector<int> pos(ps.num_subsets());
  for (int i = 0; i < static_cast<int>(rho.size()); ++i) pos[rho[i]] = i;
  std::vector<ColorSet> out;
  for (int p = 0; p < ps.num_packets(); ++p) {
    const auto& fam = ps.family[p];
    bool lex = true, anti = true;
    for (size_t i = 0; i + 1 < fam.size(); ++i) {
      if (pos[fam[i]] > pos[fam[i + 1]]) lex = false;
      if (pos[fam[i]] < pos[fam[i + 1]]) anti = false;
    }
    if (!lex && !anti) throw std::invalid_argument("inversions_of: order not admissible");
    if (anti) out.push_back(ps.packets[p]);
  }
  std::sort(out.begin(), out.end(), ColorSetLess{});
  return out;
}

namespace {

bool co_packeted(const PacketSystem& ps, int a, int b) {
  ColorSet u = ps.subsets[a] | ps.subsets[b];
  return u.size() == ps.d + 1;
}

}  // namespace

AdmissibleOrder canonical_class_form(const PacketSystem& ps, const AdmissibleOrder& rho,
                                     bool paired_moves, std::uint64_t cap) {
  std::set<AdmissibleOrder> seen{rho};
  std::vector<AdmissibleOrder> queue{rho};
  AdmissibleOrder best = rho;
  const int L = static_cast<int>(rho.size());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    AdmissibleOrder cur = queue[qi];
    if (cur < best) best = cur;
    for (int i = 0; i + 1 < L; ++i) {
      const int x = cur[i], y = cur[i + 1];
      if (co_packeted(ps, x, y)) continue;
      AdmissibleOrder nxt = cur;
      std::swap(nxt[i], nxt[i + 1]);
      if (paired_moves) {
        const int xs = ps.mirror_subset(x), ys = ps.mirror_subset(y);
        const bool same_pair = (xs == y && ys == x) || (xs == x && ys == y);
        if (!same_pair) {
          // The star neighbors must be adjacent too; swap them in tandem.
          int j = -1;
          for (int t = 0; t + 1 < L; ++t)
            if ((nxt[t] == xs && nxt[t + 1] == ys) || (nxt[t] == ys && nxt[t + 1] == xs)) j = t;
          if (j < 0) continue;
          if (j == i || j == i + 1 || j + 1 == i) continue;
          std::swap(nxt[j], nxt[j + 1]);
        }
      }
      if (seen.insert(nxt).second) {
        queue.push_back(nxt);
        if (seen.size() > cap) throw CapExceeded("canonical_class_form: cap exceeded");
      }
    }
  }
  return best;
}

std::vector<AdmissibleOrder> quotient_classes(const PacketSystem& ps,
                                              const std::vector<AdmissibleOrder>& orders,
                                              bool paired_moves, std::uint64_t cap) {
  std::set<AdmissibleOrder> reps;
  for (const AdmissibleOrder& rho : orders)
    reps.insert(canonical_class_form(ps, rho, paired_moves, cap));
  return {reps.begin(), reps.end()};
}

// ---- inversion sets ------------------------------------------------------------

namespace {

// The per-packet chains oriented by U; acyclic iff U is an inversion set.
struct ChainDigraph {
  std::vector<std::vector<int>> succ;
  std::vector<int> indeg;
};

ChainDigraph chains_of(const PacketSystem& ps, const InvSet& U) {
  const int S = ps.num_subsets();
  ChainDigraph g;
  g.succ.assign(S, {});
  g.indeg.assign(S, 0);
  for (int p = 0; p < ps.num_packets(); ++p) {
    const auto& fam = ps.family[p];
    const bool rev = U.count(ps.packets[p].bits()) != 0;
    for (size_t i = 0; i + 1 < fam.size(); ++i) {
      int a = fam[i], b = fam[i + 1];
      if (rev) std::swap(a, b);
      g.succ[a].push_back(b);
      g.indeg[b]++;
    }
  }
  return g;
}

}  // namespace

bool invset_consistent(const PacketSystem& ps, const InvSet& U) {
  ChainDigraph g = chains_of(ps, U);
  const int S = ps.num_subsets();
  std::vector<int> stack;
  for (int v = 0; v < S; ++v)
    if (g.indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : g.succ[v])
      if (--g.indeg[w] == 0) stack.push_back(w);
  }
  return seen == S;
}

AdmissibleOrder realize_order(const PacketSystem& ps, const InvSet& U) {
  ChainDigraph g = chains_of(ps, U);
  const int S = ps.num_subsets();
  std::set<int> ready;
  for (int v = 0; v < S; ++v)
    if (g.indeg[v] == 0) ready.insert(v);
  AdmissibleOrder rho;
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    rho.push_back(v);
    for (int w : g.succ[v])
      if (--g.indeg[w] == 0) ready.insert(w);
  }
  if (static_cast<int>(rho.size()) != S)
    throw std::invalid_argument("realize_order: inversion set not consistent");
  return rho;
}

std::vector<InvSet> enumerate_B_invsets(const PacketSystem& ps, std::uint64_t cap) {
  const int P = ps.num_packets();
  if (P > 30) throw CapExceeded("enumerate_B_invsets: too many packets");
  std::vector<InvSet> out;
  for (std::uint64_t mask = 0; mask < (1ull << P); ++mask) {
    InvSet U;
    for (int p = 0; p < P; ++p)
      if ((mask >> p) & 1ull) U.insert(ps.packets[p].bits());
    if (invset_consistent(ps, U)) {
      out.push_back(std::move(U));
      if (out.size() > cap) throw CapExceeded("enumerate_B_invsets: cap exceeded");
    }
  }
  return out;
}

std::vector<InvSet> enumerate_Bs_invsets(const PacketSystem& ps, std::uint64_t cap) {
  const int P = ps.num_packets();
  std::vector<std::pair<int, int>> orbits;
  std::vector<char> seen(P, 0);
  for (int p = 0; p < P; ++p) {
    if (seen[p]) continue;
    int q = ps.mirror_packet(p);
    seen[p] = seen[q] = 1;
    orbits.emplace_back(p, q);
  }
  const int K = static_cast<int>(orbits.size());
  if (K > 30) throw CapExceeded("enumerate_Bs_invsets: too many packet orbits");
  std::vector<InvSet> out;
  for (std::uint64_t mask = 0; mask < (1ull << K); ++mask) {
    InvSet U;
    for (int k = 0; k < K; ++k)
      if ((mask >> k) & 1ull) {
        U.insert(ps.packets[orbits[k].first].bits());
        U.insert(ps.packets[orbits[k].second].bits());
      }
    if (invset_consistent(ps, U)) {
      out.push_back(std::move(U));
      if (out.size() > cap) throw CapExceeded("enumerate_Bs_invsets: cap exceeded");
    }
  }
  return out;
}

// ---- correspondence -------------------------------------------------------------

CorrespondenceReport correspondence_check(int n, int d, std::uint64_t cap) {
  if (n % 2 != 0 || d % 2 == 0)
    throw std::invalid_argument("correspondence_check: needs n even, d odd");
  CorrespondenceReport rep;
  rep.n = n;
  rep.d = d;
  PacketSystem ps = make_packets(n, d);
  std::vector<InvSet> classes = enumerate_Bs_invsets(ps, cap);
  rep.bruhat_classes = static_cast<int>(classes.size());

  // All symmetric cubillages, by symmetric flips from the standard one.
  std::vector<Cubillage> cubs{standard(n, d)};
  std::map<std::vector<std::pair<Bits, Bits>>, int> seen;
  auto key_of = [](const Cubillage& q) {
    std::vector<std::pair<Bits, Bits>> k;
    for (const Cube& c : q.cubes) k.emplace_back(c.bottom.bits(), c.type.bits());
    return k;
  };
  seen[key_of(cubs[0])] = 0;
  for (std::size_t qi = 0; qi < cubs.size(); ++qi) {
    Cubillage cur = cubs[qi];
    for (const SymmetricMove& mv : symmetric_flip_sites_odd_d(cur)) {
      Cubillage nxt = apply_move(cur, mv);
      auto k = key_of(nxt);
      if (!seen.count(k)) {
        seen[k] = static_cast<int>(cubs.size());
        cubs.push_back(nxt);
        if (cubs.size() > cap) throw CapExceeded("correspondence_check: cubillage cap");
      }
    }
  }
  rep.symmetric_cubillages = static_cast<int>(cubs.size());

  auto inv_of_cub = [&](const Cubillage& q) {
    InvSet inv;
    for (const Cube& c : fill_before_membrane(q)) inv.insert(c.type.bits());
    return inv;
  };
  std::vector<InvSet> cub_inv(cubs.size());
  std::map<InvSet, int> inv_to_cub;
  for (std::size_t i = 0; i < cubs.size(); ++i) {
    cub_inv[i] = inv_of_cub(cubs[i]);
    inv_to_cub[cub_inv[i]] = static_cast<int>(i);
  }

  std::set<InvSet> class_set(classes.begin(), classes.end());
  std::set<InvSet> cub_set(cub_inv.begin(), cub_inv.end());
  rep.perfect_matching =
      class_set == cub_set && cub_set.size() == cubs.size() && class_set.size() == classes.size();
  if (!rep.perfect_matching) {
    rep.notes.push_back("inversion-set families differ or are not injective");
    rep.covers_match = false;
    return rep;
  }

  // Covering steps (one self-symmetric packet or one star pair) must match
  // single symmetric raising flips, both ways.
  GroundSet g(n);
  bool covers_ok = true;
  for (const InvSet& u : classes) {
    for (const InvSet& v : classes) {
      if (u == v || !std::includes(v.begin(), v.end(), u.begin(), u.end())) continue;
      InvSet diff;
      std::set_difference(v.begin(), v.end(), u.begin(), u.end(), std::inserter(diff, diff.end()));
      bool step = false;
      if (diff.size() == 1) {
        ColorSet t(*diff.begin());
        step = mirror(t, g) == t;
      } else if (diff.size() == 2) {
        ColorSet t1(*diff.begin()), t2(*std::next(diff.begin()));
        step = mirror(t1, g) == t2 && !(t1 == t2);
      }
      if (!step) continue;
      const Cubillage& qu = cubs[inv_to_cub[u]];
      bool found = false;
      for (const SymmetricMove& mv : symmetric_flip_sites_odd_d(qu)) {
        if (mv.dir != Direction::raising) continue;
        if (inv_of_cub(apply_move(qu, mv)) == v) {
          found = true;
          break;
        }
      }
      if (!found) {
        covers_ok = false;
        rep.notes.push_back("missing flip for an inversion-set covering step");
      }
    }
  }
  for (std::size_t i = 0; i < cubs.size() && covers_ok; ++i) {
    for (const SymmetricMove& mv : symmetric_flip_sites_odd_d(cubs[i])) {
      if (mv.dir != Direction::raising) continue;
      InvSet ninv = inv_of_cub(apply_move(cubs[i], mv));
      InvSet diff;
      std::set_difference(ninv.begin(), ninv.end(), cub_inv[i].begin(), cub_inv[i].end(),
                          std::inserter(diff, diff.end()));
      const bool single =
          diff.size() == 1 && mirror(ColorSet(*diff.begin()), g) == ColorSet(*diff.begin());
      const bool star_pair =
          diff.size() == 2 && mirror(ColorSet(*diff.begin()), g) == ColorSet(*std::next(diff.begin()));
      if (!(class_set.count(ninv) && (single || star_pair))) {
        covers_ok = false;
        rep.notes.push_back("flip produced a non-covering inversion step");
      }
    }
  }
  rep.covers_match = covers_ok;
  return rep;
}

}  // namespace sepsys
