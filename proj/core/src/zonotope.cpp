#include "sepsys/zonotope.hpp"

#include <mutex>
#include <set>
#include <sstream>

namespace sepsys {

namespace {

// Determinant by fraction-free Gaussian elimination (Bareiss).
Int determinant(std::vector<std::vector<Int>> a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  Int sign = 1, prev = 1;
  for (int col = 0; col < k - 1; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      sign = -sign;
    }
    for (int r = col + 1; r < k; ++r) {
      for (int c = col + 1; c < k; ++c)
        a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[col][col];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace

CyclicConfiguration::CyclicConfiguration(int n, int d, std::vector<long long> t)
    : n_(n), d_(d), ground_(n), t_(std::move(t)) {
  if (d < 1 || n < d) throw std::invalid_argument("CyclicConfiguration: need n >= d >= 1");
  if (static_cast<int>(t_.size()) != n)
    throw std::invalid_argument("CyclicConfiguration: |t| != n");
  for (int i = 1; i < n; ++i)
    if (t_[i - 1] >= t_[i]) throw std::invalid_argument("CyclicConfiguration: t must increase");
  for (int i = 1; i <= n; ++i)
    if (t_[i - 1] != -t_[ground_.comp(i) - 1])
      throw std::invalid_argument("CyclicConfiguration: t_{i°} != -t_i");
  gen_.resize(n);
  for (int i = 0; i < n; ++i) {
    gen_[i].resize(d);
    Int p = 1;
    for (int j = 0; j < d; ++j) {
      gen_[i][j] = p;
      p *= t_[i];
    }
  }
  verify_flag_minors();
  // For d <= 2 the symmetric-t condition forces collisions ({i,i°} pairs all
  // embed to the same point), so the guard only applies from d = 3 up.
  if (d >= 3 && n <= 12) verify_injective_embedding();
  // Precompute facet normals for all (d-1)-subsets.
  std::vector<int> comb(d - 1);
  if (d - 1 == 0) {
    normals_[0] = compute_normal(ColorSet());
  } else {
    for (int i = 0; i < d - 1; ++i) comb[i] = i + 1;
    while (true) {
      ColorSet S;
      for (int c : comb) S = S.with(c);
      normals_[S.bits()] = compute_normal(S);
      int i = d - 2;
      while (i >= 0 && comb[i] == n - (d - 2 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
}

void CyclicConfiguration::verify_flag_minors() const {
  // Flag minors: first k rows x any ascending k columns, k = 1..d.
  for (int k = 1; k <= d_; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    while (true) {
      std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m[r][c] = gen_[comb[c] - 1][r];
      if (determinant(std::move(m)) <= 0)
        throw std::invalid_argument("CyclicConfiguration: non-positive flag minor");
      int i = k - 1;
      while (i >= 0 && comb[i] == n_ - (k - 1 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
}

void CyclicConfiguration::verify_injective_embedding() const {
  std::set<std::vector<Int>> seen;
  const Bits full = ground_.mask();
  for (Bits b = 0;; ++b) {
    std::vector<Int> p(d_, 0);
    for (int i = 1; i <= n_; ++i)
      if ((b >> (i - 1)) & 1u)
        for (int j = 0; j < d_; ++j) p[j] += gen_[i - 1][j];
    if (!seen.insert(std::move(p)).second)
      throw std::invalid_argument("CyclicConfiguration: 0/1-combinations collide");
    if (b == full) break;
  }
}

std::vector<Int> CyclicConfiguration::compute_normal(ColorSet S) const {
  if (S.size() != d_ - 1) throw std::invalid_argument("front_normal: |S| != d-1");
  // Cofactor expansion of the (d-1) x d matrix with rows ξ_s.
  std::vector<int> cols = S.elements();
  std::vector<Int> h(d_);
  for (int j = 0; j < d_; ++j) {
    std::vector<std::vector<Int>> m(d_ - 1, std::vector<Int>(d_ - 1));
    for (int r = 0; r < d_ - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < d_; ++c) {
        if (c == j) continue;
        m[r][cc++] = gen_[cols[r] - 1][c];
      }
    }
    Int minor = determinant(std::move(m));
    h[j] = (j % 2 == 0) ? minor : -minor;
  }
  if (h[d_ - 1] == 0) throw std::logic_error("front_normal: degenerate span");
  if (h[d_ - 1] > 0)
    for (auto& x : h) x = -x;
  return h;
}

const std::vector<Int>& CyclicConfiguration::front_normal(ColorSet S) const {
  auto it = normals_.find(S.bits());
  if (it == normals_.end()) throw std::invalid_argument("front_normal: unknown facet type");
  return it->second;
}

int CyclicConfiguration::dot_sign(ColorSet S, int color) const {
  const auto& h = front_normal(S);
  const auto& xi = gen_[color - 1];
  Int dot = 0;
  for (int j = 0; j < d_; ++j) dot += h[j] * xi[j];
  return dot > 0 ? 1 : dot < 0 ? -1 : 0;
}

int CyclicConfiguration::first_coord_sign(ColorSet S) const {
  const auto& h = front_normal(S);
  return h[0] > 0 ? 1 : h[0] < 0 ? -1 : 0;
}

namespace {
std::map<std::pair<int, int>, CfgPtr>& cfg_cache() {
  static std::map<std::pair<int, int>, CfgPtr> cache;
  return cache;
}
std::mutex cfg_mutex;
}  // namespace

CfgPtr make_configuration(int n, int d) {
  std::lock_guard<std::mutex> lock(cfg_mutex);
  auto& cache = cfg_cache();
  auto it = cache.find({n, d});
  if (it != cache.end()) return it->second;
  std::vector<long long> t(n);
  for (int i = 1; i <= n; ++i) t[i - 1] = 2LL * i - n - 1;
  auto cfg = std::make_shared<const CyclicConfiguration>(n, d, std::move(t));
  cache[{n, d}] = cfg;
  return cfg;
}

CfgPtr make_configuration(int n, int d, std::vector<long long> t) {
  return std::make_shared<const CyclicConfiguration>(n, d, std::move(t));
}

Point embed(ColorSet X, const CyclicConfiguration& cfg) {
  Point p;
  p.coords.assign(cfg.d(), 0);
  for (int c : X.elements()) {
    const auto& xi = cfg.generator(c);
    for (int j = 0; j < cfg.d(); ++j) p.coords[j] += xi[j];
  }
  return p;
}

namespace {
std::vector<Cube> boundary_facets(const CyclicConfiguration& cfg, bool front) {
  std::vector<Cube> out;
  const int n = cfg.n(), d = cfg.d();
  std::vector<int> comb(d - 1);
  auto emit = [&](ColorSet S) {
    ColorSet X;
    for (int i = 1; i <= n; ++i) {
      if (S.contains(i)) continue;
      int s = cfg.dot_sign(S, i);
      if ((front && s > 0) || (!front && s < 0)) X = X.with(i);
    }
    out.push_back(Cube{X, S});
  };
  if (d == 1) {
    emit(ColorSet());
  } else {
    for (int i = 0; i < d - 1; ++i) comb[i] = i + 1;
    while (true) {
      ColorSet S;
      for (int c : comb) S = S.with(c);
      emit(S);
      int i = d - 2;
      while (i >= 0 && comb[i] == n - (d - 2 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end(), CubeLess{});
  return out;
}
}  // namespace

std::vector<Cube> front_facets(const CyclicConfiguration& cfg) { return boundary_facets(cfg, true); }
std::vector<Cube> rear_facets(const CyclicConfiguration& cfg) { return boundary_facets(cfg, false); }

FacetPair cube_facets(const CyclicConfiguration& cfg, const Cube& c, int t) {
  if (!c.type.contains(t)) throw std::invalid_argument("cube_facets: t not in type");
  ColorSet S = c.type.without(t);
  int s = cfg.dot_sign(S, t);
  Cube at_bottom{c.bottom, S};
  Cube shifted{c.bottom.with(t), S};
  // The facet maximizing h·x for the front normal h (h_last < 0) is the
  // front one; it picks up ξ_t exactly when h·ξ_t > 0.
  if (s > 0) return {shifted, at_bottom};
  return {at_bottom, shifted};
}

UpLowPair cube_facets_updown(const CyclicConfiguration& cfg, const Cube& c, int t) {
  if (!c.type.contains(t)) throw std::invalid_argument("cube_facets_updown: t not in type");
  ColorSet S = c.type.without(t);
  int fs = cfg.first_coord_sign(S);
  if (fs == 0) throw std::logic_error("cube_facets_updown: facet parallel to ξ_0");
  int s = cfg.dot_sign(S, t) * fs;  // sign of g·ξ_t for g with g(1) > 0
  Cube at_bottom{c.bottom, S};
  Cube shifted{c.bottom.with(t), S};
  if (s > 0) return {shifted, at_bottom};
  return {at_bottom, shifted};
}

}  // namespace sepsys
