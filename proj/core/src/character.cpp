#include "chevalab/character.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace chevalab {

namespace {

using Mat = std::vector<std::vector<long long>>;

long long det(Mat a) {  // Bareiss, exact for integer matrices
  int n = int(a.size());
  long long prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Mat adjugate(const Mat& a) {
  int n = int(a.size());
  Mat adj(n, std::vector<long long>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor(n - 1, std::vector<long long>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = a[r][c];
        }
        ++rr;
      }
      adj[j][i] = ((i + j) % 2 ? -1 : 1) * det(minor);
    }
  return adj;
}

// Scaled inner product machinery for one simple factor.
struct ScaledForm {
  const RootSystem& rs;
  Mat adjAT;  // adjugate of the transposed Cartan matrix
  long long scale;

  explicit ScaledForm(const RootSystem& r) : rs(r) {
    int n = rs.rank();
    Mat at(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at[i][j] = rs.cartan(j, i);
    scale = det(at);
    adjAT = adjugate(at);
  }

  // scale * (mu, nu) for weights in fundamental coordinates
  Int form(const Weight& mu, const Weight& nu) const {
    int n = rs.rank();
    Int s = 0;
    for (int i = 0; i < n; ++i) {
      if (!mu[i]) continue;
      long long ci = 0;
      for (int j = 0; j < n; ++j) ci += adjAT[i][j] * nu[j];
      s += Int(mu[i]) * rs.d(i) * ci;
    }
    return s;
  }
};

Weight add(const Weight& a, const Weight& b, int k) {
  Weight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
  return r;
}

Weight make_dominant(const RootSystem& rs, Weight w) {
  for (;;) {
    int pick = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (w[i] < 0) {
        pick = i;
        break;
      }
    if (pick < 0) return w;
    w = rs.reflect_simple(pick, w);
  }
}

}  // namespace

std::map<Weight, Int> freudenthal(const RootSystem& rs, const Weight& lam) {
  int n = rs.rank();
  ScaledForm sf(rs);
  Weight rho(n, 1);
  Int norm_lam = sf.form(lam, lam);
  Int norm_lam_rho = sf.form(add(lam, rho, 1), add(lam, rho, 1));

  // candidate region: lam - (nonneg root combinations), inside the norm ball
  std::map<Weight, int> depth;  // weight -> sum of subtracted simples
  std::queue<Weight> bfs;
  depth[lam] = 0;
  bfs.push(lam);
  while (!bfs.empty()) {
    Weight w = bfs.front();
    bfs.pop();
    int dnext = depth[w] + 1;
    for (int i = 0; i < n; ++i) {
      Weight u = w;
      for (int j = 0; j < n; ++j) u[j] -= rs.cartan(i, j);
      if (sf.form(u, u) > norm_lam) continue;
      auto [it, fresh] = depth.try_emplace(u, dnext);
      if (fresh) bfs.push(u);
    }
  }

  std::vector<std::pair<int, Weight>> dominants;
  for (auto& [w, d] : depth)
    if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; }))
      dominants.push_back({d, w});
  std::sort(dominants.begin(), dominants.end());

  std::vector<Weight> posw(rs.npos());
  for (int a = 0; a < rs.npos(); ++a) posw[a] = rs.to_weight(rs.root(a));

  std::map<Weight, Int> md;  // dominant weight -> multiplicity
  for (auto& [d, mu] : dominants) {
    if (mu == lam) {
      md[mu] = 1;
      continue;
    }
    Int S = 0;
    for (int a = 0; a < rs.npos(); ++a) {
      for (int k = 1;; ++k) {
        Weight nu = add(mu, posw[a], k);
        auto it = md.find(make_dominant(rs, nu));
        if (it == md.end()) break;
        if (it->second != 0) S += it->second * sf.form(nu, posw[a]);
      }
    }
    Int denom = norm_lam_rho - sf.form(add(mu, rho, 1), add(mu, rho, 1));
    if (denom <= 0) throw std::logic_error("freudenthal: bad denominator");
    Int m2 = 2 * S;
    if (m2 % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    md[mu] = m2 / denom;
  }

  // expand Weyl orbits to the full weight map
  std::map<Weight, Int> full;
  Weyl w(rs);
  for (auto& [mu, m] : md) {
    if (m == 0) continue;
    for (auto& nu : w.orbit(mu)) full[nu] = m;
  }
  return full;
}

Int Character::dim() const {
  Int s = 0;
  for (auto& [w, c] : m) s += c;
  return s;
}

Int Character::mult(const Weight& w) const {
  auto it = m.find(w);
  return it == m.end() ? Int(0) : it->second;
}

void Character::trim() {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

Character& Character::operator+=(const Character& o) {
  if (rank != o.rank) throw std::invalid_argument("character rank mismatch");
  for (auto& [w, c] : o.m) m[w] += c;
  trim();
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (rank != o.rank) throw std::invalid_argument("character rank mismatch");
  for (auto& [w, c] : o.m) m[w] -= c;
  trim();
  return *this;
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  r += o;
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r = *this;
  r -= o;
  return r;
}

Character Character::operator*(const Character& o) const {
  if (rank != o.rank) throw std::invalid_argument("character rank mismatch");
  Character r;
  r.rank = rank;
  for (auto& [w1, c1] : m)
    for (auto& [w2, c2] : o.m) r.m[add(w1, w2, 1)] += c1 * c2;
  r.trim();
  return r;
}

Character Character::dual() const {
  Character r;
  r.rank = rank;
  for (auto& [w, c] : m) {
    Weight u = w;
    for (int& x : u) x = -x;
    r.m[u] = c;
  }
  return r;
}

Character Character::twist(int s) const {
  Character r;
  r.rank = rank;
  for (auto& [w, c] : m) {
    Weight u = w;
    for (int& x : u) x *= s;
    r.m[u] += c;
  }
  r.trim();
  return r;
}

Character Character::power(int k) const {
  Character r = trivial(rank);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Character Character::trivial(int rank) {
  Character r;
  r.rank = rank;
  r.m[Weight(rank, 0)] = 1;
  return r;
}

namespace {
Character div_exact(Character c, int k) {
  for (auto& [w, v] : c.m) {
    if (v % k != 0) throw std::logic_error("inexact division in power-sum recursion");
    v /= k;
  }
  return c;
}
}  // namespace

Character exterior_power(const Character& c, int k) {
  std::vector<Character> e{Character::trivial(c.rank)};
  for (int j = 1; j <= k; ++j) {
    Character acc;
    acc.rank = c.rank;
    for (int i = 1; i <= j; ++i) {
      Character term = e[j - i] * c.twist(i);
      if (i % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    e.push_back(div_exact(acc, j));
  }
  return e[k];
}

Character sym_power(const Character& c, int k) {
  std::vector<Character> h{Character::trivial(c.rank)};
  for (int j = 1; j <= k; ++j) {
    Character acc;
    acc.rank = c.rank;
    for (int i = 1; i <= j; ++i) acc += h[j - i] * c.twist(i);
    h.push_back(div_exact(acc, j));
  }
  return h[k];
}

Context::Context(const TypeVec& t) : type_(t) {
  for (auto& p : t.parts) {
    fac_.emplace_back(p);
    off_.push_back(rank_);
    rank_ += p.rank;
  }
}

Weight Context::slice(const Weight& w, size_t f) const {
  return Weight(w.begin() + off_[f], w.begin() + off_[f] + fac_[f].rank());
}

Weight Context::unslice(const std::vector<Weight>& parts) const {
  Weight w;
  for (auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

bool Context::is_dominant(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

Weight Context::dominant(const Weight& w) const {
  std::vector<Weight> parts;
  for (size_t f = 0; f < fac_.size(); ++f) parts.push_back(make_dominant(fac_[f], slice(w, f)));
  return unslice(parts);
}

Character Context::weyl_char(const Weight& lam) const {
  if (int(lam.size()) != rank_) throw std::invalid_argument("weight rank mismatch");
  if (!is_dominant(lam)) throw std::invalid_argument("weyl_char needs a dominant weight");
  Character r = Character::trivial(0);
  r.rank = 0;
  for (size_t f = 0; f < fac_.size(); ++f) {
    auto part = freudenthal(fac_[f], slice(lam, f));
    Character next;
    next.rank = r.rank + fac_[f].rank();
    for (auto& [w1, c1] : r.m)
      for (auto& [w2, c2] : part) {
        Weight w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        next.m[w] = c1 * c2;
      }
    r = std::move(next);
  }
  r.rank = rank_;
  return r;
}

Int Context::weyl_dim(const Weight& lam) const {
  if (!is_dominant(lam)) throw std::invalid_argument("weyl_dim needs a dominant weight");
  Int num = 1, den = 1;
  for (size_t f = 0; f < fac_.size(); ++f) {
    const RootSystem& rs = fac_[f];
    Weight lf = slice(lam, f), rho(rs.rank(), 1), lr = lf;
    for (int i = 0; i < rs.rank(); ++i) lr[i] += 1;
    for (int a = 0; a < rs.npos(); ++a) {
      num *= rs.pair_weight(lr, a);
      den *= rs.pair_weight(rho, a);
    }
  }
  if (num % den != 0) throw std::logic_error("weyl_dim: inexact division");
  return num / den;
}

std::map<Weight, Int> Context::decompose_weyl(Character c) const {
  // linear functional positive on positive roots, used to find maximal weights
  std::vector<std::vector<long long>> rows;  // per factor: 1^T adj(A^T), rescaled
  long long lcm = 1;
  std::vector<long long> scales;
  for (auto& rs : fac_) {
    ScaledForm sf(rs);
    scales.push_back(sf.scale);
    lcm = lcm / std::gcd(lcm, sf.scale) * sf.scale;
    std::vector<long long> row(rs.rank(), 0);
    for (int j = 0; j < rs.rank(); ++j)
      for (int i = 0; i < rs.rank(); ++i) row[j] += sf.adjAT[i][j];
    rows.push_back(row);
  }
  auto height = [&](const Weight& w) {
    long long h = 0;
    for (size_t f = 0; f < fac_.size(); ++f) {
      long long hf = 0;
      for (int j = 0; j < fac_[f].rank(); ++j) hf += rows[f][j] * w[off_[f] + j];
      h += hf * (lcm / scales[f]);
    }
    return h;
  };

  std::map<Weight, Int> out;
  std::map<Weight, Character> cache;
  c.trim();
  while (!c.m.empty()) {
    auto top = c.m.begin();
    long long best = height(top->first);
    for (auto it = c.m.begin(); it != c.m.end(); ++it) {
      long long h = height(it->first);
      if (h > best || (h == best && it->first > top->first)) top = it, best = h;
    }
    Weight mu = top->first;
    if (!is_dominant(mu))
      throw std::logic_error("decompose_weyl: maximal weight is not dominant");
    Int coeff = top->second;
    auto [it, fresh] = cache.try_emplace(mu);
    if (fresh) it->second = weyl_char(mu);
    Character sub = it->second;
    for (auto& [w, v] : sub.m) c.m[w] -= coeff * v;
    c.trim();
    out[mu] += coeff;
  }
  return out;
}

}  // namespace chevalab
