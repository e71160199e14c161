#include "chevalab/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace chevalab {

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad Lie type '" + s + "'");
  char f = s[0];
  if (f >= 'a' && f <= 'g') f = char(f - 'a' + 'A');
  int n = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad Lie type '" + s + "'");
    n = 10 * n + (s[i] - '0');
  }
  return LieType(f, n);
}

TypeVec TypeVec::parse(const std::string& s) {
  TypeVec tv;
  if (s == "1" || s.empty()) return tv;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == 'x') {
      tv.parts.push_back(LieType::parse(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return tv;
}

int positive_root_count(LieType t) {
  int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  throw std::logic_error("unreachable");
}

RootSystem::RootSystem(LieType t) : type_(t), rank_(t.rank) {
  build_cartan();
  generate_roots();
}

void RootSystem::build_cartan() {
  int n = rank_;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  d_.assign(n, 1);
  auto bond = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };

  switch (type_.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      cartan_[n - 2][n - 1] = -2;  // <a_{n-1}, a_n^vee>, a_n short
      for (int i = 0; i < n - 1; ++i) d_[i] = 2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      cartan_[n - 1][n - 2] = -2;  // a_n long
      d_[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2), bond(2, 3), bond(3, 4), bond(4, 5), bond(1, 3);
      if (n >= 7) bond(5, 6);
      if (n >= 8) bond(6, 7);
      break;
    case 'F':
      bond(0, 1), bond(1, 2), bond(2, 3);
      cartan_[1][2] = -2;  // a_1, a_2 long
      d_[0] = d_[1] = 2;
      break;
    case 'G':
      bond(0, 1);
      cartan_[1][0] = -3;  // a_2 long
      d_[1] = 3;
      break;
  }
}

void RootSystem::generate_roots() {
  int n = rank_;
  std::vector<Coeffs> layer;  // roots of current height
  std::map<Coeffs, bool> seen;
  for (int i = 0; i < n; ++i) {
    Coeffs c(n, 0);
    c[i] = 1;
    layer.push_back(c);
    seen[c] = true;
  }
  std::sort(layer.begin(), layer.end());
  roots_ = layer;

  while (!layer.empty()) {
    std::vector<Coeffs> next;
    for (const Coeffs& b : layer) {
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through b: b - q*a_i ... b + p*a_i with q - p = <b, a_i^vee>.
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += b[j] * cartan_[j][i];
        int q = 0;
        Coeffs down = b;
        for (;;) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (zero || !seen.count(down)) break;
          ++q;
        }
        if (q - pairing >= 1) {
          Coeffs up = b;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = true;
            next.push_back(up);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    roots_.insert(roots_.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  npos_ = int(roots_.size());
  if (npos_ != positive_root_count(type_))
    throw std::logic_error("root generation failed for " + type_.str());
  for (int i = 0; i < npos_; ++i) {
    Coeffs m = roots_[i];
    for (int& x : m) x = -x;
    roots_.push_back(m);
  }
  for (int i = 0; i < 2 * npos_; ++i) index_[roots_[i]] = i;

  halfnorm_.resize(2 * npos_);
  for (int i = 0; i < 2 * npos_; ++i) {
    long long f = form(roots_[i], roots_[i]);
    assert(f % 2 == 0);
    halfnorm_[i] = int(f / 2);
  }
  simple_.resize(n);
  for (int i = 0; i < n; ++i) {
    Coeffs c(n, 0);
    c[i] = 1;
    simple_[i] = index_.at(c);
  }
}

int RootSystem::id(const Coeffs& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int id) const {
  const Coeffs& c = roots_[id];
  return std::accumulate(c.begin(), c.end(), 0);
}

long long RootSystem::form(const Coeffs& a, const Coeffs& b) const {
  // (a_i, a_j) = d_j * cartan(i,j)
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j]) s += (long long)a[i] * b[j] * d_[j] * cartan_[i][j];
  }
  return s;
}

int RootSystem::pair_root(const Coeffs& beta, int gamma) const {
  long long f = form(beta, roots_[gamma]);
  int h = halfnorm_[gamma];
  if (f % h != 0) throw std::logic_error("non-integral root pairing");
  return int(f / h);
}

int RootSystem::pair_weight(const Weight& w, int gamma) const {
  const Coeffs& g = roots_[gamma];
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += (long long)w[j] * g[j] * d_[j];
  int h = halfnorm_[gamma];
  if (s % h != 0) throw std::logic_error("non-integral weight pairing");
  return int(s / h);
}

Weight RootSystem::to_weight(const Coeffs& c) const {
  Weight w(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += c[j] * cartan_[j][i];
  return w;
}

Coeffs RootSystem::coroot(int gamma) const {
  const Coeffs& g = roots_[gamma];
  int h = halfnorm_[gamma];
  Coeffs cv(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    int num = g[i] * d_[i];
    if (num % h != 0) throw std::logic_error("non-integral coroot");
    cv[i] = num / h;
  }
  return cv;
}

std::string RootSystem::label(int id) const {
  std::string s;
  if (id >= npos_) {
    s = "-";
    id -= npos_;
  }
  for (int x : roots_[id]) {
    if (x < 0 || x > 9) throw std::logic_error("coefficient out of digit range");
    s += char('0' + x);
  }
  return s;
}

int RootSystem::from_label(const std::string& s) const {
  bool negate = !s.empty() && s[0] == '-';
  std::string body = negate ? s.substr(1) : s;
  if (int(body.size()) != rank_) throw std::invalid_argument("root label '" + s + "': wrong rank");
  Coeffs c(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (body[i] < '0' || body[i] > '9')
      throw std::invalid_argument("root label '" + s + "': bad digit");
    c[i] = (body[i] - '0') * (negate ? -1 : 1);
  }
  int r = id(c);
  if (r < 0) throw std::invalid_argument("'" + s + "' is not a root of " + type_.str());
  return r;
}

int RootSystem::reflect_simple(int i, int id) const {
  return reflect(simple_[i], id);
}

Weight RootSystem::reflect_simple(int i, const Weight& w) const {
  Weight r = w;
  int wi = w[i];
  for (int j = 0; j < rank_; ++j) r[j] -= wi * cartan_[i][j];
  return r;
}

int RootSystem::reflect(int gamma, int id) const {
  int k = pair_root(roots_[id], gamma);
  if (k == 0) return id;
  Coeffs c = roots_[id];
  const Coeffs& g = roots_[gamma];
  for (int j = 0; j < rank_; ++j) c[j] -= k * g[j];
  return index_.at(c);
}

}  // namespace chevalab
