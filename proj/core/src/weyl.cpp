#include "chevalab/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalab {

WeylWord WeylWord::parse(const std::string& s) {
  WeylWord w;
  int cur = -1;
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      if (cur >= 0) w.letters.push_back(cur - 1), cur = -1;
    } else {
      throw std::invalid_argument("bad Weyl word '" + s + "'");
    }
  }
  if (cur >= 0) w.letters.push_back(cur - 1);
  for (int l : w.letters)
    if (l < 0) throw std::invalid_argument("Weyl word letters are 1-based");
  return w;
}

std::string WeylWord::str() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(letters[i] + 1);
  }
  return s;
}

RefWord RefWord::parse(const RootSystem& rs, const std::string& s) {
  RefWord w;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    for (size_t i = 0; i < tok.size(); ++i)
      if (!(tok[i] >= '0' && tok[i] <= '9') && !(i == 0 && tok[i] == '-'))
        throw std::invalid_argument("bad reflection letter '" + tok + "'");
    size_t digits = tok.size() - (tok[0] == '-' ? 1 : 0);
    if ((int)digits == rs.rank()) {
      w.gammas.push_back(rs.from_label(tok));
    } else {
      int i = std::stoi(tok);
      if (i < 1 || i > rs.rank())
        throw std::invalid_argument("bad reflection letter '" + tok + "'");
      w.gammas.push_back(rs.simple(i - 1));
    }
    tok.clear();
  };
  for (char ch : s) {
    if (ch == ' ' || ch == ',' || ch == '\t')
      flush();
    else
      tok += ch;
  }
  flush();
  return w;
}

std::string RefWord::str(const RootSystem& rs) const {
  std::string s;
  for (size_t i = 0; i < gammas.size(); ++i) {
    if (i) s += " ";
    s += rs.label(gammas[i]);
  }
  return s;
}

RefWord RefWord::inverse() const {
  RefWord w = *this;
  std::reverse(w.gammas.begin(), w.gammas.end());
  return w;
}

int Weyl::act(const RefWord& w, int root_id) const {
  int r = root_id;
  for (auto it = w.gammas.rbegin(); it != w.gammas.rend(); ++it) r = rs_.reflect(*it, r);
  return r;
}

bool Weyl::maps_levi(const RefWord& w, const std::vector<int>& J1, const std::vector<int>& J2) const {
  auto subsystem = [&](const std::vector<int>& J) {
    std::vector<char> in(rs_.rank(), 0);
    for (int j : J) in.at(j) = 1;
    std::set<int> s;
    for (int r = 0; r < rs_.size(); ++r) {
      const Coeffs& c = rs_.root(r);
      bool ok = true;
      for (int i = 0; i < rs_.rank() && ok; ++i)
        if (c[i] != 0 && !in[i]) ok = false;
      if (ok) s.insert(r);
    }
    return s;
  };
  std::set<int> image;
  for (int r : subsystem(J1)) image.insert(act(w, r));
  return image == subsystem(J2);
}

int Weyl::act(const WeylWord& w, int root_id) const {
  int r = root_id;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = rs_.reflect_simple(*it, r);
  return r;
}

Weight Weyl::act(const WeylWord& w, const Weight& v) const {
  Weight r = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = rs_.reflect_simple(*it, r);
  return r;
}

int Weyl::length(const WeylWord& w) const {
  int n = 0;
  for (int i = 0; i < rs_.npos(); ++i)
    if (!rs_.is_positive(act(w, i))) ++n;
  return n;
}

bool Weyl::is_identity(const WeylWord& w) const {
  for (int i = 0; i < rs_.rank(); ++i)
    if (act(w, rs_.simple(i)) != rs_.simple(i)) return false;
  return true;
}

bool Weyl::equal(const WeylWord& a, const WeylWord& b) const {
  for (int i = 0; i < rs_.rank(); ++i)
    if (act(a, rs_.simple(i)) != act(b, rs_.simple(i))) return false;
  return true;
}

WeylWord Weyl::longest_element() const {
  std::vector<int> all(rs_.rank());
  for (int i = 0; i < rs_.rank(); ++i) all[i] = i;
  return longest_element(all);
}

WeylWord Weyl::longest_element(const std::vector<int>& J) const {
  // Descend rho_J to its antidominant chamber; the reflections applied,
  // read in reverse, spell the longest element of W_J.
  Weight v(rs_.rank(), 0);
  for (int j : J) v[j] = 1;
  std::vector<int> applied;
  for (;;) {
    int pick = -1;
    for (int j : J)
      if (v[j] > 0) {
        pick = j;
        break;
      }
    if (pick < 0) break;
    v = rs_.reflect_simple(pick, v);
    applied.push_back(pick);
  }
  std::reverse(applied.begin(), applied.end());
  return WeylWord(std::move(applied));
}

std::vector<int> Weyl::neg_w0_perm() const {
  WeylWord w0 = longest_element();
  std::vector<int> p(rs_.rank());
  for (int i = 0; i < rs_.rank(); ++i) {
    int img = rs_.neg(act(w0, rs_.simple(i)));
    bool found = false;
    for (int j = 0; j < rs_.rank(); ++j)
      if (rs_.simple(j) == img) {
        p[i] = j;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("w0 does not permute the simples up to sign");
  }
  return p;
}

std::set<Weight> Weyl::orbit(const Weight& w) const {
  std::set<Weight> seen{w};
  std::vector<Weight> work{w};
  while (!work.empty()) {
    Weight v = work.back();
    work.pop_back();
    for (int i = 0; i < rs_.rank(); ++i) {
      if (v[i] == 0) continue;
      Weight u = rs_.reflect_simple(i, v);
      if (seen.insert(u).second) work.push_back(u);
    }
  }
  return seen;
}

Weight Weyl::dominant(const Weight& w) const {
  Weight v = w;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < rs_.rank(); ++i)
      if (v[i] < 0) {
        pick = i;
        break;
      }
    if (pick < 0) return v;
    v = rs_.reflect_simple(pick, v);
  }
}

uint64_t weyl_order(LieType t) {
  uint64_t n = t.rank;
  auto fact = [](uint64_t k) {
    uint64_t f = 1;
    for (uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (t.family) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (uint64_t(1) << n) * fact(n);
    case 'D': return (uint64_t(1) << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840ull : (n == 7 ? 2903040ull : 696729600ull);
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::logic_error("unreachable");
}

uint64_t Weyl::order() const { return weyl_order(rs_.type()); }

}  // namespace chevalab
