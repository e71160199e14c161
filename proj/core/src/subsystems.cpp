#include "chevalab/subsystems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chevalab {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LieType classify_component(const RootSystem& rs, const std::vector<int>& comp) {
  int m = int(comp.size());
  if (m == 1) return LieType('A', 1);

  std::vector<std::vector<int>> adj(m);
  bool dbl = false, triple = false;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      int c = rs.pair_root(rs.root(comp[a]), comp[b]);
      if (c > 0) throw std::logic_error("acute pair in a claimed base");
      if (c == 0) continue;
      adj[a].push_back(b);
      if (c == -2) dbl = true;
      if (c == -3) triple = true;
    }

  if (triple) {
    if (m != 2) throw std::logic_error("triple bond in a component of rank > 2");
    return LieType('G', 2);
  }

  int branches = 0;
  for (int v = 0; v < m; ++v) {
    if (adj[v].size() > 3) throw std::logic_error("diagram degree > 3");
    if (adj[v].size() == 3) ++branches;
  }

  if (dbl) {
    if (branches) throw std::logic_error("double bond with a branch node");
    int maxhn = 0;
    for (int v : comp) maxhn = std::max(maxhn, rs.halfnorm(v));
    int shorts = 0;
    for (int v : comp)
      if (rs.halfnorm(v) < maxhn) ++shorts;
    if (m == 2) return LieType('B', 2);
    if (m == 4 && shorts == 2) return LieType('F', 4);
    if (shorts == 1) return LieType('B', m);
    if (shorts == m - 1) return LieType('C', m);
    throw std::logic_error("unrecognized multiply-laced path");
  }

  if (branches == 0) return LieType('A', m);
  if (branches != 1) throw std::logic_error("more than one branch node");

  int t = -1;
  for (int v = 0; v < m; ++v)
    if (adj[v].size() == 3) t = v;
  std::vector<size_t> arms;
  for (int s : adj[t]) {
    size_t len = 1;
    int prev = t, cur = s;
    for (;;) {
      int nxt = -1;
      for (int v : adj[cur])
        if (v != prev) nxt = v;
      if (nxt < 0) break;
      ++len;
      prev = cur, cur = nxt;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return LieType('D', m);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return LieType('E', m);
  throw std::logic_error("unrecognized branched diagram");
}

TypeVec canonical(std::vector<LieType> parts) {
  std::sort(parts.begin(), parts.end());
  TypeVec tv;
  tv.parts = std::move(parts);
  return tv;
}

// split a base into connected components and classify each
TypeVec classify(const RootSystem& rs, const std::vector<int>& base) {
  int m = int(base.size());
  std::vector<char> seen(m, 0);
  std::vector<LieType> parts;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t k = 0; k < comp.size(); ++k)
      for (int b = 0; b < m; ++b)
        if (!seen[b] && rs.pair_root(rs.root(base[comp[k]]), base[b]) != 0) {
          seen[b] = 1;
          comp.push_back(b);
        }
    std::vector<int> ids;
    for (int idx : comp) ids.push_back(base[idx]);
    parts.push_back(classify_component(rs, ids));
  }
  return canonical(std::move(parts));
}

}  // namespace

TypeVec classify_base(const RootSystem& rs, const std::vector<int>& base) {
  return classify(rs, base);
}

std::vector<TypeVec> subsystems_maximal(const RootSystem& rs) {
  std::set<TypeVec> out;
  const Coeffs& marks = rs.root(rs.highest_root());
  int lowest = rs.neg(rs.highest_root());
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> base;
    if (is_prime(marks[i])) {
      base.push_back(lowest);
      for (int j = 0; j < rs.rank(); ++j)
        if (j != i) base.push_back(rs.simple(j));
      out.insert(classify(rs, base));
    }
    base.clear();
    for (int j = 0; j < rs.rank(); ++j)
      if (j != i) base.push_back(rs.simple(j));
    if (!base.empty()) out.insert(classify(rs, base));
  }
  return {out.begin(), out.end()};
}

std::set<TypeVec> subsystem_closure(const TypeVec& t) {
  std::set<TypeVec> seen;
  std::vector<TypeVec> work{canonical(t.parts)};
  seen.insert(work[0]);
  while (!work.empty()) {
    TypeVec cur = work.back();
    work.pop_back();
    for (size_t c = 0; c < cur.parts.size(); ++c) {
      RootSystem sub(cur.parts[c]);
      std::vector<TypeVec> images;
      const Coeffs& marks = sub.root(sub.highest_root());
      for (int i = 0; i < sub.rank(); ++i) {
        std::vector<int> base;
        if (is_prime(marks[i])) {
          base.push_back(sub.neg(sub.highest_root()));
          for (int j = 0; j < sub.rank(); ++j)
            if (j != i) base.push_back(sub.simple(j));
          images.push_back(classify(sub, base));
        }
        base.clear();
        for (int j = 0; j < sub.rank(); ++j)
          if (j != i) base.push_back(sub.simple(j));
        images.push_back(classify(sub, base));  // empty base = trivial type
      }
      for (const TypeVec& img : images) {
        std::vector<LieType> parts;
        for (size_t k = 0; k < cur.parts.size(); ++k)
          if (k != c) parts.push_back(cur.parts[k]);
        parts.insert(parts.end(), img.parts.begin(), img.parts.end());
        TypeVec next = canonical(std::move(parts));
        if (seen.insert(next).second) work.push_back(next);
      }
    }
  }
  return seen;
}

std::vector<TypeVec> subsystems_dominant(const RootSystem& rs) {
  std::vector<TypeVec> cand = subsystems_maximal(rs);
  std::vector<std::set<TypeVec>> closures;
  closures.reserve(cand.size());
  for (const TypeVec& t : cand) closures.push_back(subsystem_closure(t));
  std::vector<TypeVec> out;
  for (size_t i = 0; i < cand.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cand.size() && !dominated; ++j)
      if (j != i && closures[j].count(cand[i])) dominated = true;
    if (!dominated) out.push_back(cand[i]);
  }
  return out;
}

}  // namespace chevalab
